#include "quadrep/exact/rational.hpp"

#include <cctype>

#include "quadrep/error.hpp"

namespace quadrep {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

mpz_class parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_text(s)) fail(ErrorCode::Format, "malformed rational '" + std::string(whole) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(ErrorCode::InvalidArgument, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), mpz_class(1));
  const mpz_class num = parse_integer(text.substr(0, slash), text);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    fail(ErrorCode::Format, "sign belongs on the numerator in '" + std::string(text) + "'");
  const mpz_class den = parse_integer(den_text, text);
  if (den == 0) fail(ErrorCode::Format, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  if (norm.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero");
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

GaussianRational GaussianRational::parse(std::string_view text) {
  if (text.size() < 2 || text.substr(text.size() - 2) != "*i") return GaussianRational(Rational::parse(text));
  const auto body = text.substr(0, text.size() - 2);
  // The separator is the first '+' or '-' after position 0 that is not part of a "+-".
  std::size_t split = std::string_view::npos;
  for (std::size_t i = 1; i < body.size(); ++i) {
    if (body[i] == '+' || body[i] == '-') {
      split = i;
      break;
    }
  }
  if (split == std::string_view::npos) return {Rational(0), Rational::parse(body)};
  const Rational re = Rational::parse(body.substr(0, split));
  auto im_text = body.substr(split);
  if (im_text.front() == '+') im_text.remove_prefix(1);
  return {re, Rational::parse(im_text)};
}

std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  return re_.str() + "+" + im_.str() + "*i";
}

GaussianRational pow(GaussianRational base, unsigned exponent) {
  GaussianRational result(1);
  while (exponent) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent) base *= base;
  }
  return result;
}

}  // namespace quadrep
