#include "quadrep/exact/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "quadrep/error.hpp"

namespace quadrep {

bool grlex_before(std::span<const Exponent> a, std::span<const Exponent> b) {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

unsigned total_degree(std::span<const Exponent> exponents) {
  return std::accumulate(exponents.begin(), exponents.end(), 0u);
}

namespace {

// Open-addressing accumulator keyed by exponent vectors stored inline.
class MonomialTable {
 public:
  explicit MonomialTable(std::size_t nvars, std::size_t expected = 16) : nvars_(nvars) {
    std::size_t cap = 16;
    while (cap < 2 * expected) cap <<= 1;
    slots_.assign(cap, -1);
    keys_.reserve(expected * nvars);
    vals_.reserve(expected);
  }

  GaussianRational& at(std::span<const Exponent> key) {
    if (2 * (vals_.size() + 1) > slots_.size()) grow();
    std::size_t mask = slots_.size() - 1;
    std::size_t h = hash(key) & mask;
    while (slots_[h] >= 0) {
      if (std::equal(key.begin(), key.end(), keys_.begin() + static_cast<std::ptrdiff_t>(slots_[h] * nvars_)))
        return vals_[static_cast<std::size_t>(slots_[h])];
      h = (h + 1) & mask;
    }
    slots_[h] = static_cast<std::int64_t>(vals_.size());
    keys_.insert(keys_.end(), key.begin(), key.end());
    vals_.emplace_back();
    return vals_.back();
  }

  std::vector<Polynomial::Term> take_terms() {
    std::vector<Polynomial::Term> terms;
    terms.reserve(vals_.size());
    for (std::size_t i = 0; i < vals_.size(); ++i) {
      if (vals_[i].is_zero()) continue;
      terms.push_back({ExponentVector(keys_.begin() + static_cast<std::ptrdiff_t>(i * nvars_),
                                      keys_.begin() + static_cast<std::ptrdiff_t>((i + 1) * nvars_)),
                       std::move(vals_[i])});
    }
    return terms;
  }

 private:
  static std::size_t hash(std::span<const Exponent> key) {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (Exponent e : key) {
      h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
      h *= 0xff51afd7ed558ccdull;
    }
    return static_cast<std::size_t>(h ^ (h >> 33));
  }

  void grow() {
    std::vector<std::int64_t> fresh(slots_.size() * 2, -1);
    const std::size_t mask = fresh.size() - 1;
    for (std::size_t i = 0; i < vals_.size(); ++i) {
      std::size_t h = hash({keys_.data() + i * nvars_, nvars_}) & mask;
      while (fresh[h] >= 0) h = (h + 1) & mask;
      fresh[h] = static_cast<std::int64_t>(i);
    }
    slots_ = std::move(fresh);
  }

  std::size_t nvars_;
  std::vector<std::int64_t> slots_;
  std::vector<Exponent> keys_;
  std::vector<GaussianRational> vals_;
};

void require_same_nvars(const Polynomial& a, const Polynomial& b) {
  if (a.nvars() != b.nvars())
    fail(ErrorCode::DimensionMismatch, "polynomials in " + std::to_string(a.nvars()) + " and " +
                                           std::to_string(b.nvars()) + " variables");
}

// Gaussian integer used by the exact evaluator after clearing denominators.
struct GaussInt {
  mpz_class re{0};
  mpz_class im{0};

  GaussInt& operator*=(const GaussInt& o) {
    if (im == 0 && o.im == 0) {
      re *= o.re;
      return *this;
    }
    mpz_class r = re * o.re - im * o.im;
    mpz_class i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
};

mpz_class lcm_den(const mpz_class& acc, const Rational& r) {
  mpz_class out;
  const mpz_class d = r.denominator();
  mpz_lcm(out.get_mpz_t(), acc.get_mpz_t(), d.get_mpz_t());
  return out;
}

GaussInt scale_to_integer(const GaussianRational& c, const mpz_class& common) {
  GaussInt g;
  g.re = c.re().numerator() * (common / c.re().denominator());
  g.im = c.im().numerator() * (common / c.im().denominator());
  return g;
}

}  // namespace

Polynomial::Polynomial(std::size_t nvars) : nvars_(nvars) {
  if (nvars == 0) fail(ErrorCode::InvalidArgument, "polynomial needs at least one variable");
}

Polynomial Polynomial::constant(std::size_t nvars, const GaussianRational& c) {
  Polynomial p(nvars);
  if (!c.is_zero()) {
    p.exps_.assign(nvars, 0);
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  if (index >= nvars) fail(ErrorCode::InvalidArgument, "variable index out of range");
  ExponentVector e(nvars, 0);
  e[index] = 1;
  return monomial(nvars, e, GaussianRational(1));
}

Polynomial Polynomial::monomial(std::size_t nvars, std::span<const Exponent> exponents, const GaussianRational& c) {
  if (exponents.size() != nvars) fail(ErrorCode::DimensionMismatch, "monomial length differs from nvars");
  Polynomial p(nvars);
  if (!c.is_zero()) {
    p.exps_.assign(exponents.begin(), exponents.end());
    p.coeffs_.push_back(c);
  }
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.exponents.size() != nvars) fail(ErrorCode::DimensionMismatch, "term length differs from nvars");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_before(a.exponents, b.exponents); });
  Polynomial p(nvars);
  p.exps_.reserve(terms.size() * nvars);
  p.coeffs_.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    GaussianRational c = std::move(terms[i].coefficient);
    std::size_t j = i + 1;
    for (; j < terms.size() && terms[j].exponents == terms[i].exponents; ++j) c += terms[j].coefficient;
    if (!c.is_zero()) {
      p.exps_.insert(p.exps_.end(), terms[i].exponents.begin(), terms[i].exponents.end());
      p.coeffs_.push_back(std::move(c));
    }
    i = j;
  }
  return p;
}

int Polynomial::total_degree() const {
  // Canonical order puts the highest total degree first.
  return is_zero() ? -1 : static_cast<int>(quadrep::total_degree(exponents(0)));
}

unsigned Polynomial::degree_in(std::size_t var) const {
  unsigned d = 0;
  for (std::size_t t = 0; t < size(); ++t) d = std::max(d, exps_[t * nvars_ + var]);
  return d;
}

std::vector<unsigned> Polynomial::degree_bounds() const {
  std::vector<unsigned> b(nvars_, 0);
  for (std::size_t t = 0; t < size(); ++t)
    for (std::size_t v = 0; v < nvars_; ++v) b[v] = std::max(b[v], exps_[t * nvars_ + v]);
  return b;
}

bool Polynomial::is_homogeneous() const {
  if (is_zero()) return true;
  const unsigned d = quadrep::total_degree(exponents(0));
  for (std::size_t t = 1; t < size(); ++t)
    if (quadrep::total_degree(exponents(t)) != d) return false;
  return true;
}

bool Polynomial::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_real(); });
}

bool Polynomial::has_imaginary_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const auto& c) { return c.is_imaginary(); });
}

GaussianRational Polynomial::constant_term() const {
  if (is_zero()) return {};
  // The constant monomial, if present, is the last term.
  const auto e = exponents(size() - 1);
  return quadrep::total_degree(e) == 0 ? coeffs_.back() : GaussianRational{};
}

GaussianRational Polynomial::coefficient_of(std::span<const Exponent> exponents_wanted) const {
  if (exponents_wanted.size() != nvars_) fail(ErrorCode::DimensionMismatch, "monomial length differs from nvars");
  // Binary search in the canonical order.
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    const auto e = exponents(mid);
    if (std::equal(e.begin(), e.end(), exponents_wanted.begin())) return coeffs_[mid];
    if (grlex_before(e, exponents_wanted))
      lo = mid + 1;
    else
      hi = mid;
  }
  return {};
}

Polynomial Polynomial::extended(std::size_t extra) const {
  const std::size_t n = nvars_ + extra;
  std::vector<Exponent> exps;
  exps.reserve(size() * n);
  for (std::size_t t = 0; t < size(); ++t) {
    const auto e = exponents(t);
    exps.insert(exps.end(), e.begin(), e.end());
    exps.insert(exps.end(), extra, 0);
  }
  // Appending zero exponents preserves the relative grlex order.
  return Polynomial(n, std::move(exps), coeffs_);
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
  if (c.is_zero()) return Polynomial(nvars_);
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(size());
  for (const auto& x : coeffs_) coeffs.push_back(x * c);
  return Polynomial(nvars_, exps_, std::move(coeffs));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(nvars_, GaussianRational(1));
  Polynomial base = *this;
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

Polynomial Polynomial::with_coefficient(std::size_t index, const GaussianRational& c) const {
  if (index >= size()) fail(ErrorCode::InvalidArgument, "term index out of range");
  std::vector<Term> terms;
  terms.reserve(size());
  for (std::size_t t = 0; t < size(); ++t) {
    const auto e = exponents(t);
    terms.push_back({ExponentVector(e.begin(), e.end()), t == index ? c : coeffs_[t]});
  }
  return from_terms(nvars_, std::move(terms));
}

Polynomial Polynomial::operator-() const {
  std::vector<GaussianRational> coeffs;
  coeffs.reserve(size());
  for (const auto& x : coeffs_) coeffs.push_back(-x);
  return Polynomial(nvars_, exps_, std::move(coeffs));
}

Polynomial Polynomial::merge(const Polynomial& a, const Polynomial& b, bool subtract) {
  require_same_nvars(a, b);
  const std::size_t n = a.nvars_;
  std::vector<Exponent> exps;
  std::vector<GaussianRational> coeffs;
  exps.reserve((a.size() + b.size()) * n);
  coeffs.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  auto push = [&](std::span<const Exponent> e, GaussianRational c) {
    if (c.is_zero()) return;
    exps.insert(exps.end(), e.begin(), e.end());
    coeffs.push_back(std::move(c));
  };
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && grlex_before(a.exponents(i), b.exponents(j)))) {
      push(a.exponents(i), a.coeffs_[i]);
      ++i;
    } else if (i == a.size() || grlex_before(b.exponents(j), a.exponents(i))) {
      push(b.exponents(j), subtract ? -b.coeffs_[j] : b.coeffs_[j]);
      ++j;
    } else {
      push(a.exponents(i), subtract ? a.coeffs_[i] - b.coeffs_[j] : a.coeffs_[i] + b.coeffs_[j]);
      ++i;
      ++j;
    }
  }
  return Polynomial(n, std::move(exps), std::move(coeffs));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) { return Polynomial::merge(a, b, false); }
Polynomial operator-(const Polynomial& a, const Polynomial& b) { return Polynomial::merge(a, b, true); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_nvars(a, b);
  const std::size_t n = a.nvars();
  if (a.is_zero() || b.is_zero()) return Polynomial(n);
  MonomialTable table(n, std::min<std::size_t>(a.size() * b.size(), 1u << 20));
  ExponentVector key(n);
  GaussianRational prod;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto ea = a.exponents(i);
    const auto& ca = a.coefficient(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const auto eb = b.exponents(j);
      for (std::size_t v = 0; v < n; ++v) key[v] = ea[v] + eb[v];
      prod = ca;
      prod *= b.coefficient(j);
      table.at(key) += prod;
    }
  }
  return Polynomial::from_terms(n, table.take_terms());
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
  switch (op) {
    case PolyOp::Add: return a + b;
    case PolyOp::Sub: return a - b;
    case PolyOp::Mul: return a * b;
  }
  fail(ErrorCode::Internal, "unknown polynomial operation");
}

std::string Polynomial::str(std::size_t max_terms) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  const std::size_t shown = max_terms ? std::min(max_terms, size()) : size();
  for (std::size_t t = 0; t < shown; ++t) {
    if (t) out << " + ";
    out << "(" << coeffs_[t].str() << ")";
    const auto e = exponents(t);
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      out << "*z" << (v + 1);
      if (e[v] > 1) out << "^" << e[v];
    }
  }
  if (shown < size()) out << " + ... (" << size() - shown << " more terms)";
  return out.str();
}

Polynomial compose(const Polynomial& outer, std::span<const Polynomial> args) {
  if (args.size() != outer.nvars())
    fail(ErrorCode::DimensionMismatch, "compose: " + std::to_string(args.size()) + " arguments for " +
                                           std::to_string(outer.nvars()) + " variables");
  const std::size_t n = args[0].nvars();
  for (const auto& a : args)
    if (a.nvars() != n) fail(ErrorCode::DimensionMismatch, "compose: arguments disagree on nvars");
  const auto bounds = outer.degree_bounds();
  std::vector<std::vector<Polynomial>> powers(args.size());
  for (std::size_t j = 0; j < args.size(); ++j) {
    powers[j].push_back(Polynomial::constant(n, GaussianRational(1)));
    for (unsigned e = 1; e <= bounds[j]; ++e) powers[j].push_back(powers[j].back() * args[j]);
  }
  Polynomial result(n);
  for (std::size_t t = 0; t < outer.size(); ++t) {
    const auto e = outer.exponents(t);
    Polynomial term = Polynomial::constant(n, outer.coefficient(t));
    for (std::size_t j = 0; j < args.size(); ++j)
      if (e[j]) term = term * powers[j][e[j]];
    result += term;
  }
  return result;
}

std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> point) {
  if (point.size() != p.nvars()) fail(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  return FloatPolynomial(p)(point);
}

GaussianRational evaluate_exact(const Polynomial& p, std::span<const GaussianRational> point) {
  if (point.size() != p.nvars()) fail(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  if (p.is_zero()) return {};
  // Clear denominators: point = a/d, coefficients = c/L, then sum over Gaussian integers
  // sum_e (L c_e) a^e d^(D-|e|) and divide by L d^D once.
  mpz_class d = 1;
  for (const auto& z : point) d = lcm_den(lcm_den(d, z.re()), z.im());
  mpz_class common = 1;
  for (std::size_t t = 0; t < p.size(); ++t)
    common = lcm_den(lcm_den(common, p.coefficient(t).re()), p.coefficient(t).im());

  const auto bounds = p.degree_bounds();
  const unsigned top = static_cast<unsigned>(p.total_degree());
  std::vector<std::vector<GaussInt>> powers(p.nvars());
  for (std::size_t v = 0; v < p.nvars(); ++v) {
    const GaussInt a = scale_to_integer(point[v], d);
    powers[v].push_back(GaussInt{1, 0});
    for (unsigned e = 1; e <= bounds[v]; ++e) {
      GaussInt next = powers[v].back();
      next *= a;
      powers[v].push_back(std::move(next));
    }
  }
  std::vector<mpz_class> dpow(top + 1);
  dpow[0] = 1;
  for (unsigned e = 1; e <= top; ++e) dpow[e] = dpow[e - 1] * d;

  GaussInt sum;
  GaussInt term;
  for (std::size_t t = 0; t < p.size(); ++t) {
    const auto e = p.exponents(t);
    term = scale_to_integer(p.coefficient(t), common);
    for (std::size_t v = 0; v < p.nvars(); ++v)
      if (e[v]) term *= powers[v][e[v]];
    const mpz_class& pad = dpow[top - total_degree(e)];
    if (pad != 1) {
      term.re *= pad;
      term.im *= pad;
    }
    sum.re += term.re;
    sum.im += term.im;
  }
  const mpz_class denom = common * dpow[top];
  return {Rational(sum.re, denom), Rational(sum.im, denom)};
}

FloatPolynomial::FloatPolynomial(const Polynomial& p)
    : nvars_(p.nvars()), bounds_(p.degree_bounds()) {
  exps_.reserve(p.size() * nvars_);
  coeffs_.reserve(p.size());
  for (std::size_t t = 0; t < p.size(); ++t) {
    const auto e = p.exponents(t);
    exps_.insert(exps_.end(), e.begin(), e.end());
    coeffs_.push_back(p.coefficient(t).to_complex());
  }
}

std::vector<std::vector<std::complex<double>>> power_table(std::span<const std::complex<double>> point,
                                                           std::span<const unsigned> bounds) {
  std::vector<std::vector<std::complex<double>>> powers(point.size());
  for (std::size_t v = 0; v < point.size(); ++v) {
    const unsigned top = v < bounds.size() ? bounds[v] : 0;
    powers[v].resize(top + 1);
    powers[v][0] = 1.0;
    for (unsigned e = 1; e <= top; ++e) powers[v][e] = powers[v][e - 1] * point[v];
  }
  return powers;
}

std::complex<double> FloatPolynomial::operator()(std::span<const std::complex<double>> point) const {
  if (point.size() != nvars_) fail(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  const auto powers = power_table(point, bounds_);
  return with_powers(powers);
}

std::complex<double> FloatPolynomial::with_powers(std::span<const std::vector<std::complex<double>>> powers) const {
  std::complex<double> sum = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    std::complex<double> term = coeffs_[t];
    const Exponent* e = exps_.data() + t * nvars_;
    for (std::size_t v = 0; v < nvars_; ++v)
      if (e[v]) term *= powers[v][e[v]];
    sum += term;
  }
  return sum;
}

}  // namespace quadrep
