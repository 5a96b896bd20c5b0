#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadrep/exact/rational.hpp"

namespace quadrep {

using Exponent = std::uint32_t;
using ExponentVector = std::vector<Exponent>;

// Graded lexicographic comparison: true when a sorts before b in the
// canonical (descending) term order.
bool grlex_before(std::span<const Exponent> a, std::span<const Exponent> b);

unsigned total_degree(std::span<const Exponent> exponents);

// Sparse polynomial in a fixed number of variables with Gaussian-rational
// coefficients. Terms are stored in graded-lex descending order, without
// duplicates and without zero coefficients. Values are immutable once built.
class Polynomial {
 public:
  struct Term {
    ExponentVector exponents;
    GaussianRational coefficient;
  };

  explicit Polynomial(std::size_t nvars = 1);

  static Polynomial constant(std::size_t nvars, const GaussianRational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(std::size_t nvars, std::span<const Exponent> exponents, const GaussianRational& c);
  // Sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t nvars() const { return nvars_; }
  std::size_t size() const { return coeffs_.size(); }
  bool is_zero() const { return coeffs_.empty(); }

  std::span<const Exponent> exponents(std::size_t term) const {
    return {exps_.data() + term * nvars_, nvars_};
  }
  const GaussianRational& coefficient(std::size_t term) const { return coeffs_[term]; }

  // -1 for the zero polynomial.
  int total_degree() const;
  unsigned degree_in(std::size_t var) const;
  std::vector<unsigned> degree_bounds() const;
  bool is_homogeneous() const;
  bool has_real_coefficients() const;
  bool has_imaginary_coefficients() const;
  GaussianRational constant_term() const;
  // Coefficient of an exact monomial, zero when absent.
  GaussianRational coefficient_of(std::span<const Exponent> exponents) const;

  // Same polynomial viewed in nvars + extra variables (new ones appended).
  Polynomial extended(std::size_t extra) const;
  Polynomial scaled(const GaussianRational& c) const;
  Polynomial pow(unsigned exponent) const;
  // Coefficient-wise copy with term `index` replaced.
  Polynomial with_coefficient(std::size_t index, const GaussianRational& c) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  // Human-readable form, e.g. "3/2*z1^2 + 1/1*z3^2"; variables are z1..zn.
  std::string str(std::size_t max_terms = 0) const;

 private:
  Polynomial(std::size_t nvars, std::vector<Exponent> exps, std::vector<GaussianRational> coeffs)
      : nvars_(nvars), exps_(std::move(exps)), coeffs_(std::move(coeffs)) {}
  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract);

  std::size_t nvars_;
  std::vector<Exponent> exps_;
  std::vector<GaussianRational> coeffs_;
};

enum class PolyOp { Add, Sub, Mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// Substitutes args[j] for variable j of outer. The result lives in args[0].nvars() variables.
Polynomial compose(const Polynomial& outer, std::span<const Polynomial> args);

// Floating evaluation; coefficients are converted at the last step and terms
// are summed in canonical order.
std::complex<double> evaluate(const Polynomial& p, std::span<const std::complex<double>> point);

GaussianRational evaluate_exact(const Polynomial& p, std::span<const GaussianRational> point);

// Floating copy of a polynomial for repeated evaluation.
class FloatPolynomial {
 public:
  FloatPolynomial() = default;
  explicit FloatPolynomial(const Polynomial& p);

  std::size_t nvars() const { return nvars_; }
  std::complex<double> operator()(std::span<const std::complex<double>> point) const;
  // Same, with per-variable power tables already built (powers[v][e] = z_v^e).
  std::complex<double> with_powers(std::span<const std::vector<std::complex<double>>> powers) const;
  const std::vector<unsigned>& degree_bounds() const { return bounds_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<Exponent> exps_;
  std::vector<std::complex<double>> coeffs_;
  std::vector<unsigned> bounds_;
};

// Builds powers[v][e] = point[v]^e for e up to bounds[v].
std::vector<std::vector<std::complex<double>>> power_table(std::span<const std::complex<double>> point,
                                                           std::span<const unsigned> bounds);

}  // namespace quadrep
