#pragma once

#include <random>
#include <string>
#include <vector>

#include "quadrep/exact/polynomial.hpp"

namespace testing {

using quadrep::GaussianRational;
using quadrep::Polynomial;
using quadrep::Rational;

inline Rational r(long n, long d = 1) { return Rational::parse(std::to_string(n) + "/" + std::to_string(d)); }

inline GaussianRational gr(long a, long b = 0) { return GaussianRational(r(a), r(b)); }

// Variable z_(index+1) in nvars variables.
inline Polynomial var(std::size_t nvars, std::size_t index) { return Polynomial::variable(nvars, index); }

inline Polynomial cst(std::size_t nvars, const GaussianRational& c) { return Polynomial::constant(nvars, c); }

// Random sparse polynomial with small Gaussian-rational coefficients.
inline Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_deg, std::size_t terms) {
  std::uniform_int_distribution<int> deg(0, static_cast<int>(max_deg));
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  std::vector<Polynomial::Term> out;
  for (std::size_t t = 0; t < terms; ++t) {
    Polynomial::Term term;
    for (std::size_t v = 0; v < nvars; ++v) term.exponents.push_back(static_cast<quadrep::Exponent>(deg(rng)));
    term.coefficient = GaussianRational(r(num(rng), den(rng)), r(num(rng), den(rng)));
    out.push_back(std::move(term));
  }
  return Polynomial::from_terms(nvars, std::move(out));
}

inline std::vector<GaussianRational> random_point(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-30, 30);
  std::uniform_int_distribution<long> den(1, 7);
  std::vector<GaussianRational> p;
  for (std::size_t i = 0; i < n; ++i) p.emplace_back(r(num(rng), den(rng)), r(num(rng), den(rng)));
  return p;
}

}  // namespace testing
