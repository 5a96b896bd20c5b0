#pragma once

#include <utility>

#include "quadrep/certificate.hpp"
#include "quadrep/exact/polynomial.hpp"

namespace quadrep {

// Variable order for the two-variable polynomials below: index 0 is s, index 1 is t.
inline constexpr std::size_t kVarS = 0;
inline constexpr std::size_t kVarT = 1;

// Coefficients of the suspension operator for one order k.
//
// phi is the degree-(k-1) truncation of (1-t)^(-1/2) and lambda the exact
// quotient ((t-1) phi^2 + 1) / t^k. rho and beta are their homogenizations
// of degree k-1 in (s, t), beta1 = beta + 1/4 and beta2 = i beta - i/4, so that
//
//   (t - s) rho^2 + s^(2k-1) = t^k (beta1^2 + beta2^2).
struct Lemma1Triple {
  unsigned k = 1;
  Polynomial rho{2};
  Polynomial beta{2};
  Polynomial beta1{2};
  Polynomial beta2{2};
  Polynomial phi{1};
  Polynomial lambda{1};
};

// (phi, lambda) for ell >= 0, univariate in t.
std::pair<Polynomial, Polynomial> phi_lambda(unsigned ell);

Lemma1Triple rho_beta(unsigned k);

// Full expansion of (t - s) rho^2 + s^(2k-1) - t^k (beta1^2 + beta2^2). A pass
// also requires every coefficient of phi to be positive, which makes
// rho(1, t) = phi(t) > 0 for t >= 0.
PHCertificate verify_lemma1(const Lemma1Triple& triple);

}  // namespace quadrep
