#include <doctest.h>

#include <array>

#include "helpers.hpp"
#include "quadrep/error.hpp"
#include "quadrep/lemma1.hpp"

using namespace quadrep;
using namespace testing;

namespace {

// binom(2j, j) / 4^j by the product formula prod_{i=1..j} (2i-1)/(2i).
Rational central_binomial_over_4j(unsigned j) {
  Rational c = r(1);
  for (unsigned i = 1; i <= j; ++i) c = c * r(2 * i - 1, 2 * i);
  return c;
}

Polynomial univariate(std::initializer_list<Rational> coeffs) {
  Polynomial p(1);
  unsigned e = 0;
  for (const Rational& c : coeffs) {
    const std::array<Exponent, 1> ex{e++};
    p += Polynomial::monomial(1, ex, GaussianRational(c));
  }
  return p;
}

GaussianRational at(const Polynomial& p, const GaussianRational& x) {
  const std::array<GaussianRational, 1> pt{x};
  return evaluate_exact(p, pt);
}

}  // namespace

TEST_SUITE("lemma1") {
  TEST_CASE("phi and lambda for small ell") {
    auto [phi0, lambda0] = phi_lambda(0);
    CHECK(phi0 == univariate({r(1)}));
    CHECK(lambda0 == univariate({r(1)}));

    auto [phi1, lambda1] = phi_lambda(1);
    CHECK(phi1 == univariate({r(1), r(1, 2)}));
    CHECK(lambda1 == univariate({r(3, 4), r(1, 4)}));

    auto [phi2, lambda2] = phi_lambda(2);
    CHECK(phi2 == univariate({r(1), r(1, 2), r(3, 8)}));
    CHECK(lambda2 == univariate({r(5, 8), r(15, 64), r(9, 64)}));
    CHECK(at(lambda2, gr(1)) == gr(1));
  }

  TEST_CASE("phi matches the closed-form series and lambda is the exact quotient") {
    const Polynomial t = var(1, 0);
    for (unsigned ell = 0; ell <= 10; ++ell) {
      auto [phi, lambda] = phi_lambda(ell);
      CHECK(phi.total_degree() == static_cast<int>(ell));
      CHECK(lambda.total_degree() == static_cast<int>(ell));
      for (unsigned j = 0; j <= ell; ++j) {
        const std::array<Exponent, 1> ex{j};
        const GaussianRational c = phi.coefficient_of(ex);
        CHECK(c == GaussianRational(central_binomial_over_4j(j)));
        CHECK(c.re().sign() > 0);
      }
      const Polynomial one = cst(1, gr(1));
      CHECK((t - one) * phi * phi + one == t.pow(ell + 1) * lambda);
      CHECK(at(lambda, gr(1)) == gr(1));
    }
  }

  TEST_CASE("rho_beta for k = 1 and k = 2") {
    const Lemma1Triple t1 = rho_beta(1);
    CHECK(t1.rho == cst(2, gr(1)));
    CHECK(t1.beta1 == cst(2, GaussianRational(r(5, 4))));
    CHECK(t1.beta2 == cst(2, GaussianRational(r(0), r(3, 4))));

    const Lemma1Triple t2 = rho_beta(2);
    const Polynomial s = var(2, kVarS), t = var(2, kVarT);
    const auto half = GaussianRational(r(1, 2));
    const auto quarter = GaussianRational(r(1, 4));
    CHECK(t2.rho == s + t.scaled(half));
    const Polynomial beta = (s.scaled(GaussianRational(r(3))) + t).scaled(quarter);
    CHECK(t2.beta == beta);
    CHECK(t2.beta1 == beta + cst(2, quarter));
    CHECK(t2.beta2 == beta.scaled(GaussianRational::i()) - cst(2, GaussianRational(r(0), r(1, 4))));
  }

  TEST_CASE("verify_lemma1 passes for k = 1..8") {
    for (unsigned k = 1; k <= 8; ++k) {
      const Lemma1Triple tr = rho_beta(k);
      const PHCertificate cert = verify_lemma1(tr);
      CHECK_MESSAGE(cert.pass, "k = " << k << ": " << cert.witness);
      CHECK(cert.method == CertMethod::FullExpansion);
      CHECK(tr.beta1 * tr.beta1 + tr.beta2 * tr.beta2 == tr.beta);
      CHECK(tr.rho.is_homogeneous());
      CHECK(tr.beta.is_homogeneous());
      CHECK(tr.rho.total_degree() == static_cast<int>(k) - 1);
      CHECK(tr.beta.total_degree() == static_cast<int>(k) - 1);
      CHECK(tr.rho.has_real_coefficients());
      CHECK(tr.beta1.has_real_coefficients());
      for (std::size_t i = 0; i < tr.beta2.size(); ++i) CHECK(tr.beta2.coefficient(i).is_imaginary());
    }
  }

  TEST_CASE("a corrupted triple is rejected with a witness") {
    Lemma1Triple tr = rho_beta(3);
    tr.beta1 = tr.beta1 + cst(2, gr(1));
    const PHCertificate cert = verify_lemma1(tr);
    CHECK_FALSE(cert.pass);
    CHECK_FALSE(cert.witness.empty());
  }

  TEST_CASE("k = 0 is rejected") { CHECK_THROWS_AS(rho_beta(0), Error); }
}
