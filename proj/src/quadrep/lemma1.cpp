#include "quadrep/lemma1.hpp"

#include "quadrep/error.hpp"

namespace quadrep {

namespace {

Polynomial univariate(const std::vector<Rational>& coeffs) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    terms.push_back({{static_cast<Exponent>(j)}, GaussianRational(coeffs[j])});
  return Polynomial::from_terms(1, std::move(terms));
}

// s^(deg-j) t^j for each t^j term of p.
Polynomial homogenize(const Polynomial& p, unsigned deg) {
  std::vector<Polynomial::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Exponent j = p.exponents(i)[0];
    terms.push_back({{deg - j, j}, p.coefficient(i)});
  }
  return Polynomial::from_terms(2, std::move(terms));
}

}  // namespace

std::pair<Polynomial, Polynomial> phi_lambda(unsigned ell) {
  // binom(2j, j) / 4^j via c_j = c_{j-1} (2j - 1) / (2j)
  std::vector<Rational> c{Rational(1)};
  for (unsigned j = 1; j <= ell; ++j) c.push_back(c.back() * Rational(2 * j - 1, 2 * j));
  Polynomial phi = univariate(c);

  const Polynomial t = Polynomial::variable(1, 0);
  const Polynomial one = Polynomial::constant(1, GaussianRational(1));
  const Polynomial numerator = (t - one) * phi * phi + one;

  std::vector<Polynomial::Term> quotient;
  for (std::size_t i = 0; i < numerator.size(); ++i) {
    const Exponent e = numerator.exponents(i)[0];
    if (e < ell + 1)
      fail(ErrorCode::Internal, "phi_lambda: nonzero remainder " + numerator.coefficient(i).str() + "*t^" +
                                    std::to_string(e) + " dividing by t^" + std::to_string(ell + 1));
    quotient.push_back({{e - (ell + 1)}, numerator.coefficient(i)});
  }
  return {std::move(phi), Polynomial::from_terms(1, std::move(quotient))};
}

Lemma1Triple rho_beta(unsigned k) {
  if (k == 0) fail(ErrorCode::InvalidArgument, "rho_beta: order k must be at least 1");
  const unsigned ell = k - 1;
  auto [phi, lambda] = phi_lambda(ell);
  Lemma1Triple tr;
  tr.k = k;
  tr.rho = homogenize(phi, ell);
  tr.beta = homogenize(lambda, ell);
  const GaussianRational quarter(Rational(1, 4));
  tr.beta1 = tr.beta + Polynomial::constant(2, quarter);
  tr.beta2 = tr.beta.scaled(GaussianRational::i()) - Polynomial::constant(2, quarter * GaussianRational::i());
  tr.phi = std::move(phi);
  tr.lambda = std::move(lambda);
  return tr;
}

PHCertificate verify_lemma1(const Lemma1Triple& tr) {
  PHCertificate cert;
  cert.identity = "(t-s) rho^2 + s^(2k-1) - t^k (beta1^2 + beta2^2)";
  cert.claimed_order = tr.k;
  cert.method = CertMethod::FullExpansion;

  const Polynomial s = Polynomial::variable(2, kVarS);
  const Polynomial t = Polynomial::variable(2, kVarT);
  const Polynomial diff =
      (t - s) * tr.rho * tr.rho + s.pow(2 * tr.k - 1) - t.pow(tr.k) * (tr.beta1 * tr.beta1 + tr.beta2 * tr.beta2);
  if (!diff.is_zero()) {
    cert.witness = "difference " + diff.str(4);
    return cert;
  }
  for (std::size_t j = 0; j < tr.phi.size(); ++j) {
    const auto& c = tr.phi.coefficient(j);
    if (!c.is_real() || c.re().sign() <= 0) {
      cert.witness = "phi coefficient " + c.str() + " is not a positive rational";
      return cert;
    }
  }
  if (tr.phi.size() != tr.k) {
    cert.witness = "phi is missing a coefficient, positivity witness incomplete";
    return cert;
  }
  cert.pass = true;
  return cert;
}

}  // namespace quadrep
