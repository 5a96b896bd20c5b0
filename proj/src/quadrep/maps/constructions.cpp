#include "quadrep/maps/constructions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "quadrep/error.hpp"

namespace quadrep {

namespace {

PolyMap certified(const PolyMap& map, unsigned k, const CertifyOptions& options) {
  PHCertificate cert = certify_order(map, k, options);
  if (!cert.pass)
    fail(ErrorCode::Certification, "'" + map.label() + "' is not pseudo-homogeneous of order " +
                                       std::to_string(k) + ": " + cert.witness);
  return map.with_certificate(std::move(cert));
}

MapPair certified_pair(PolyMap f, PolyMap g, unsigned k, const CertifyOptions& options) {
  f = certified(f, k, options);
  g = certified(g, k, options);
  PHCertificate orth = certify_orthogonal(f, g, options);
  if (!orth.pass) fail(ErrorCode::Certification, "pair is not b-orthogonal: " + orth.witness);
  return {std::move(f), std::move(g), std::move(orth)};
}

PolyMap maybe_expand(const PolyMap& map, const BuildOptions& options) {
  if (estimate_expansion_cost(map) <= options.expansion_budget) return expand(map, options.expansion_budget);
  return map;
}

}  // namespace

Polynomial q_form(std::size_t m) {
  Polynomial q(m);
  for (std::size_t v = 0; v < m; ++v) {
    const Polynomial x = Polynomial::variable(m, v);
    q += x * x;
  }
  return q;
}

Polynomial b_pairing(const PolyMap& f, const PolyMap& g) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    fail(ErrorCode::DimensionMismatch, "b_pairing needs maps with equal dimensions");
  Polynomial b(f.domain_dim());
  for (std::size_t j = 0; j < f.codomain_dim(); ++j) b += f.components()[j] * g.components()[j];
  return b;
}

MapPair hopf_pair(const CertifyOptions& options) {
  const auto z = [](std::size_t i) { return Polynomial::variable(4, i - 1); };
  const Polynomial two = Polynomial::constant(4, GaussianRational(2));
  std::vector<Polynomial> f{
      z(1) * z(1) + z(2) * z(2) - z(3) * z(3) - z(4) * z(4),
      two * z(1) * z(3) - two * z(2) * z(4),
      two * z(1) * z(4) + two * z(2) * z(3),
  };
  std::vector<Polynomial> g{
      two * z(1) * z(4) - two * z(2) * z(3),
      two * z(1) * z(2) + two * z(3) * z(4),
      z(2) * z(2) + z(4) * z(4) - z(1) * z(1) - z(3) * z(3),
  };
  return certified_pair(PolyMap::from_components(std::move(f), "hopf.f"),
                        PolyMap::from_components(std::move(g), "hopf.g"), 2, options);
}

MapPair circle_pair(int d, const CertifyOptions& options) {
  if (d == 0) fail(ErrorCode::InvalidArgument, "circle_pair: d = 0 is the constant map");
  const unsigned n = static_cast<unsigned>(std::abs(d));
  const Polynomial w = Polynomial::variable(2, 0) + Polynomial::variable(2, 1).scaled(GaussianRational::i());
  const Polynomial p = w.pow(n);
  std::vector<Polynomial::Term> re_terms;
  std::vector<Polynomial::Term> im_terms;
  for (std::size_t t = 0; t < p.size(); ++t) {
    const auto e = p.exponents(t);
    re_terms.push_back({ExponentVector(e.begin(), e.end()), GaussianRational(p.coefficient(t).re())});
    im_terms.push_back({ExponentVector(e.begin(), e.end()), GaussianRational(p.coefficient(t).im())});
  }
  const Polynomial re = Polynomial::from_terms(2, std::move(re_terms));
  Polynomial im = Polynomial::from_terms(2, std::move(im_terms));
  if (d < 0) im = -im;
  const std::string tag = "circle(" + std::to_string(d) + ")";
  return certified_pair(PolyMap::from_components({re, im}, tag + ".f"),
                        PolyMap::from_components({-im, re}, tag + ".g"), n, options);
}

PolyMap constant_map(std::size_t m, std::size_t r) {
  std::vector<Polynomial> comps;
  comps.push_back(Polynomial::constant(m, GaussianRational(1)));
  for (std::size_t j = 1; j < r; ++j) comps.emplace_back(m);
  const PolyMap map =
      PolyMap::from_components(std::move(comps), "const(" + std::to_string(m) + "->" + std::to_string(r) + ")");
  return certified(map, 0, {});
}

PolyMap identity_map(std::size_t m) {
  std::vector<Polynomial> comps;
  for (std::size_t v = 0; v < m; ++v) comps.push_back(Polynomial::variable(m, v));
  return certified(PolyMap::from_components(std::move(comps), "id(" + std::to_string(m) + ")"), 1, {});
}

PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner, const BuildOptions& options) {
  if (inner.codomain_dim() != outer.domain_dim())
    fail(ErrorCode::DimensionMismatch, "compose: inner codomain " + std::to_string(inner.codomain_dim()) +
                                           " != outer domain " + std::to_string(outer.domain_dim()));
  PolyMap map = PolyMap::from_construction(inner.domain_dim(), outer.codomain_dim(), ComposeNode{outer, inner},
                                           "compose(" + outer.label() + "," + inner.label() + ")");
  map = maybe_expand(map, options);
  if (outer.order() && inner.order()) map = certified(map, *outer.order() * *inner.order(), options.certify);
  return map;
}

PolyMap suspend(const PolyMap& f, const PolyMap& g, std::size_t ell, const BuildOptions& options) {
  if (!f.order()) fail(ErrorCode::InvalidArgument, "suspend: '" + f.label() + "' has no certified order");
  if (*f.order() == 0) fail(ErrorCode::InvalidArgument, "suspend: order must be at least 1");
  return suspend_with_triple(f, g, ell, rho_beta(*f.order()), options);
}

PolyMap suspend_with_triple(const PolyMap& f, const PolyMap& g, std::size_t ell, const Lemma1Triple& triple,
                            const BuildOptions& options) {
  if (ell == 0) fail(ErrorCode::InvalidArgument, "suspend: ell must be positive");
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    fail(ErrorCode::DimensionMismatch, "suspend: f and g differ in dimensions");
  if (!f.order() || !g.order())
    fail(ErrorCode::InvalidArgument, "suspend: both maps need a certified order");
  if (*f.order() != *g.order())
    fail(ErrorCode::InvalidArgument, "suspend: orders differ (" + std::to_string(*f.order()) + " vs " +
                                         std::to_string(*g.order()) + ")");
  if (triple.k != *f.order()) fail(ErrorCode::InvalidArgument, "suspend: coefficient triple built for another order");
  const PHCertificate orth = certify_orthogonal(f, g, options.certify);
  if (!orth.pass) fail(ErrorCode::InvalidArgument, "suspend: maps are not b-orthogonal: " + orth.witness);

  PolyMap map = PolyMap::from_construction(
      f.domain_dim() + ell, f.codomain_dim() + ell, SuspendNode{f, g, ell, triple},
      "suspend(" + f.label() + "," + g.label() + ",l=" + std::to_string(ell) + ")");
  map = maybe_expand(map, options);
  return certified(map, 2 * triple.k - 1, options.certify);
}

PolyMap tilde_homotopy(const PolyMap& f, const PolyMap& g, double t) {
  if (!f.order() || !g.order() || *f.order() != *g.order())
    fail(ErrorCode::InvalidArgument, "tilde_homotopy: maps need the same certified order");
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    fail(ErrorCode::DimensionMismatch, "tilde_homotopy: f and g differ in dimensions");
  if (!(t >= 0.0 && t <= 1.0)) fail(ErrorCode::InvalidArgument, "tilde_homotopy: t must lie in [0, 1]");
  if (t == 0.0) return f;
  if (t == 1.0) return g;
  const PHCertificate orth = certify_orthogonal(f, g);
  if (!orth.pass) fail(ErrorCode::InvalidArgument, "tilde_homotopy: maps are not b-orthogonal");
  const double angle = t * std::numbers::pi / 2.0;
  return PolyMap::from_construction(f.domain_dim(), f.codomain_dim(),
                                    BlendNode{f, g, std::cos(angle), std::sin(angle)},
                                    "blend(" + f.label() + "," + g.label() + ",t=" + std::to_string(t) + ")");
}

}  // namespace quadrep
