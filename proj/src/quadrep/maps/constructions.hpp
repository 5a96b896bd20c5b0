#pragma once

#include <cstddef>

#include "quadrep/maps/certify.hpp"
#include "quadrep/maps/poly_map.hpp"

namespace quadrep {

struct BuildOptions {
  // Composite maps are stored expanded when the estimated expansion cost
  // (coefficient products) stays below this; otherwise they keep only their
  // construction.
  std::size_t expansion_budget = 500'000;
  CertifyOptions certify;
};

// z_1^2 + ... + z_m^2
Polynomial q_form(std::size_t m);

// sum_j f_j g_j as a polynomial; both maps must be expanded.
Polynomial b_pairing(const PolyMap& f, const PolyMap& g);

// Two b-orthogonal maps of the same certified order, with the orthogonality certificate.
struct MapPair {
  PolyMap f;
  PolyMap g;
  PHCertificate orthogonality;
};

// f(z) = (z1^2+z2^2-z3^2-z4^2, 2z1z3-2z2z4, 2z1z4+2z2z3) and its partner
// g(z) = (2z1z4-2z2z3, 2z1z2+2z3z4, z2^2+z4^2-z1^2-z3^2), both of order 2.
MapPair hopf_pair(const CertifyOptions& options = {});

// f = (Re, +-Im) of (z1 + i z2)^|d| (sign of Im follows d), g = (-f2, f1); order |d|.
MapPair circle_pair(int d, const CertifyOptions& options = {});

// Constant map C^m -> C^r onto (1, 0, ..., 0); certified order 0.
PolyMap constant_map(std::size_t m, std::size_t r);

PolyMap identity_map(std::size_t m);

// outer o inner; when both orders are certified the result is re-certified
// with the product order.
PolyMap compose_maps(const PolyMap& outer, const PolyMap& inner, const BuildOptions& options = {});

// The suspension operator: f, g certified of the same order k and b-orthogonal;
// the result C^(m+ell) -> C^(r+ell) is certified of order 2k-1.
PolyMap suspend(const PolyMap& f, const PolyMap& g, std::size_t ell, const BuildOptions& options = {});

// Same with caller-supplied coefficients; triple.k must equal the order of f and g.
PolyMap suspend_with_triple(const PolyMap& f, const PolyMap& g, std::size_t ell, const Lemma1Triple& triple,
                            const BuildOptions& options = {});

// cos(t pi/2) f + sin(t pi/2) g. Returns f at t = 0 and g at t = 1; otherwise
// a floating blend that only supports numeric evaluation.
PolyMap tilde_homotopy(const PolyMap& f, const PolyMap& g, double t);

}  // namespace quadrep
