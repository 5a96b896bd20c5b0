#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "quadrep/certificate.hpp"
#include "quadrep/maps/poly_map.hpp"

namespace quadrep {

enum class CertifyMode { Auto, FullExpansion, ExactEvaluation };

struct CertifyOptions {
  CertifyMode mode = CertifyMode::Auto;
  // Auto expands when the coefficient products needed stay below this.
  std::size_t expansion_budget = 5'000'000;
  // Largest tensor grid evaluated before switching to sampled points.
  std::size_t grid_budget = 20'000;
  // Sampled points are added until the failure bound drops below this.
  double target_failure = 1e-18;
  std::int64_t sample_radius = std::int64_t{1} << 20;
  std::uint64_t seed = 0x71a5u;
};

// A polynomial P that is claimed to vanish identically, given through an exact
// evaluator and, when affordable, its expansion.
struct IdentityProblem {
  std::string identity;
  std::size_t nvars = 0;
  std::vector<unsigned> degree_bounds;  // per-variable bound on deg P
  unsigned total_degree = 0;            // bound on the total degree of P
  std::function<GaussianRational(std::span<const GaussianRational>)> evaluate;
  std::size_t expansion_cost = 0;  // coefficient products to expand P
  std::function<Polynomial()> expand;  // may be empty
};

PHCertificate zero_test(const IdentityProblem& problem, unsigned claimed_order, const CertifyOptions& options);

// q(map(z)) - q(z)^k == 0.
PHCertificate certify_order(const PolyMap& map, unsigned k, const CertifyOptions& options = {});

// b(f(z), g(z)) == 0.
PHCertificate certify_orthogonal(const PolyMap& f, const PolyMap& g, const CertifyOptions& options = {});

}  // namespace quadrep
