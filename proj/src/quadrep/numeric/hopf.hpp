#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "quadrep/maps/poly_map.hpp"

namespace quadrep {

using Vec3 = std::array<double, 3>;
using Vec4 = std::array<double, 4>;

struct HopfOptions {
  double step = 6e-3;          // arc-length predictor; about 10^3 points per unit circle
  double newton_tol = 1e-10;   // corrector residual
  double closure_tol = 1e-6;   // distance at which a curve rejoins its start
  std::size_t max_steps = 100'000;
  std::size_t seeds = 20'000;  // S^3 samples used to locate preimage components
  std::uint64_t seed = 17;
  Vec3 value_a{1, 0, 0};
  Vec3 value_b{-1, 0, 0};
  double rank_tol = 1e-6;      // smallest singular value accepted on a curve
  std::size_t max_perturbations = 8;
  std::size_t max_components = 16;
};

// One closed component of a preimage h^-1(value) on S^3.
struct TracedCurve {
  std::vector<Vec4> points;
  bool closed = false;
  Vec3 value{};
  double max_residual = 0.0;
};

struct HopfResult {
  int invariant = 0;
  double linking = 0.0;
  double defect = 0.0;
  bool curves_found = false;
  Vec3 value_a{}, value_b{};      // the values actually used
  std::size_t perturbations = 0;  // retries after rank drops
  std::vector<TracedCurve> a, b;  // preimage components of value_a and value_b
  std::string note;
};

// All preimage components of `value` under h = H1 o map restricted to S^3,
// found by dense seeding and Newton refinement and traced by predictor-corrector
// continuation. Throws Numeric when the value is not regular (Jacobian rank
// drop) or a component fails to close within the step budget.
std::vector<TracedCurve> trace_preimage(const PolyMap& map, const Vec3& value, const HopfOptions& options = {});

// Gauss linking integral of two families of closed curves on S^3 after
// stereographic projection from a point far from both.
double linking_number(const std::vector<TracedCurve>& a, const std::vector<TracedCurve>& b);

// Hopf invariant of a map C^4 -> C^3 read on S^3 -> S^2. Values that turn out
// singular are perturbed deterministically; when a value has no preimage the
// invariant is 0 by convention.
HopfResult hopf_invariant(const PolyMap& map, const HopfOptions& options = {});

}  // namespace quadrep
