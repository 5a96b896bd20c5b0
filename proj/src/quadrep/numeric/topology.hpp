#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "quadrep/lemma1.hpp"
#include "quadrep/maps/poly_map.hpp"
#include "quadrep/numeric/quadric.hpp"

namespace quadrep {

struct HemisphereReport {
  bool pass = false;
  std::size_t ell = 0;
  std::size_t samples = 0;
  double max_deviation = 0.0;  // max |F(z,u)_{last} - rho(1,|z|^2) u|
  double min_rho = 0.0;
  std::size_t sign_violations = 0;
  double equator_max = 0.0;  // max |F(z,0)_{last}|
  std::string detail;
};

// Samples real sphere points (z, u) and checks that the last ell image
// coordinates are rho(1, |z|^2) u with rho > 0. This certifies the hemisphere
// and equator hypothesis of the suspension, not the homotopy class itself.
// The lineage (ell and rho) comes from the map's construction, or for an
// imported map from a label ending in "l=N)" with order 2k-1.
HemisphereReport hemisphere_check(const PolyMap& map, std::size_t samples = 1000, std::uint64_t seed = 3);
HemisphereReport hemisphere_check(const PolyMap& map, std::size_t ell, const Lemma1Triple& triple,
                                  std::size_t samples = 1000, std::uint64_t seed = 3);

// The suspension block size and order recorded in a map's lineage, if any.
struct SuspensionLineage {
  std::size_t ell = 0;
  unsigned k = 0;
};
std::optional<SuspensionLineage> suspension_lineage(const PolyMap& map);

struct DegreeResult {
  int degree = 0;
  double raw = 0.0;     // unrounded value
  double defect = 0.0;  // |raw - degree|
};

// Winding number of t -> H1(map(cos t, sin t)) for a map C^2 -> C^2.
DegreeResult winding_degree(const PolyMap& map, std::size_t samples = 4096);

// (1/4pi) of the integral of h . (h_theta x h_phi) over a latitude-longitude
// grid, h = H1 o map on S^2, for a map C^3 -> C^3.
DegreeResult degree_s2(const PolyMap& map, std::size_t n_phi = 400, std::size_t n_theta = 200);

struct NullhomotopyReport {
  double max_residual = 0.0;  // max |q(H(z,t)) - 1|
  double start_error = 0.0;   // max |H(z,0) - map(z)|
  double end_error = 0.0;     // max |H(z,1) - map(-z)|
  std::size_t samples = 0;
  std::size_t tsteps = 0;
};

// H(z, t) = g(t)^(-2r) map(g(t) z) with g(t) = exp(i pi t), for a map of
// certified even order 2r (or the given order). Samples are split between
// the real sphere and the complex quadric.
NullhomotopyReport even_order_nullhomotopy_residual(const PolyMap& map, std::size_t tsteps = 11,
                                                    std::size_t samples = 1000, std::uint64_t seed = 5,
                                                    std::optional<unsigned> order = std::nullopt);

}  // namespace quadrep
