#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace quadrep {

enum class CertMethod { FullExpansion, ExactEvaluation };

// How evaluation points were chosen for an ExactEvaluation certificate.
//   TensorGrid: S_1 x ... x S_n with |S_v| > deg_v of the difference; a
//     polynomial vanishing there is zero, so the verdict is certain.
//   Sampled: seeded points drawn from [-R, R]^n; a nonzero difference of total
//     degree D survives one point with probability at most D / (2R + 1).
enum class GridKind { None, TensorGrid, Sampled };

std::string_view to_string(CertMethod m);
std::string_view to_string(GridKind g);

// Record of one exact identity check (pseudo-homogeneity, orthogonality or
// the polynomial identity behind the suspension coefficients).
struct PHCertificate {
  std::string identity;  // e.g. "q(F(z)) - q(z)^3"
  unsigned claimed_order = 0;
  CertMethod method = CertMethod::FullExpansion;
  GridKind grid = GridKind::None;
  std::size_t points = 0;
  unsigned degree_bound = 0;   // largest per-variable degree bound the grid had to exceed
  unsigned total_degree = 0;   // total degree bound used for the sampled error estimate
  double failure_bound = 0.0;  // zero unless grid == Sampled
  bool pass = false;
  std::string witness;         // nonzero term or point on failure
};

}  // namespace quadrep
