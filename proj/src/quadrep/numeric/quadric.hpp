#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "quadrep/maps/poly_map.hpp"

namespace quadrep {

using ComplexVector = std::vector<std::complex<double>>;
using RealVector = std::vector<double>;

// |q(p) - 1| with q(p) = sum p_j^2 (complex bilinear, not Hermitian).
double quadric_residual(std::span<const std::complex<double>> p);

// A point of Q^(m-1) = q^-1(1) in C^m.
struct QuadricPoint {
  ComplexVector coords;
  double residual = 0.0;

  static QuadricPoint from(ComplexVector coords);
  static QuadricPoint real(std::span<const double> x);
};

// Seeded uniform samples on S^n in R^(n+1).
std::vector<RealVector> sample_sphere(std::size_t n, std::size_t count, std::uint64_t seed);

// Inverse of tangent_bundle_diffeo: |v| = 1, v.w = 0  ->  x = (|w|^2 + 1)^(1/2) v, y = w.
QuadricPoint from_tangent(std::span<const double> v, std::span<const double> w);

// Samples of Q^(m-1) in C^m: v uniform on S^(m-1), w a tangent vector at v
// with uniform direction and |w| uniform in [0, max_tangent], pushed through from_tangent.
std::vector<QuadricPoint> sample_quadric(std::size_t m, std::size_t count, std::uint64_t seed,
                                         double max_tangent = 0.3);

// H1(x, y) = (|y|^2 + 1)^(-1/2) x for p = x + iy; requires residual below tol.
RealVector retract_H1(std::span<const std::complex<double>> p, double tol = 1e-6);
RealVector retract_H1(const QuadricPoint& p, double tol = 1e-6);

struct TangentPair {
  RealVector v;  // unit
  RealVector w;  // v . w = 0
};

// g(x, y) = ((|y|^2 + 1)^(-1/2) x, y).
TangentPair tangent_bundle_diffeo(const QuadricPoint& p, double tol = 1e-6);

// H(x, y, t) = (((1-t)^2 |y|^2 + 1)^(1/2) (|y|^2 + 1)^(-1/2) x, (1-t) y).
QuadricPoint retraction_homotopy(const QuadricPoint& p, double t);

// Max over sampled Q^(m-1) points and t in {0, 1/(tsteps-1), ..., 1} of the
// real-form residual max(| |x'|^2 - |y'|^2 - 1 |, |x'.y'|) of H(x, y, t).
double retraction_homotopy_residual(std::size_t m, std::size_t samples, std::size_t tsteps,
                                    std::uint64_t seed = 7);

struct ResidualScan {
  double max_residual = 0.0;
  double real_max = 0.0;     // over real sphere points
  double complex_max = 0.0;  // over complex quadric points
  std::size_t samples = 0;
};

// Max of |q(map(p)) - 1| over `samples` points, half on the real sphere and
// half on the complex quadric.
ResidualScan quadric_residual_scan(const PolyMap& map, std::size_t samples, std::uint64_t seed = 11);

}  // namespace quadrep
