#include "quadrep/numeric/quadric.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "quadrep/error.hpp"
#include "quadrep/parallel.hpp"

namespace quadrep {

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void require_on_quadric(double residual, double tol) {
  if (!(residual < tol)) {
    std::ostringstream out;
    out << "point is off the quadric (residual " << residual << ", tolerance " << tol << ")";
    fail(ErrorCode::InvalidArgument, out.str());
  }
}

}  // namespace

double quadric_residual(std::span<const std::complex<double>> p) {
  std::complex<double> q = 0.0;
  for (const auto& z : p) q += z * z;
  return std::abs(q - 1.0);
}

QuadricPoint QuadricPoint::from(ComplexVector coords) {
  QuadricPoint p;
  p.residual = quadric_residual(coords);
  p.coords = std::move(coords);
  return p;
}

QuadricPoint QuadricPoint::real(std::span<const double> x) {
  return from(ComplexVector(x.begin(), x.end()));
}

std::vector<RealVector> sample_sphere(std::size_t n, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  std::vector<RealVector> out;
  out.reserve(count);
  while (out.size() < count) {
    RealVector x(n + 1);
    for (auto& c : x) c = normal(rng);
    const double norm = std::sqrt(dot(x, x));
    if (norm < 1e-12) continue;
    for (auto& c : x) c /= norm;
    out.push_back(std::move(x));
  }
  return out;
}

QuadricPoint from_tangent(std::span<const double> v, std::span<const double> w) {
  if (v.size() != w.size()) fail(ErrorCode::DimensionMismatch, "tangent pair lengths differ");
  const double scale = std::sqrt(dot(w, w) + 1.0);
  ComplexVector z(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) z[i] = {scale * v[i], w[i]};
  return QuadricPoint::from(std::move(z));
}

std::vector<QuadricPoint> sample_quadric(std::size_t m, std::size_t count, std::uint64_t seed, double max_tangent) {
  if (m == 0) fail(ErrorCode::InvalidArgument, "sample_quadric: m must be positive");
  std::mt19937_64 rng(seed ^ 0xa5a5a5a5u);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const auto base = sample_sphere(m - 1, count, seed);
  std::vector<QuadricPoint> out;
  out.reserve(count);
  for (const auto& v : base) {
    RealVector w(m);
    for (auto& c : w) c = normal(rng);
    const double along = dot(w, v);
    for (std::size_t i = 0; i < m; ++i) w[i] -= along * v[i];
    const double norm = std::sqrt(dot(w, w));
    const double target = max_tangent * unit(rng);
    for (auto& c : w) c = norm > 1e-12 ? c * target / norm : 0.0;
    out.push_back(from_tangent(v, w));
  }
  return out;
}

RealVector retract_H1(std::span<const std::complex<double>> p, double tol) {
  require_on_quadric(quadric_residual(p), tol);
  double y2 = 0.0;
  for (const auto& z : p) y2 += z.imag() * z.imag();
  const double scale = 1.0 / std::sqrt(y2 + 1.0);
  RealVector x(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) x[i] = scale * p[i].real();
  return x;
}

RealVector retract_H1(const QuadricPoint& p, double tol) { return retract_H1(p.coords, tol); }

TangentPair tangent_bundle_diffeo(const QuadricPoint& p, double tol) {
  TangentPair out;
  out.v = retract_H1(p, tol);
  out.w.resize(p.coords.size());
  for (std::size_t i = 0; i < p.coords.size(); ++i) out.w[i] = p.coords[i].imag();
  return out;
}

QuadricPoint retraction_homotopy(const QuadricPoint& p, double t) {
  double y2 = 0.0;
  for (const auto& z : p.coords) y2 += z.imag() * z.imag();
  const double s = 1.0 - t;
  const double scale = std::sqrt(s * s * y2 + 1.0) / std::sqrt(y2 + 1.0);
  ComplexVector out(p.coords.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = {scale * p.coords[i].real(), s * p.coords[i].imag()};
  return QuadricPoint::from(std::move(out));
}

double retraction_homotopy_residual(std::size_t m, std::size_t samples, std::size_t tsteps, std::uint64_t seed) {
  if (m < 2) fail(ErrorCode::InvalidArgument, "retraction_homotopy_residual: m must be at least 2");
  if (tsteps < 2) fail(ErrorCode::InvalidArgument, "retraction_homotopy_residual: need at least 2 t-steps");
  const auto points = sample_quadric(m, samples, seed);
  std::vector<double> worst(points.size(), 0.0);
  parallel_for(points.size(), [&](std::size_t i) {
    for (std::size_t k = 0; k < tsteps; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(tsteps - 1);
      const QuadricPoint h = retraction_homotopy(points[i], t);
      double x2 = 0.0, y2 = 0.0, xy = 0.0;
      for (const auto& z : h.coords) {
        x2 += z.real() * z.real();
        y2 += z.imag() * z.imag();
        xy += z.real() * z.imag();
      }
      worst[i] = std::max({worst[i], std::abs(x2 - y2 - 1.0), std::abs(xy)});
    }
  });
  return worst.empty() ? 0.0 : *std::max_element(worst.begin(), worst.end());
}

ResidualScan quadric_residual_scan(const PolyMap& map, std::size_t samples, std::uint64_t seed) {
  const std::size_t m = map.domain_dim();
  const std::size_t real_count = samples / 2;
  const std::size_t complex_count = samples - real_count;
  const auto sphere = sample_sphere(m - 1, real_count, seed);
  const auto quadric = sample_quadric(m, complex_count, seed + 1);
  std::vector<double> res(samples, 0.0);
  parallel_for(samples, [&](std::size_t i) {
    ComplexVector p = i < real_count ? ComplexVector(sphere[i].begin(), sphere[i].end())
                                     : quadric[i - real_count].coords;
    res[i] = quadric_residual(map.evaluate(p));
  });
  ResidualScan scan;
  scan.samples = samples;
  for (std::size_t i = 0; i < samples; ++i) {
    if (i < real_count)
      scan.real_max = std::max(scan.real_max, res[i]);
    else
      scan.complex_max = std::max(scan.complex_max, res[i]);
  }
  scan.max_residual = std::max(scan.real_max, scan.complex_max);
  return scan;
}

}  // namespace quadrep
