#include "quadrep/numeric/topology.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "quadrep/error.hpp"
#include "quadrep/parallel.hpp"

namespace quadrep {

namespace {

constexpr double kPi = std::numbers::pi;

RealVector sphere_image(const PolyMap& map, std::span<const double> x) {
  const ComplexVector p(x.begin(), x.end());
  return retract_H1(map.evaluate(p));
}

void require_dims(const PolyMap& map, std::size_t m, std::size_t r, const char* what) {
  if (map.domain_dim() != m || map.codomain_dim() != r) {
    std::ostringstream out;
    out << what << " needs a map C^" << m << " -> C^" << r << ", got C^" << map.domain_dim() << " -> C^"
        << map.codomain_dim();
    fail(ErrorCode::DimensionMismatch, out.str());
  }
}

DegreeResult rounded(double raw) {
  DegreeResult d;
  d.raw = raw;
  d.degree = static_cast<int>(std::lround(raw));
  d.defect = std::abs(raw - d.degree);
  return d;
}

}  // namespace

std::optional<SuspensionLineage> suspension_lineage(const PolyMap& map) {
  if (const auto* node = std::get_if<SuspendNode>(&map.construction()))
    return SuspensionLineage{node->ell, node->triple.k};
  // Imported maps only carry their label: "[target := ]suspend(f,g,l=N)".
  std::string_view label = map.label();
  if (const auto pos = label.rfind(" := "); pos != std::string_view::npos) label.remove_prefix(pos + 4);
  if (!label.starts_with("suspend(") || !label.ends_with(")")) return std::nullopt;
  const auto at = label.rfind(",l=");
  if (at == std::string_view::npos) return std::nullopt;
  const std::string digits(label.substr(at + 3, label.size() - at - 4));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) return std::nullopt;
  const auto order = map.order();
  if (!order || *order % 2 == 0) return std::nullopt;
  return SuspensionLineage{std::stoul(digits), (*order + 1) / 2};
}

HemisphereReport hemisphere_check(const PolyMap& map, std::size_t samples, std::uint64_t seed) {
  if (const auto* node = std::get_if<SuspendNode>(&map.construction()))
    return hemisphere_check(map, node->ell, node->triple, samples, seed);
  const auto lineage = suspension_lineage(map);
  if (!lineage) fail(ErrorCode::InvalidArgument, "hemisphere check: map '" + map.label() + "' has no suspension lineage");
  return hemisphere_check(map, lineage->ell, rho_beta(lineage->k), samples, seed);
}

HemisphereReport hemisphere_check(const PolyMap& map, std::size_t ell, const Lemma1Triple& triple,
                                  std::size_t samples, std::uint64_t seed) {
  const std::size_t m = map.domain_dim();
  const std::size_t r = map.codomain_dim();
  if (ell == 0 || ell >= m || ell >= r) fail(ErrorCode::InvalidArgument, "hemisphere check: bad block size");
  const std::size_t zdim = m - ell;

  struct Row {
    double deviation = 0.0, rho = 0.0, equator = 0.0;
    std::size_t violations = 0;
  };
  const auto points = sample_sphere(m - 1, samples, seed);
  const auto equator = sample_sphere(zdim - 1, samples, seed + 1);
  std::vector<Row> rows(samples);
  parallel_for(samples, [&](std::size_t i) {
    const RealVector& x = points[i];
    const ComplexVector p(x.begin(), x.end());
    const auto image = map.evaluate(p);
    double t = 0.0;
    for (std::size_t j = 0; j < zdim; ++j) t += x[j] * x[j];
    const std::array<std::complex<double>, 2> st{1.0, t};
    const double rho = evaluate(triple.rho, st).real();
    Row& row = rows[i];
    row.rho = rho;
    for (std::size_t j = 0; j < ell; ++j) {
      const double u = x[zdim + j];
      const auto img = image[r - ell + j];
      row.deviation = std::max(row.deviation, std::abs(img - rho * u) / std::max(1.0, std::abs(rho)));
      if (std::abs(u) > 1e-9 && (img.real() > 0) != (u > 0)) ++row.violations;
    }
    ComplexVector e(m, 0.0);
    for (std::size_t j = 0; j < zdim; ++j) e[j] = equator[i][j];
    const auto eimg = map.evaluate(e);
    for (std::size_t j = 0; j < ell; ++j) row.equator = std::max(row.equator, std::abs(eimg[r - ell + j]));
  });

  HemisphereReport rep;
  rep.ell = ell;
  rep.samples = samples;
  rep.min_rho = samples ? rows[0].rho : 0.0;
  for (const Row& row : rows) {
    rep.max_deviation = std::max(rep.max_deviation, row.deviation);
    rep.min_rho = std::min(rep.min_rho, row.rho);
    rep.equator_max = std::max(rep.equator_max, row.equator);
    rep.sign_violations += row.violations;
  }
  std::ostringstream why;
  if (rep.max_deviation > 1e-9) why << "last block deviates from rho(1,|z|^2) u by " << rep.max_deviation << "; ";
  if (!(rep.min_rho > 0)) why << "rho(1,|z|^2) reaches " << rep.min_rho << "; ";
  if (rep.sign_violations) why << rep.sign_violations << " hemisphere sign violations; ";
  if (rep.equator_max > 1e-12) why << "equator image leaves the equator by " << rep.equator_max << "; ";
  rep.detail = why.str();
  rep.pass = rep.detail.empty();
  if (rep.pass) rep.detail = "equator and hemispheres preserved on all samples";
  return rep;
}

DegreeResult winding_degree(const PolyMap& map, std::size_t samples) {
  require_dims(map, 2, 2, "winding_degree");
  if (samples < 8) fail(ErrorCode::InvalidArgument, "winding_degree: need at least 8 samples");
  std::vector<double> angle(samples);
  parallel_for(samples, [&](std::size_t i) {
    const double t = 2 * kPi * static_cast<double>(i) / static_cast<double>(samples);
    const std::array<double, 2> x{std::cos(t), std::sin(t)};
    const auto h = sphere_image(map, x);
    angle[i] = std::atan2(h[1], h[0]);
  });
  double total = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    double step = angle[(i + 1) % samples] - angle[i];
    step = std::remainder(step, 2 * kPi);
    if (std::abs(step) > kPi / 2) fail(ErrorCode::Numeric, "winding_degree: angle jump too large, increase samples");
    total += step;
  }
  return rounded(total / (2 * kPi));
}

DegreeResult degree_s2(const PolyMap& map, std::size_t n_phi, std::size_t n_theta) {
  require_dims(map, 3, 3, "degree_s2");
  if (n_phi < 4 || n_theta < 2) fail(ErrorCode::InvalidArgument, "degree_s2: grid too small");
  const double dphi = 2 * kPi / static_cast<double>(n_phi);
  const double dtheta = kPi / static_cast<double>(n_theta);
  const double eps = 1e-6;
  auto h = [&](double theta, double phi) {
    const std::array<double, 3> x{std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
    return sphere_image(map, x);
  };
  std::vector<double> row_sum(n_theta, 0.0);
  parallel_for(n_theta, [&](std::size_t a) {
    const double theta = (static_cast<double>(a) + 0.5) * dtheta;
    double sum = 0.0;
    for (std::size_t b = 0; b < n_phi; ++b) {
      const double phi = (static_cast<double>(b) + 0.5) * dphi;
      const auto c = h(theta, phi);
      const auto tp = h(theta + eps, phi), tm = h(theta - eps, phi);
      const auto pp = h(theta, phi + eps), pm = h(theta, phi - eps);
      std::array<double, 3> ht{}, hp{};
      for (int j = 0; j < 3; ++j) {
        ht[j] = (tp[j] - tm[j]) / (2 * eps);
        hp[j] = (pp[j] - pm[j]) / (2 * eps);
      }
      const double cross0 = ht[1] * hp[2] - ht[2] * hp[1];
      const double cross1 = ht[2] * hp[0] - ht[0] * hp[2];
      const double cross2 = ht[0] * hp[1] - ht[1] * hp[0];
      sum += c[0] * cross0 + c[1] * cross1 + c[2] * cross2;
    }
    row_sum[a] = sum;
  });
  double total = 0.0;
  for (double s : row_sum) total += s;
  return rounded(total * dtheta * dphi / (4 * kPi));
}

NullhomotopyReport even_order_nullhomotopy_residual(const PolyMap& map, std::size_t tsteps, std::size_t samples,
                                                    std::uint64_t seed, std::optional<unsigned> order) {
  if (!order) order = map.order();
  if (!order) fail(ErrorCode::InvalidArgument, "nullhomotopy: map has no certified order");
  if (*order % 2 != 0 || *order == 0) fail(ErrorCode::InvalidArgument, "nullhomotopy: order must be even and positive");
  if (tsteps < 2) fail(ErrorCode::InvalidArgument, "nullhomotopy: need at least 2 t-steps");
  const std::size_t m = map.domain_dim();
  const std::size_t real_count = samples / 2;
  const auto sphere = sample_sphere(m - 1, real_count, seed);
  const auto quadric = sample_quadric(m, samples - real_count, seed + 1);
  const int half = static_cast<int>(*order / 2);

  struct Row {
    double residual = 0.0, start = 0.0, end = 0.0;
  };
  std::vector<Row> rows(samples);
  parallel_for(samples, [&](std::size_t i) {
    const ComplexVector z = i < real_count ? ComplexVector(sphere[i].begin(), sphere[i].end())
                                           : quadric[i - real_count].coords;
    Row& row = rows[i];
    ComplexVector neg(z.size()), w(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) neg[j] = -z[j];
    const auto at_start = map.evaluate(z);
    const auto at_end = map.evaluate(neg);
    for (std::size_t k = 0; k < tsteps; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(tsteps - 1);
      const std::complex<double> gamma = std::polar(1.0, kPi * t);
      const std::complex<double> scale = std::polar(1.0, -2.0 * half * kPi * t);
      for (std::size_t j = 0; j < z.size(); ++j) w[j] = gamma * z[j];
      auto image = map.evaluate(w);
      for (auto& c : image) c *= scale;
      row.residual = std::max(row.residual, quadric_residual(image));
      if (k == 0)
        for (std::size_t j = 0; j < image.size(); ++j) row.start = std::max(row.start, std::abs(image[j] - at_start[j]));
      if (k + 1 == tsteps)
        for (std::size_t j = 0; j < image.size(); ++j) row.end = std::max(row.end, std::abs(image[j] - at_end[j]));
    }
  });
  NullhomotopyReport rep;
  rep.samples = samples;
  rep.tsteps = tsteps;
  for (const Row& row : rows) {
    rep.max_residual = std::max(rep.max_residual, row.residual);
    rep.start_error = std::max(rep.start_error, row.start);
    rep.end_error = std::max(rep.end_error, row.end);
  }
  return rep;
}

}  // namespace quadrep
