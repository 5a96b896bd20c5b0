#include "quadrep/maps/certify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "quadrep/error.hpp"
#include "quadrep/parallel.hpp"

namespace quadrep {

std::string_view to_string(CertMethod m) {
  return m == CertMethod::FullExpansion ? "full-expansion" : "exact-evaluation";
}

std::string_view to_string(GridKind g) {
  switch (g) {
    case GridKind::None: return "none";
    case GridKind::TensorGrid: return "tensor-grid";
    case GridKind::Sampled: return "sampled";
  }
  return "none";
}

namespace {

constexpr std::size_t kUnbounded = std::numeric_limits<std::size_t>::max();

std::string clip(std::string s, std::size_t n = 96) {
  if (s.size() > n) s = s.substr(0, n) + "...";
  return s;
}

std::string describe_point(std::span<const GaussianRational> p, const GaussianRational& value) {
  std::ostringstream out;
  out << "z=(";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? "," : "") << p[i].str();
  out << ") value=" << clip(value.str());
  return out.str();
}

std::size_t tensor_size(const std::vector<unsigned>& bounds, std::size_t cap) {
  std::size_t n = 1;
  for (unsigned b : bounds) {
    if (n > cap / (b + 1)) return kUnbounded;
    n *= b + 1;
  }
  return n;
}

PHCertificate evaluate_points(const IdentityProblem& pb, PHCertificate cert,
                              const std::vector<std::vector<GaussianRational>>& points) {
  std::vector<char> nonzero(points.size(), 0);
  std::vector<GaussianRational> values(points.size());
  parallel_for(points.size(), [&](std::size_t i) {
    GaussianRational v = pb.evaluate(points[i]);
    if (!v.is_zero()) {
      nonzero[i] = 1;
      values[i] = std::move(v);
    }
  });
  cert.points = points.size();
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (nonzero[i]) {
      cert.pass = false;
      cert.witness = describe_point(points[i], values[i]);
      return cert;
    }
  }
  cert.pass = true;
  return cert;
}

}  // namespace

PHCertificate zero_test(const IdentityProblem& pb, unsigned claimed_order, const CertifyOptions& opt) {
  PHCertificate cert;
  cert.identity = pb.identity;
  cert.claimed_order = claimed_order;
  cert.degree_bound = pb.degree_bounds.empty() ? 0 : *std::max_element(pb.degree_bounds.begin(), pb.degree_bounds.end());
  cert.total_degree = pb.total_degree;

  const bool can_expand = static_cast<bool>(pb.expand) && pb.expansion_cost <= opt.expansion_budget;
  CertifyMode mode = opt.mode;
  if (mode == CertifyMode::Auto) mode = can_expand ? CertifyMode::FullExpansion : CertifyMode::ExactEvaluation;

  if (mode == CertifyMode::FullExpansion) {
    if (!can_expand)
      fail(ErrorCode::TooLarge, "full expansion of " + pb.identity + " needs about " +
                                    std::to_string(pb.expansion_cost) + " coefficient products, budget is " +
                                    std::to_string(opt.expansion_budget));
    cert.method = CertMethod::FullExpansion;
    const Polynomial diff = pb.expand();
    cert.pass = diff.is_zero();
    if (!cert.pass) cert.witness = "nonzero term " + clip(diff.str(1), 160);
    return cert;
  }

  cert.method = CertMethod::ExactEvaluation;
  std::vector<std::vector<GaussianRational>> points;
  const std::size_t grid = tensor_size(pb.degree_bounds, opt.grid_budget);
  if (grid <= opt.grid_budget) {
    // S_v = {0, 1, ..., deg_v}: one more point than the degree in every variable.
    cert.grid = GridKind::TensorGrid;
    std::vector<unsigned> idx(pb.nvars, 0);
    for (std::size_t n = 0; n < grid; ++n) {
      std::vector<GaussianRational> p;
      p.reserve(pb.nvars);
      for (unsigned v : idx) p.emplace_back(static_cast<long>(v));
      points.push_back(std::move(p));
      for (std::size_t v = 0; v < pb.nvars; ++v) {
        if (++idx[v] <= pb.degree_bounds[v]) break;
        idx[v] = 0;
      }
    }
    return evaluate_points(pb, std::move(cert), points);
  }

  cert.grid = GridKind::Sampled;
  const double set_size = 2.0 * static_cast<double>(opt.sample_radius) + 1.0;
  const double ratio = std::max<double>(pb.total_degree, 1) / set_size;
  if (ratio >= 1.0) fail(ErrorCode::InvalidArgument, "sample radius too small for the degree bound");
  const auto count = static_cast<std::size_t>(std::ceil(std::log(opt.target_failure) / std::log(ratio)));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::int64_t> coord(-opt.sample_radius, opt.sample_radius);
  for (std::size_t n = 0; n < std::max<std::size_t>(count, 1); ++n) {
    std::vector<GaussianRational> p;
    p.reserve(pb.nvars);
    for (std::size_t v = 0; v < pb.nvars; ++v) p.emplace_back(Rational(static_cast<long>(coord(rng))));
    points.push_back(std::move(p));
  }
  cert.failure_bound = std::pow(ratio, static_cast<double>(points.size()));
  return evaluate_points(pb, std::move(cert), points);
}

PHCertificate certify_order(const PolyMap& map, unsigned k, const CertifyOptions& options) {
  const std::size_t m = map.domain_dim();
  IdentityProblem pb;
  pb.identity = "q(F(z)) - q(z)^" + std::to_string(k) + " for F = " + map.label();
  pb.nvars = m;
  pb.degree_bounds.resize(m);
  for (std::size_t v = 0; v < m; ++v) pb.degree_bounds[v] = std::max(2 * map.degree_bounds()[v], 2 * k);
  pb.total_degree = std::max(2 * map.total_degree_bound(), 2 * k);
  pb.evaluate = [map, k](std::span<const GaussianRational> z) {
    const auto fz = map.evaluate_exact(z);
    GaussianRational qf;
    for (const auto& x : fz) qf += x * x;
    GaussianRational qz;
    for (const auto& x : z) qz += x * x;
    return qf - pow(qz, k);
  };
  if (map.is_expanded()) {
    std::size_t cost = 0;
    for (const auto& c : map.components()) cost += c.size() * c.size();
    pb.expansion_cost = cost;
    pb.expand = [map, k, m] {
      Polynomial qf(m);
      for (const auto& c : map.components()) qf += c * c;
      Polynomial qz(m);
      for (std::size_t v = 0; v < m; ++v) {
        const Polynomial x = Polynomial::variable(m, v);
        qz += x * x;
      }
      return qf - qz.pow(k);
    };
  } else {
    pb.expansion_cost = kUnbounded;
  }
  return zero_test(pb, k, options);
}

PHCertificate certify_orthogonal(const PolyMap& f, const PolyMap& g, const CertifyOptions& options) {
  if (f.domain_dim() != g.domain_dim() || f.codomain_dim() != g.codomain_dim())
    fail(ErrorCode::DimensionMismatch, "orthogonality needs maps with equal dimensions");
  const std::size_t m = f.domain_dim();
  IdentityProblem pb;
  pb.identity = "b(f(z), g(z)) for f = " + f.label() + ", g = " + g.label();
  pb.nvars = m;
  pb.degree_bounds.resize(m);
  for (std::size_t v = 0; v < m; ++v) pb.degree_bounds[v] = f.degree_bounds()[v] + g.degree_bounds()[v];
  pb.total_degree = f.total_degree_bound() + g.total_degree_bound();
  pb.evaluate = [f, g](std::span<const GaussianRational> z) {
    const auto fz = f.evaluate_exact(z);
    const auto gz = g.evaluate_exact(z);
    GaussianRational b;
    for (std::size_t j = 0; j < fz.size(); ++j) b += fz[j] * gz[j];
    return b;
  };
  if (f.is_expanded() && g.is_expanded()) {
    std::size_t cost = 0;
    for (std::size_t j = 0; j < f.codomain_dim(); ++j) cost += f.components()[j].size() * g.components()[j].size();
    pb.expansion_cost = cost;
    pb.expand = [f, g, m] {
      Polynomial b(m);
      for (std::size_t j = 0; j < f.codomain_dim(); ++j) b += f.components()[j] * g.components()[j];
      return b;
    };
  } else {
    pb.expansion_cost = kUnbounded;
  }
  return zero_test(pb, 0, options);
}

}  // namespace quadrep
