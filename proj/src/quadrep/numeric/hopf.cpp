#include "quadrep/numeric/hopf.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>

#include "quadrep/error.hpp"
#include "quadrep/numeric/quadric.hpp"
#include "quadrep/parallel.hpp"

namespace quadrep {

namespace {

using Mat34 = Eigen::Matrix<double, 3, 4>;
using V4 = Eigen::Vector4d;
using V3 = Eigen::Vector3d;

struct RankDrop {
  double sigma;
};

// h = H1 o map on S^3, extended radially so that only the sphere row of G
// sees |x|.
class SphereMap {
 public:
  SphereMap(const PolyMap& map, const Vec3& value) : map_(map) {
    c_ = V3(value[0], value[1], value[2]).normalized();
    const V3 trial = std::abs(c_.x()) < 0.9 ? V3::UnitX() : V3::UnitY();
    e1_ = (trial - trial.dot(c_) * c_).normalized();
    e2_ = c_.cross(e1_);
  }

  V3 h(const V4& x) const {
    const V4 p = x / x.norm();
    const ComplexVector z{p[0], p[1], p[2], p[3]};
    const RealVector y = retract_H1(map_.evaluate(z));
    return V3(y[0], y[1], y[2]).normalized();
  }

  V3 G(const V4& x) const {
    const V3 y = h(x);
    return {e1_.dot(y), e2_.dot(y), x.squaredNorm() - 1.0};
  }

  bool on_value_side(const V4& x) const { return c_.dot(h(x)) > 0; }

  Mat34 jacobian(const V4& x) const {
    constexpr double d = 1e-7;
    Mat34 J;
    for (int i = 0; i < 4; ++i) {
      V4 xp = x, xm = x;
      xp[i] += d;
      xm[i] -= d;
      const V3 hp = h(xp), hm = h(xm);
      J(0, i) = e1_.dot(hp - hm) / (2 * d);
      J(1, i) = e2_.dot(hp - hm) / (2 * d);
      J(2, i) = 2 * x[i];
    }
    return J;
  }

  double distance(const V4& x) const { return (h(x) - c_).norm(); }

 private:
  const PolyMap& map_;
  V3 c_, e1_, e2_;
};

double smallest_singular(const Mat34& J) {
  Eigen::JacobiSVD<Mat34> svd(J);
  return svd.singularValues()[2];
}

// Kernel direction of J by cofactors: T_i = (-1)^i det(J without column i).
// The sign convention fixes one orientation for every preimage curve.
V4 tangent(const Mat34& J) {
  V4 t;
  for (int i = 0; i < 4; ++i) {
    Eigen::Matrix3d minor;
    for (int r = 0, col = 0; col < 4; ++col) {
      if (col == i) continue;
      minor.col(r++) = J.col(col);
    }
    t[i] = (i % 2 == 0 ? 1.0 : -1.0) * minor.determinant();
  }
  return t.normalized();
}

// Newton with minimum-norm steps onto G = 0 on the value side.
std::optional<V4> correct(const SphereMap& h, V4 x, const HopfOptions& opt) {
  for (int iter = 0; iter < 30; ++iter) {
    const V3 g = h.G(x);
    if (!g.allFinite()) return std::nullopt;
    if (g.lpNorm<Eigen::Infinity>() < opt.newton_tol) {
      if (!h.on_value_side(x)) return std::nullopt;
      return x;
    }
    const Mat34 J = h.jacobian(x);
    Eigen::JacobiSVD<Mat34> svd(J, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-10);
    V4 dx = -svd.solve(g);
    const double len = dx.norm();
    if (len > 0.25) dx *= 0.25 / len;
    x += dx;
  }
  return std::nullopt;
}

TracedCurve trace_from(const SphereMap& h, const V4& start, const Vec3& value, const HopfOptions& opt,
                       std::size_t& budget) {
  TracedCurve curve;
  curve.value = value;
  auto regular_tangent = [&](const V4& x) {
    const Mat34 J = h.jacobian(x);
    const double sigma = smallest_singular(J);
    if (sigma < opt.rank_tol) throw RankDrop{sigma};
    return tangent(J);
  };
  auto record = [&](const V4& x) {
    curve.points.push_back({x[0], x[1], x[2], x[3]});
    curve.max_residual = std::max(curve.max_residual, h.G(x).lpNorm<Eigen::Infinity>());
  };

  V4 x = start;
  V4 t = regular_tangent(x);
  record(x);
  double arc = 0.0;
  double step = opt.step;
  while (budget > 0) {
    --budget;
    // Close once the start lies ahead within one step.
    const double ahead = (start - x).dot(t);
    if (arc > 3 * opt.step && ahead > 0 && ahead <= step && (start - x).norm() < 1.5 * step) {
      if (const auto xn = correct(h, x + ahead * t, opt)) {
        if ((*xn - start).norm() < opt.closure_tol) {
          curve.closed = true;
          return curve;
        }
        if ((*xn - x).norm() > 1e-12 && regular_tangent(*xn).dot(t) > 0.5) {
          arc += (*xn - x).norm();
          x = *xn;
          t = regular_tangent(x);
          record(x);
          continue;
        }
      }
    }
    const auto xn = correct(h, x + step * t, opt);
    bool ok = false;
    V4 tn;
    if (xn) {
      const double moved = (*xn - x).norm();
      if (moved > 0.5 * step && moved < 1.5 * step) {
        tn = regular_tangent(*xn);
        ok = tn.dot(t) > 0.9;
      }
    }
    if (!ok) {
      step /= 2;
      if (step < opt.step * 1e-6) fail(ErrorCode::Numeric, "preimage curve lost during continuation");
      continue;
    }
    arc += (*xn - x).norm();
    x = *xn;
    t = tn;
    record(x);
    step = std::min(opt.step, step * 2);
  }
  fail(ErrorCode::Numeric, "preimage curve did not close within the step budget");
}

double distance_to(const TracedCurve& c, const V4& x) {
  double best = std::numeric_limits<double>::infinity();
  for (const auto& p : c.points) best = std::min(best, (V4(p[0], p[1], p[2], p[3]) - x).norm());
  return best;
}

Vec3 perturbed(const Vec3& v, std::size_t attempt, std::uint64_t seed) {
  std::mt19937_64 rng(seed + 1000 * attempt);
  std::normal_distribution<double> normal;
  V3 d(normal(rng), normal(rng), normal(rng));
  V3 w = V3(v[0], v[1], v[2]) + 0.05 * static_cast<double>(attempt) * d.normalized();
  w.normalize();
  return {w[0], w[1], w[2]};
}

}  // namespace

std::vector<TracedCurve> trace_preimage(const PolyMap& map, const Vec3& value, const HopfOptions& opt) {
  if (map.domain_dim() != 4 || map.codomain_dim() != 3)
    fail(ErrorCode::DimensionMismatch, "Hopf invariant needs a map C^4 -> C^3");
  const SphereMap h(map, value);

  const auto samples = sample_sphere(3, opt.seeds, opt.seed);
  std::vector<double> score(samples.size());
  parallel_for(samples.size(), [&](std::size_t i) {
    score[i] = h.distance(V4(samples[i][0], samples[i][1], samples[i][2], samples[i][3]));
  });
  std::vector<std::size_t> order(samples.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });

  // Candidates close to the value, refined in parallel; each refined point
  // not already on a traced component starts a new one.
  std::size_t keep = 0;
  while (keep < order.size() && keep < 2000 && (keep < 16 || score[order[keep]] < 0.2)) ++keep;
  std::vector<std::optional<V4>> refined(keep);
  parallel_for(keep, [&](std::size_t i) {
    const auto& s = samples[order[i]];
    refined[i] = correct(h, V4(s[0], s[1], s[2], s[3]), opt);
  });

  std::vector<TracedCurve> curves;
  std::size_t budget = opt.max_steps;
  for (const auto& r : refined) {
    if (!r) continue;
    bool known = false;
    for (const auto& c : curves)
      if (distance_to(c, *r) < 2 * opt.step) known = true;
    if (known) continue;
    if (curves.size() == opt.max_components) fail(ErrorCode::Numeric, "too many preimage components");
    curves.push_back(trace_from(h, *r, value, opt, budget));
  }
  return curves;
}

double linking_number(const std::vector<TracedCurve>& a, const std::vector<TracedCurve>& b) {
  // Projection pole: the sampled point farthest from every curve point.
  const auto candidates = sample_sphere(3, 256, 99);
  V4 pole = V4::UnitW();
  double best = -1.0;
  for (const auto& c : candidates) {
    const V4 p(c[0], c[1], c[2], c[3]);
    double nearest = std::numeric_limits<double>::infinity();
    for (const auto* family : {&a, &b})
      for (const auto& curve : *family) nearest = std::min(nearest, distance_to(curve, p));
    if (nearest > best) {
      best = nearest;
      pole = p;
    }
  }
  // Basis of the tangent space at the pole with det[b1, b2, b3, pole] = +1.
  Eigen::Matrix4d frame;
  frame.col(3) = pole;
  {
    Eigen::Matrix4d seed = Eigen::Matrix4d::Identity();
    int filled = 0;
    for (int i = 0; i < 4 && filled < 3; ++i) {
      V4 v = seed.col(i);
      v -= v.dot(pole) * pole;
      for (int j = 0; j < filled; ++j) v -= v.dot(frame.col(j)) * frame.col(j);
      if (v.norm() < 1e-3) continue;
      frame.col(filled++) = v.normalized();
    }
    if (frame.determinant() < 0) frame.col(0) = -frame.col(0);
  }
  auto project = [&](const Vec4& q) -> V3 {
    const V4 x(q[0], q[1], q[2], q[3]);
    const double denom = 1.0 - pole.dot(x);
    return V3(frame.col(0).dot(x), frame.col(1).dot(x), frame.col(2).dot(x)) / denom;
  };
  auto polyline = [&](const TracedCurve& c) {
    std::vector<V3> pts;
    pts.reserve(c.points.size());
    for (const auto& q : c.points) pts.push_back(project(q));
    return pts;
  };

  double total = 0.0;
  for (const auto& ca : a) {
    const auto pa = polyline(ca);
    for (const auto& cb : b) {
      const auto pb = polyline(cb);
      const std::size_t na = pa.size(), nb = pb.size();
      std::vector<double> rows(na, 0.0);
      parallel_for(na, [&](std::size_t i) {
        const V3 da = pa[(i + 1) % na] - pa[i];
        const V3 ma = 0.5 * (pa[(i + 1) % na] + pa[i]);
        double sum = 0.0;
        for (std::size_t j = 0; j < nb; ++j) {
          const V3 db = pb[(j + 1) % nb] - pb[j];
          const V3 d = ma - 0.5 * (pb[(j + 1) % nb] + pb[j]);
          const double r = d.norm();
          sum += d.dot(da.cross(db)) / (r * r * r);
        }
        rows[i] = sum;
      });
      for (double r : rows) total += r;
    }
  }
  return total / (4 * std::numbers::pi);
}

HopfResult hopf_invariant(const PolyMap& map, const HopfOptions& opt) {
  if (map.domain_dim() != 4 || map.codomain_dim() != 3)
    fail(ErrorCode::DimensionMismatch, "Hopf invariant needs a map C^4 -> C^3");
  HopfResult res;
  res.value_a = opt.value_a;
  res.value_b = opt.value_b;

  std::array<std::vector<TracedCurve>, 2> traced;
  std::array<Vec3*, 2> values{&res.value_a, &res.value_b};
  std::array<std::size_t, 2> retries{0, 0};
  parallel_for(2, [&](std::size_t which) {
    const Vec3 original = *values[which];
    for (std::size_t attempt = 0;; ++attempt) {
      try {
        traced[which] = trace_preimage(map, *values[which], opt);
        return;
      } catch (const RankDrop&) {
        if (attempt + 1 >= opt.max_perturbations)
          fail(ErrorCode::Numeric, "no regular value found near the requested one");
        *values[which] = perturbed(original, attempt + 1, opt.seed + which);
        ++retries[which];
      }
    }
  });
  res.perturbations = retries[0] + retries[1];
  res.a = std::move(traced[0]);
  res.b = std::move(traced[1]);
  if (res.a.empty() || res.b.empty()) {
    res.note = "a regular value has no preimage; the map is not onto and the invariant is 0";
    return res;
  }
  res.curves_found = true;
  res.linking = linking_number(res.a, res.b);
  res.invariant = static_cast<int>(std::lround(res.linking));
  res.defect = std::abs(res.linking - res.invariant);
  std::ostringstream note;
  note << res.a.size() << " + " << res.b.size() << " preimage components";
  res.note = note.str();
  return res;
}

}  // namespace quadrep
