#include "quadrep/maps/poly_map.hpp"

#include <algorithm>
#include <limits>

#include "quadrep/error.hpp"

namespace quadrep {

struct PolyMap::Impl {
  std::size_t m = 0;
  std::size_t r = 0;
  std::string label;
  std::optional<unsigned> order;
  std::optional<PHCertificate> certificate;
  Construction construction;
  std::optional<std::vector<Polynomial>> components;
  std::vector<FloatPolynomial> float_components;
  std::vector<unsigned> bounds;
  unsigned total_bound = 0;
};

namespace {

constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();

std::size_t sat_add(std::size_t a, std::size_t b) { return a > kSaturated - b ? kSaturated : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) return 0;
  return a > kSaturated / b ? kSaturated : a * b;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    const std::size_t num = n - k + i;
    if (r > kSaturated / num) return kSaturated;
    r = r * num / i;
  }
  return r;
}

std::vector<Polynomial> expand_suspension(const SuspendNode& node, const std::vector<Polynomial>& f,
                                          const std::vector<Polynomial>& g);

template <class Scalar>
Scalar sum_squares(std::span<const Scalar> v) {
  Scalar s{};
  for (const auto& x : v) s += x * x;
  return s;
}

}  // namespace

void PolyMap::compute_bounds(Impl& impl) {
  impl.bounds.assign(impl.m, 0);
  impl.total_bound = 0;
  if (impl.components) {
    for (const auto& c : *impl.components) {
      const auto b = c.degree_bounds();
      for (std::size_t v = 0; v < impl.m; ++v) impl.bounds[v] = std::max(impl.bounds[v], b[v]);
      impl.total_bound = std::max(impl.total_bound, static_cast<unsigned>(std::max(c.total_degree(), 0)));
    }
    return;
  }
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ComposeNode>) {
          const unsigned outer_deg = node.outer.total_degree_bound();
          for (std::size_t v = 0; v < impl.m; ++v) impl.bounds[v] = outer_deg * node.inner.degree_bounds()[v];
          impl.total_bound = outer_deg * node.inner.total_degree_bound();
        } else if constexpr (std::is_same_v<T, SuspendNode>) {
          const unsigned coeff = 2 * (node.triple.k - 1);
          const std::size_t base = node.f.domain_dim();
          for (std::size_t v = 0; v < impl.m; ++v) {
            if (v < base)
              impl.bounds[v] = coeff + std::max(node.f.degree_bounds()[v], node.g.degree_bounds()[v]);
            else
              impl.bounds[v] = coeff + 1;
          }
          impl.total_bound =
              coeff + std::max({node.f.total_degree_bound(), node.g.total_degree_bound(), 1u});
        } else if constexpr (std::is_same_v<T, BlendNode>) {
          for (std::size_t v = 0; v < impl.m; ++v)
            impl.bounds[v] = std::max(node.f.degree_bounds()[v], node.g.degree_bounds()[v]);
          impl.total_bound = std::max(node.f.total_degree_bound(), node.g.total_degree_bound());
        }
      },
      impl.construction);
}

PolyMap PolyMap::from_components(std::vector<Polynomial> components, std::string label) {
  if (components.empty()) fail(ErrorCode::InvalidArgument, "map needs at least one component");
  const std::size_t m = components.front().nvars();
  for (const auto& c : components)
    if (c.nvars() != m) fail(ErrorCode::DimensionMismatch, "map components disagree on the number of variables");
  auto impl = std::make_shared<Impl>();
  impl->m = m;
  impl->r = components.size();
  impl->label = std::move(label);
  impl->construction = LeafNode{};
  for (const auto& c : components) impl->float_components.emplace_back(c);
  impl->components = std::move(components);
  compute_bounds(*impl);
  return PolyMap(std::move(impl));
}

PolyMap PolyMap::from_construction(std::size_t domain_dim, std::size_t codomain_dim, Construction construction,
                                   std::string label) {
  if (std::holds_alternative<LeafNode>(construction))
    fail(ErrorCode::InvalidArgument, "leaf maps need explicit components");
  auto impl = std::make_shared<Impl>();
  impl->m = domain_dim;
  impl->r = codomain_dim;
  impl->label = std::move(label);
  impl->construction = std::move(construction);
  compute_bounds(*impl);
  return PolyMap(std::move(impl));
}

std::size_t PolyMap::domain_dim() const { return impl_->m; }
std::size_t PolyMap::codomain_dim() const { return impl_->r; }
const std::string& PolyMap::label() const { return impl_->label; }
std::optional<unsigned> PolyMap::order() const { return impl_->order; }
const std::optional<PHCertificate>& PolyMap::certificate() const { return impl_->certificate; }
const Construction& PolyMap::construction() const { return impl_->construction; }
bool PolyMap::is_expanded() const { return impl_->components.has_value(); }
const std::vector<unsigned>& PolyMap::degree_bounds() const { return impl_->bounds; }
unsigned PolyMap::total_degree_bound() const { return impl_->total_bound; }

const std::vector<Polynomial>& PolyMap::components() const {
  if (!impl_->components) fail(ErrorCode::InvalidArgument, "map '" + impl_->label + "' is not expanded");
  return *impl_->components;
}

PolyMap PolyMap::with_certificate(PHCertificate cert) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->order = cert.pass ? std::optional<unsigned>(cert.claimed_order) : std::nullopt;
  impl->certificate = std::move(cert);
  return PolyMap(std::move(impl));
}

PolyMap PolyMap::with_label(std::string label) const {
  auto impl = std::make_shared<Impl>(*impl_);
  impl->label = std::move(label);
  return PolyMap(std::move(impl));
}

PolyMap PolyMap::with_expansion(std::vector<Polynomial> expanded) const {
  if (expanded.size() != impl_->r) fail(ErrorCode::DimensionMismatch, "expansion has the wrong codomain size");
  for (const auto& c : expanded)
    if (c.nvars() != impl_->m) fail(ErrorCode::DimensionMismatch, "expansion has the wrong number of variables");
  auto impl = std::make_shared<Impl>(*impl_);
  impl->float_components.clear();
  for (const auto& c : expanded) impl->float_components.emplace_back(c);
  impl->components = std::move(expanded);
  compute_bounds(*impl);
  return PolyMap(std::move(impl));
}

std::vector<std::complex<double>> PolyMap::evaluate(std::span<const std::complex<double>> point) const {
  if (point.size() != impl_->m) fail(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  if (impl_->components) {
    const auto powers = power_table(point, impl_->bounds);
    std::vector<std::complex<double>> out;
    out.reserve(impl_->r);
    for (const auto& c : impl_->float_components) out.push_back(c.with_powers(powers));
    return out;
  }
  return std::visit(
      [&](const auto& node) -> std::vector<std::complex<double>> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ComposeNode>) {
          const auto mid = node.inner.evaluate(point);
          return node.outer.evaluate(mid);
        } else if constexpr (std::is_same_v<T, SuspendNode>) {
          const std::size_t base = node.f.domain_dim();
          const auto z = point.first(base);
          const std::complex<double> t = sum_squares(z);
          const std::complex<double> s = t + sum_squares(point.subspan(base));
          const std::complex<double> st[2] = {s, t};
          const auto b1 = quadrep::evaluate(node.triple.beta1, st);
          const auto b2 = quadrep::evaluate(node.triple.beta2, st);
          const auto rho = quadrep::evaluate(node.triple.rho, st);
          const auto fz = node.f.evaluate(z);
          const auto gz = node.g.evaluate(z);
          std::vector<std::complex<double>> out;
          out.reserve(impl_->r);
          for (std::size_t j = 0; j < fz.size(); ++j) out.push_back(b1 * fz[j] + b2 * gz[j]);
          for (std::size_t j = base; j < point.size(); ++j) out.push_back(rho * point[j]);
          return out;
        } else if constexpr (std::is_same_v<T, BlendNode>) {
          const auto fz = node.f.evaluate(point);
          const auto gz = node.g.evaluate(point);
          std::vector<std::complex<double>> out(fz.size());
          for (std::size_t j = 0; j < fz.size(); ++j) out[j] = node.cos_weight * fz[j] + node.sin_weight * gz[j];
          return out;
        } else {
          fail(ErrorCode::Internal, "leaf map without components");
        }
      },
      impl_->construction);
}

std::vector<GaussianRational> PolyMap::evaluate_exact(std::span<const GaussianRational> point) const {
  if (point.size() != impl_->m) fail(ErrorCode::DimensionMismatch, "evaluation point has wrong length");
  if (impl_->components) {
    std::vector<GaussianRational> out;
    out.reserve(impl_->r);
    for (const auto& c : *impl_->components) out.push_back(quadrep::evaluate_exact(c, point));
    return out;
  }
  return std::visit(
      [&](const auto& node) -> std::vector<GaussianRational> {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ComposeNode>) {
          const auto mid = node.inner.evaluate_exact(point);
          return node.outer.evaluate_exact(mid);
        } else if constexpr (std::is_same_v<T, SuspendNode>) {
          const std::size_t base = node.f.domain_dim();
          const auto z = point.first(base);
          const GaussianRational t = sum_squares(z);
          const GaussianRational s = t + sum_squares(point.subspan(base));
          const GaussianRational st[2] = {s, t};
          const auto b1 = quadrep::evaluate_exact(node.triple.beta1, st);
          const auto b2 = quadrep::evaluate_exact(node.triple.beta2, st);
          const auto rho = quadrep::evaluate_exact(node.triple.rho, st);
          const auto fz = node.f.evaluate_exact(z);
          const auto gz = node.g.evaluate_exact(z);
          std::vector<GaussianRational> out;
          out.reserve(impl_->r);
          for (std::size_t j = 0; j < fz.size(); ++j) out.push_back(b1 * fz[j] + b2 * gz[j]);
          for (std::size_t j = base; j < point.size(); ++j) out.push_back(rho * point[j]);
          return out;
        } else if constexpr (std::is_same_v<T, BlendNode>) {
          fail(ErrorCode::InvalidArgument, "blended map '" + impl_->label + "' has floating weights");
        } else {
          fail(ErrorCode::Internal, "leaf map without components");
        }
      },
      impl_->construction);
}

std::size_t estimate_expansion_cost(const PolyMap& map) {
  if (map.is_expanded()) return 0;
  return std::visit(
      [&](const auto& node) -> std::size_t {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ComposeNode>) {
          std::size_t cost = sat_add(estimate_expansion_cost(node.outer), estimate_expansion_cost(node.inner));
          if (!node.inner.is_expanded() || !node.outer.is_expanded()) return kSaturated;
          const auto& inner = node.inner.components();
          for (const auto& comp : node.outer.components()) {
            for (std::size_t t = 0; t < comp.size(); ++t) {
              const auto e = comp.exponents(t);
              std::size_t term = 1;
              for (std::size_t j = 0; j < e.size(); ++j)
                for (Exponent p = 0; p < e[j]; ++p) term = sat_mul(term, inner[j].size());
              cost = sat_add(cost, term);
            }
          }
          return cost;
        } else if constexpr (std::is_same_v<T, SuspendNode>) {
          if (!node.f.is_expanded() || !node.g.is_expanded()) return kSaturated;
          const std::size_t n = map.domain_dim();
          const std::size_t deg = node.triple.k - 1;
          // beta(s, t) is homogeneous of degree k-1 in the n squared variables.
          const std::size_t coeff_terms = sat_add(binomial(deg + n - 1, n - 1), 1);
          std::size_t cost = sat_mul(deg, sat_mul(coeff_terms, n));
          for (std::size_t j = 0; j < node.f.codomain_dim(); ++j)
            cost = sat_add(cost, sat_mul(coeff_terms, node.f.components()[j].size() + node.g.components()[j].size()));
          return sat_add(cost, sat_mul(coeff_terms, node.ell));
        } else {
          return kSaturated;
        }
      },
      map.construction());
}

namespace {

std::vector<Polynomial> expand_suspension(const SuspendNode& node, const std::vector<Polynomial>& f,
                                          const std::vector<Polynomial>& g) {
  const std::size_t base = node.f.domain_dim();
  const std::size_t n = base + node.ell;
  Polynomial t(n);
  Polynomial s(n);
  for (std::size_t v = 0; v < n; ++v) {
    const Polynomial x = Polynomial::variable(n, v);
    if (v < base) t += x * x;
    s += x * x;
  }
  const Polynomial args[2] = {s, t};
  const Polynomial b1 = compose(node.triple.beta1, args);
  const Polynomial b2 = compose(node.triple.beta2, args);
  const Polynomial rho = compose(node.triple.rho, args);
  std::vector<Polynomial> out;
  for (std::size_t j = 0; j < f.size(); ++j)
    out.push_back(b1 * f[j].extended(node.ell) + b2 * g[j].extended(node.ell));
  for (std::size_t j = 0; j < node.ell; ++j) out.push_back(rho * Polynomial::variable(n, base + j));
  return out;
}

}  // namespace

PolyMap expand(const PolyMap& map, std::size_t budget) {
  if (map.is_expanded()) return map;
  const std::size_t cost = estimate_expansion_cost(map);
  if (cost > budget)
    fail(ErrorCode::TooLarge, "expanding '" + map.label() + "' needs about " +
                                  (cost == kSaturated ? std::string("unbounded") : std::to_string(cost)) +
                                  " coefficient products, budget is " + std::to_string(budget));
  return std::visit(
      [&](const auto& node) -> PolyMap {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, ComposeNode>) {
          const PolyMap outer = expand(node.outer, budget);
          const PolyMap inner = expand(node.inner, budget);
          std::vector<Polynomial> out;
          for (const auto& c : outer.components()) out.push_back(compose(c, inner.components()));
          return map.with_expansion(std::move(out));
        } else if constexpr (std::is_same_v<T, SuspendNode>) {
          const PolyMap f = expand(node.f, budget);
          const PolyMap g = expand(node.g, budget);
          return map.with_expansion(expand_suspension(node, f.components(), g.components()));
        } else {
          fail(ErrorCode::InvalidArgument, "map '" + map.label() + "' cannot be expanded exactly");
        }
      },
      map.construction());
}

}  // namespace quadrep
