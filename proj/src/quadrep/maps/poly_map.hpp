#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "quadrep/certificate.hpp"
#include "quadrep/exact/polynomial.hpp"
#include "quadrep/lemma1.hpp"

namespace quadrep {

struct LeafNode;
struct ComposeNode;
struct SuspendNode;
struct BlendNode;

// How a map was built. Composite maps keep their construction even after
// expansion so that lineage-dependent checks (hemispheres) can inspect it,
// and maps whose expansion would exceed the budget are evaluated through it.
using Construction = std::variant<LeafNode, ComposeNode, SuspendNode, BlendNode>;

// A polynomial map C^m -> C^r. Components are either stored expanded or
// implied by the construction; both evaluate identically.
class PolyMap {
 public:
  // Explicit components, all in the same number of variables.
  static PolyMap from_components(std::vector<Polynomial> components, std::string label);
  static PolyMap from_construction(std::size_t domain_dim, std::size_t codomain_dim, Construction construction,
                                   std::string label);

  std::size_t domain_dim() const;
  std::size_t codomain_dim() const;
  const std::string& label() const;
  std::optional<unsigned> order() const;
  const std::optional<PHCertificate>& certificate() const;
  const Construction& construction() const;

  bool is_expanded() const;
  // Throws InvalidArgument when the map is not expanded.
  const std::vector<Polynomial>& components() const;

  // Per-variable degree bound over all components, and a total-degree bound.
  // Exact for expanded maps, an upper bound otherwise.
  const std::vector<unsigned>& degree_bounds() const;
  unsigned total_degree_bound() const;

  // A copy carrying the certificate; the order is set only for a passing one.
  PolyMap with_certificate(PHCertificate cert) const;
  PolyMap with_label(std::string label) const;
  // A copy whose components are `expanded` (same construction and certificate).
  PolyMap with_expansion(std::vector<Polynomial> expanded) const;

  std::vector<std::complex<double>> evaluate(std::span<const std::complex<double>> point) const;
  std::vector<GaussianRational> evaluate_exact(std::span<const GaussianRational> point) const;

 private:
  struct Impl;
  static void compute_bounds(Impl& impl);
  explicit PolyMap(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

struct LeafNode {};

struct ComposeNode {
  PolyMap outer;
  PolyMap inner;
};

// F(z, u) = (beta1(s, t) f(z) + beta2(s, t) g(z), rho(s, t) u) with
// s = q(z) + q(u) and t = q(z).
struct SuspendNode {
  PolyMap f;
  PolyMap g;
  std::size_t ell = 1;
  Lemma1Triple triple;
};

// cos_w f + sin_w g with floating weights; numeric evaluation only.
struct BlendNode {
  PolyMap f;
  PolyMap g;
  double cos_weight = 1.0;
  double sin_weight = 0.0;
};

// Estimated number of coefficient products needed to expand the map; zero
// for expanded maps, saturating at SIZE_MAX.
std::size_t estimate_expansion_cost(const PolyMap& map);

// Expanded copy of the map. Throws TooLarge when the estimated cost exceeds the budget.
PolyMap expand(const PolyMap& map, std::size_t budget);

}  // namespace quadrep
