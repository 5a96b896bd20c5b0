#include "quadrep/maps/catalog.hpp"

#include <charconv>
#include <map>
#include <mutex>
#include <optional>

#include "quadrep/error.hpp"

namespace quadrep {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    fail(ErrorCode::InvalidArgument, "bad integer in target '" + std::string(whole) + "'");
  return v;
}

struct ChainState {
  std::optional<MapPair> hopf;
  std::optional<PolyMap> phi;
  std::optional<MapPair> first;
  std::optional<PolyMap> Phi;
  std::optional<MapPair> second;
  std::optional<HopfChain> full;
  std::map<int, MapPair> circles;
  std::map<std::string, PolyMap> targets;
};

std::mutex g_mutex;
std::map<std::size_t, ChainState> g_states;

class Builder {
 public:
  Builder(ChainState& st, const BuildOptions& opt) : st_(st), opt_(opt) {}

  const MapPair& hopf() {
    if (!st_.hopf) st_.hopf = hopf_pair(opt_.certify);
    return *st_.hopf;
  }
  const MapPair& circle(int d) {
    auto it = st_.circles.find(d);
    if (it == st_.circles.end()) it = st_.circles.emplace(d, circle_pair(d, opt_.certify)).first;
    return it->second;
  }
  const PolyMap& phi() {
    if (!st_.phi) st_.phi = suspend(hopf().f, hopf().g, 1, opt_);
    return *st_.phi;
  }
  const MapPair& first() {
    if (!st_.first) st_.first = composed_pair(phi());
    return *st_.first;
  }
  const PolyMap& Phi() {
    if (!st_.Phi) st_.Phi = suspend(first().f, first().g, 1, opt_);
    return *st_.Phi;
  }
  const MapPair& second() {
    if (!st_.second) st_.second = composed_pair(Phi());
    return *st_.second;
  }

  PolyMap build(const CatalogTarget& t) {
    switch (t.kind) {
      case TargetKind::PiN:
        if (t.d == 0) return constant_map(static_cast<std::size_t>(t.n) + 1, static_cast<std::size_t>(t.n) + 1);
        if (t.n == 1) return circle(t.d).f;
        return suspend(circle(t.d).f, circle(t.d).g, static_cast<std::size_t>(t.n - 1), opt_);
      case TargetKind::PiNp1:
        return suspend(hopf().f, hopf().g, static_cast<std::size_t>(t.n - 2), opt_);
      case TargetKind::Pi3S2: {
        if (t.d == 0) return constant_map(4, 3);
        const PolyMap inner = build(CatalogTarget{TargetKind::PiN, 3, t.d});
        return compose_maps(hopf().f, inner, opt_);
      }
      case TargetKind::PiNp2:
        if (t.n == 2) return first().f;
        return suspend(first().f, first().g, static_cast<std::size_t>(t.n - 2), opt_);
      case TargetKind::PiNp3Torsion:
        if (t.n == 2) return second().f;
        return suspend(second().f, second().g, static_cast<std::size_t>(t.n - 2), opt_);
    }
    fail(ErrorCode::Internal, "unknown catalog target");
  }

 private:
  MapPair composed_pair(const PolyMap& inner) {
    PolyMap f = compose_maps(hopf().f, inner, opt_);
    PolyMap g = compose_maps(hopf().g, inner, opt_);
    PHCertificate orth = certify_orthogonal(f, g, opt_.certify);
    if (!orth.pass) fail(ErrorCode::Certification, "composed pair lost b-orthogonality: " + orth.witness);
    return {std::move(f), std::move(g), std::move(orth)};
  }

  ChainState& st_;
  const BuildOptions& opt_;
};

void check_range(const CatalogTarget& t) {
  constexpr int kMaxN = 64;
  auto require = [&](bool ok, const std::string& why) {
    if (!ok) fail(ErrorCode::InvalidArgument, "target " + t.str() + ": " + why);
  };
  switch (t.kind) {
    case TargetKind::PiN: require(t.n >= 1 && t.n <= kMaxN, "needs 1 <= n <= 64"); break;
    case TargetKind::PiNp1:
      require(t.n != 2, "n = 2 is served by pi3_s2");
      require(t.n >= 3 && t.n <= kMaxN, "needs 3 <= n <= 64 (pi_2(S^1) is trivial)");
      break;
    case TargetKind::PiNp2: require(t.n >= 2 && t.n <= kMaxN, "needs 2 <= n <= 64"); break;
    case TargetKind::Pi3S2: break;
    case TargetKind::PiNp3Torsion: require(t.n >= 2 && t.n <= kMaxN, "needs 2 <= n <= 64"); break;
  }
  if (t.kind == TargetKind::PiN || t.kind == TargetKind::Pi3S2)
    require(t.d >= -16 && t.d <= 16, "needs |d| <= 16");
}

}  // namespace

CatalogTarget CatalogTarget::parse(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    fail(ErrorCode::InvalidArgument, "target '" + std::string(text) + "' has no ':'");
  const auto name = text.substr(0, colon);
  const auto args = text.substr(colon + 1);
  CatalogTarget t;
  if (name == "pi_n") {
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) fail(ErrorCode::InvalidArgument, "pi_n needs 'n,d'");
    t.kind = TargetKind::PiN;
    t.n = parse_int(args.substr(0, comma), text);
    t.d = parse_int(args.substr(comma + 1), text);
  } else if (name == "pi_np1") {
    t.kind = TargetKind::PiNp1;
    t.n = parse_int(args, text);
  } else if (name == "pi_np2") {
    t.kind = TargetKind::PiNp2;
    t.n = parse_int(args, text);
  } else if (name == "pi3_s2") {
    t.kind = TargetKind::Pi3S2;
    t.n = 3;
    t.d = parse_int(args, text);
  } else if (name == "pi_np3" || name == "pi_np3_torsion") {
    t.kind = TargetKind::PiNp3Torsion;
    t.n = parse_int(args, text);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown target family '" + std::string(name) + "'");
  }
  check_range(t);
  return t;
}

std::string CatalogTarget::str() const {
  switch (kind) {
    case TargetKind::PiN: return "pi_n:" + std::to_string(n) + "," + std::to_string(d);
    case TargetKind::PiNp1: return "pi_np1:" + std::to_string(n);
    case TargetKind::PiNp2: return "pi_np2:" + std::to_string(n);
    case TargetKind::Pi3S2: return "pi3_s2:" + std::to_string(d);
    case TargetKind::PiNp3Torsion: return "pi_np3:" + std::to_string(n);
  }
  return "?";
}

PolyMap catalog(const CatalogTarget& target, const BuildOptions& options) {
  check_range(target);
  std::lock_guard lock(g_mutex);
  ChainState& st = g_states[options.expansion_budget];
  const std::string key = target.str();
  if (auto it = st.targets.find(key); it != st.targets.end()) return it->second;
  Builder builder(st, options);
  PolyMap map = builder.build(target);
  map = map.with_label(key + " := " + map.label());
  st.targets.emplace(key, map);
  return map;
}

const HopfChain& hopf_chain(const BuildOptions& options) {
  std::lock_guard lock(g_mutex);
  ChainState& st = g_states[options.expansion_budget];
  if (!st.full) {
    Builder b(st, options);
    st.full = HopfChain{b.hopf(), b.phi(), b.first(), b.Phi(), b.second()};
  }
  return *st.full;
}

}  // namespace quadrep
