#pragma once

#include <string>
#include <string_view>

#include "quadrep/maps/constructions.hpp"

namespace quadrep {

enum class TargetKind {
  PiN,           // pi_n(S^n), degree d
  PiNp1,         // nontrivial class of pi_{n+1}(S^n), n >= 3
  PiNp2,         // nontrivial class of pi_{n+2}(S^n), n >= 2
  Pi3S2,         // d times the Hopf class in pi_3(S^2)
  PiNp3Torsion,  // order-2 class of pi_{n+3}(S^n), n >= 2
};

struct CatalogTarget {
  TargetKind kind = TargetKind::PiN;
  int n = 1;
  int d = 1;

  // "pi_n:n,d", "pi_np1:n", "pi_np2:n", "pi3_s2:d", "pi_np3:n" (also "pi_np3_torsion:n").
  static CatalogTarget parse(std::string_view text);
  std::string str() const;
};

// The representative for a target, certified and labelled "<target> := <lineage>".
// Results are memoized per (target, expansion budget).
PolyMap catalog(const CatalogTarget& target, const BuildOptions& options = {});

// The chain maps shared by several targets.
struct HopfChain {
  MapPair hopf;
  PolyMap phi;     // suspend(hopf, 1): C^5 -> C^4, order 3
  MapPair first;   // f1 = f o phi, g1 = g o phi: order 6
  PolyMap Phi;     // suspend(f1, g1, 1): C^6 -> C^4, order 11
  MapPair second;  // f2 = f o Phi, g2 = g o Phi: order 22
};
const HopfChain& hopf_chain(const BuildOptions& options = {});

}  // namespace quadrep
