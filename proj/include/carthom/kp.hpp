#pragma once
// Pushforward models for towers carrying the central rotation: coinvariants
// and invariants level by level, the averaged trace between them, the pushed
// two-term cell complex with its degree-raising map, the p-power maps on
// coefficient levels, and the boundary/cycle subtowers the raising map cuts
// out.

#include "carthom/algebra.hpp"
#include "carthom/cchc.hpp"
#include "carthom/ktwist.hpp"

namespace carthom {

// rotation-coinvariants of a multiplicity-p tower, as a multiplicity-one
// tower presented by the canonical quotient projections
struct PushedTower {
  CycObj fine;  // multiplicity p
  CycObj x;     // the quotient tower, multiplicity 1
  std::vector<QuotientPresentation> pres;
  std::vector<SMat> sigma;  // the central rotation on each fine level
};
PushedTower push_tower(CycObj fine);

// rotation-invariants with the restricted structure maps
struct InvariantTower {
  CycObj x;
  std::vector<Subspace> inv;  // inside the fine levels
};
InvariantTower invariant_tower(const PushedTower& pt);

// averaged trace from coinvariants to invariants plus the include-project
// map back; both round trips vanish in characteristic p
struct TraceTower {
  std::vector<SMat> tr;  // coinvariant coords -> invariant coords
  std::vector<SMat> e;   // invariant coords -> coinvariant coords
};
TraceTower trace_tower(const PushedTower& pt, const InvariantTower& it);

// include-project induces coker(tr) -> ker(tr); level n is tight when that
// map inverts
bool tight_level(const TraceTower& t, int n);

// the pushed two-term cell complex of a multiplicity-p coefficient tower,
// with every identification around it verified at build time
struct KpComplex {
  uint32_t p = 0;
  int top = 0;
  PushedTower e, k0, k1;
  InvariantTower einv, k0inv, k1inv;
  TraceTower etr, k0tr, k1tr;
  CyclicMapData del;   // k1.x -> k0.x, pushed edge boundary
  CyclicMapData bt;    // k0.x -> k1.x, pushed span-collapse composite
  CyclicMapData kap0;  // k0.x -> e.x, pushed collapse
  std::vector<SMat> kap1inv;  // e-invariants -> k1-invariants, restricted span
  std::vector<SMat> nu;       // e-invariant coords -> k1.x, trace-inverted span
};
KpComplex build_kp(const CycGen& eg, int top);
KpComplex build_kp(const Algebra& a, uint32_t p, int top);

// boundary and cycle subtowers of the degree-raising map, the quotients,
// and the induced maps between all of them
struct KpSub {
  std::vector<Subspace> bsub;  // image of bt inside the edge levels
  std::vector<Subspace> zsub;  // kernel of bt inside the vertex levels
  CycObj bk1, zk0;             // the subtowers
  CycObj q1, w0;               // k1.x / bk1 and k0.x / zk0
  std::vector<QuotientPresentation> qpres, wpres;
  CyclicMapData bk_in_k1, zk_in_k0;  // inclusions
  CyclicMapData del_z;   // k1.x -> zk0, corestricted boundary
  CyclicMapData del_q;   // q1 -> zk0, boundary descended to the quotient
  CyclicMapData bt_bk;   // k0.x -> bk1, corestricted raising map
  CyclicMapData bt_w;    // w0 -> bk1, induced raising map, levelwise iso
  CyclicMapData to_q1, to_w0;  // projections
};
KpSub kp_subcomplexes(const KpComplex& kp);

// p-power maps on the coefficient levels of an algebra's tower
struct PowerMaps {
  CycObj base;                 // the multiplicity-one nerve
  CyclicMapData psi;           // base -> e.x, basis vector to its p-th power
  std::vector<SMat> psi_hat;   // e-invariant coords -> base, diagonal reader
};
PowerMaps power_maps(const Algebra& a, const KpComplex& kp);

// class of the p-fold tensor power of an arbitrary level vector, for
// additivity checks off the basis
SVec tensor_power_class(const KpComplex& kp, const Algebra& a, int n, const SVec& v);

// explicit levelwise isomorphisms between the cell towers of a
// multiplicity-one coefficient tower and both pushforward models of its
// multiplicity-p pullback
struct CollapseIso {
  CyclicMapData from_pushed0, from_pushed1;  // pushed cells -> base cells
  std::vector<SMat> from_inv0, from_inv1;    // invariant coords -> base cells
};
CollapseIso collapse_isos(const KTower& base, const KpComplex& pulled);

}  // namespace carthom
