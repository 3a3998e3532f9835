#pragma once
// The comparison layer: identifying coefficient homology with the homology
// of the cell pair, transporting it along the p-power maps, cutting the
// boundary/cycle filtration into long exact sequences, and assembling the
// inverse-Frobenius-style map from cycle classes to coefficient classes.

#include "carthom/kp.hpp"
#include "carthom/mixed.hpp"

namespace carthom {

// embeds the normalized coefficient complex into the cell pair total along
// the vertex slice; a quasi-isomorphism, inverted degreewise
struct KIdentification {
  MixedPair mp;
  PairTotal ptot;
  ChainMapData w;            // normalized levels -> pair total
  std::vector<Homology> hc;  // of the pair total, 0..d_max
  std::vector<SMat> from_hh, to_hh;
};
KIdentification k_identification(const KTower& kt, const HochschildData& h,
                                 int d_max);

// p-power maps on the cell towers: base cells to pushed cells, compatible
// with the boundary, landing in cycles of the raising map
struct PsiMaps {
  CyclicMapData psi0, psi1;
};
PsiMaps psi_k(const Algebra& a, const KTower& base, const KpComplex& kp);

// everything the main theorem touches, with a named pass/fail record;
// matrices carry their source and target dimensions
struct CartierPackage {
  uint32_t p = 0;
  int d_max = 0;  // dims, sequences, and the map itself run through here
  int f_max = 0;  // the boundary-operator factorization runs through here
  std::vector<uint32_t> hh, hc_kp, zhh, bhh, hc_q;
  std::vector<SMat> from_hh, to_hh;  // coefficient homology <-> pushed pair
  std::vector<SMat> xi;              // bhh[i] -> zhh[i]
  std::vector<SMat> zeta;            // zhh[i] -> hh[i]
  std::vector<SMat> beta;            // hh[i] -> bhh[i+1]
  std::vector<SMat> cartier;         // zhh[i] -> hh[i]
  bool lift_sign_flipped = false;  // orientation chosen for the raising lift
  std::vector<std::pair<std::string, bool>> checks;
  bool all_ok = false;
};
CartierPackage cartier_package(const Algebra& a, int d_max, int top);

// levelwise realization of the two window groups of the periodic complex
// inside the trace kernel; the even map needs nothing, the odd map is an
// isomorphism exactly by tightness, which is demanded up front
struct Coaction {
  int window = 0;               // degrees 2*window and 2*window + 1
  std::vector<Subspace> isub;   // trace kernel inside coefficient coinvariants
  std::vector<SMat> even, odd;  // level homology coords -> trace kernel coords
};
Coaction coaction(const KpComplex& kp, int window);

// the alternating periodic tower against the quotient pair in one window:
// a subtower bridge into the periodic total, a quotient bridge onto the
// two-term model, and the canonical truncation carrying the same groups
struct WindowComparison {
  int window = 0;
  std::vector<uint32_t> window_dims;  // at degrees 2*window, 2*window + 1
  bool matches_quotient = false;
  bool truncation_agrees = false;
};
WindowComparison window_comparison(const KpComplex& kp, const KpSub& s,
                                   int window);

// Builds the package twice, once for the algebra and once for a copy with
// the basis order permuted, and checks that the homology-level map of the
// package transforms by the induced basis change on both sides. Section
// choices differ between the two runs; the homology-level matrices must not.
bool cartier_basis_independence(const Algebra& a,
                                const std::vector<uint32_t>& perm, int d_max,
                                int top);

}  // namespace carthom
