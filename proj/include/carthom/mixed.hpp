#pragma once
// Normalized mixed complex of a multiplicity-1 tower: the two anticommuting
// differentials b (degree -1) and B (degree +1), Hochschild homology with
// canonical class bases, the shuffle product, and the induced degree-raising
// operator on homology.

#include "carthom/complex.hpp"
#include "carthom/cyclic.hpp"

namespace carthom {

struct MixedComplex {
  Fp f;
  int top = -1;
  std::vector<uint32_t> dims;    // normalized dims, 0..top
  std::vector<SMat> proj, sect;  // level <-> normalized level
  std::vector<SMat> b;           // b[n]: n -> n-1 (n >= 1; b[0] unused)
  std::vector<SMat> bb;          // bb[n]: n -> n+1 (0 <= n <= top-1)
};

// Quotients each level by the span of all degeneracy images, then descends
// b = alternating face sum and B = (extra degeneracy) . (signed tau power
// sum). Descent is verified by exact matrix identities at construction.
MixedComplex mixed_complex(const CycObj& x);

// b^2 = 0, B^2 = 0, bB + Bb = 0 on the materialized range.
void verify_mixed_identities(const MixedComplex& m);

// The b-direction chain complex (degrees 0..top).
ChainComplex b_complex(const MixedComplex& m);

// Everything needed to work with Hochschild classes of one algebra:
// the nerve tower through level d_max + 1, its mixed complex, and homology
// in degrees 0..d_max.
struct HochschildData {
  Algebra a;
  int d_max = -1;
  CycObj nerve;
  MixedComplex mx;
  ChainComplex c;
  std::vector<Homology> hh;  // 0..d_max
};

HochschildData hochschild_data(const Algebra& a, int d_max);
std::vector<uint32_t> hochschild_dims(const HochschildData& h);

// Matrix of B on homology: HH_n -> HH_{n+1}; requires n < d_max.
SMat induced_b_operator(const HochschildData& h, int n);

// Shuffle product on unnormalized nerve chains: degree i x degree j ->
// degree i + j, interleaving positions 1.. with the usual sign; position-0
// entries multiply in A.
SVec shuffle_unnorm(const Algebra& a, int i, const SVec& x, int j, const SVec& y);

// Product of homology classes (coordinates over hh[i] and hh[j] bases);
// result is coordinates over hh[i+j]. Requires i + j <= d_max and a
// commutative algebra.
SVec shuffle_classes(const HochschildData& h, int i, const SVec& cx, int j, const SVec& cy);

}  // namespace carthom
