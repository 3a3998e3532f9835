#pragma once
// Comparison between the p-fold fine tower of an algebra and its plain
// tower: the face complex of either, and the chain map that multiplies the
// leading block of tensor factors down to a plain chain. Induces homology
// isomorphisms degreewise.

#include "carthom/complex.hpp"
#include "carthom/cyclic.hpp"

namespace carthom {

// alternating face sum complex of any tower (multiplicity arbitrary)
ChainComplex face_complex(const CycObj& x);

// level n matrix A^{(x)p(n+1)} -> A^{(x)(n+1)}: multiply the first
// (n+1)(p-1)+1 factors, keep the trailing n
struct SubdivisionPush {
  uint32_t p = 0;
  std::vector<SMat> level;   // 0..top
};

SubdivisionPush subdivision_push(const Algebra& a, uint32_t p, int top);

// b . push = push . b~ degreewise, b~ the fine-tower face sum
void verify_subdivision_chain_map(const Algebra& a, const SubdivisionPush& s, int up_to);

// ranks of the induced maps on homology in degrees 0..d_max; isomorphism
// holds iff each equals the common homology dimension
bool subdivision_homology_iso(const Algebra& a, uint32_t p, int d_max);

}  // namespace carthom
