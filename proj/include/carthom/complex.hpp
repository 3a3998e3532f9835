#pragma once
// Chain complexes of F_p-spaces: canonical homology bases, induced maps,
// connecting maps, exactness bookkeeping.

#include <optional>
#include <vector>

#include "carthom/linalg.hpp"

namespace carthom {

// X_top -> ... -> X_1 -> X_0, d[i]: X_i -> X_{i-1}; d[0] is unused.
struct ChainComplex {
  Fp f;
  std::vector<uint32_t> dims;
  std::vector<SMat> d;

  int top() const { return static_cast<int>(dims.size()) - 1; }
  void validate() const;  // shapes and d*d = 0
};

// Canonical homology data at one degree: cycle representatives chosen by the
// lowest-pivot rule after discarding boundaries.
class Homology {
 public:
  Homology() = default;
  // d_out: X_i -> X_{i-1} (empty allowed for i = 0), d_in: X_{i+1} -> X_i
  // (empty pointer means no incoming differential is available; the caller
  // is then asserting X_{i+1} = 0).
  Homology(Fp f, uint32_t ambient, const SMat* d_out, const SMat* d_in);

  uint32_t dim() const { return static_cast<uint32_t>(reps_.size()); }
  uint32_t ambient() const { return ambient_; }
  const std::vector<SVec>& reps() const { return reps_; }
  // Coordinates of a cycle's class over reps(); throws when z is not in the
  // cycle space.
  SVec express(const SVec& z) const;
  bool is_cycle(const SVec& z) const;

 private:
  Fp f_;
  uint32_t ambient_ = 0;
  std::vector<SVec> reps_;
  Ech cycles_;
  Ech classes_;  // tracked: boundaries tagged empty, reps tagged e_k
};

Homology homology_at(const ChainComplex& c, int i);
std::vector<uint32_t> homology_dims(const ChainComplex& c, int up_to);

// Degreewise matrices of a chain map X -> Y (degree 0..top).
struct ChainMapData {
  std::vector<SMat> level;
};
void verify_chain_map(const ChainComplex& x, const ChainComplex& y, const ChainMapData& m,
                      int up_to);

// Matrix of the induced map H_i(X) -> H_i(Y).
SMat induced_on_homology(const Homology& hx, const Homology& hy, const SMat& level_map);

// True when the induced maps are isomorphisms in degrees 0..up_to.
bool quasi_iso(const ChainComplex& x, const ChainComplex& y, const ChainMapData& m, int up_to);

// Short exact sequence of complexes 0 -> A -> B -> C -> 0 given by
// degreewise incl/proj. Checks degreewise exactness on construction.
struct SesOfComplexes {
  const ChainComplex *a, *b, *c;
  ChainMapData incl, proj;
  void validate(int up_to) const;
};

// Connecting map H_n(C) -> H_{n-1}(A) via the snake lift.
SMat connecting_map(const SesOfComplexes& s, int n, const Homology& hc_n,
                    const Homology& ha_nm1);

// Exactness of the homology long exact sequence at every node through
// degree d_max. Requires complexes with top >= d_max + 1 so homology at
// d_max is correct.
bool les_exact(const SesOfComplexes& s, int d_max);

// rank f + rank g = dim(middle) and g*f = 0: exactness at the middle node.
bool exact_at(const SMat& f, const SMat& g);

}  // namespace carthom
