#pragma once
// Two-periodic free resolution of the ground field over the cyclic group
// of prime order: odd differentials act by shift-minus-one, even ones by
// the full power sum. A comultiplication lifting the identity is solved
// degreewise (seeded by the square of the bottom generator, pinned by the
// two counit identities) and verified by exact matrix checks; contracting
// its degree-one factor gives the cap that realizes multiplication by the
// degree-one homology class on any module.

#include <optional>

#include "carthom/linalg.hpp"

namespace carthom {

struct WRes {
  Fp f;
  uint32_t p = 0;
  int top = -1;
  // degree i basis: group power a = 0..p-1 applied to the degree generator
  std::vector<SMat> d;   // d[i]: degree i -> i-1 (i >= 1); d[0] unused
  SMat sigma;            // group action, the same shift in every degree
};

WRes w_resolution(uint32_t p, int top);

struct DiagonalApprox {
  WRes w;
  // coordinates of the image of the degree-n generator inside
  // sum_{i+j=n} (degree i) (x) (degree j); block k = (i = k, j = n - k),
  // index within a block = a*p + b
  std::vector<SVec> delta_gen;
  // contraction against the degree-one factor: (n-1)-degree coordinates
  // by n-degree coordinates, extended equivariantly
  std::vector<SMat> cap;   // cap[n], n >= 1
};

// p odd; solves degree by degree through `top`, then machine-checks the
// chain-map and counit identities
DiagonalApprox diagonal_approximation(uint32_t p, int top);

// induced action of the degree-one class on group homology of (v, sigma):
// odd positive degrees to even positive degrees, canonical presentations
struct CapOnModule {
  SMat odd_to_even;
  uint32_t h_odd = 0, h_even = 0;
};
CapOnModule cap_on_module(Fp f, const SMat& sigma_v, const DiagonalApprox& da);

}  // namespace carthom
