#pragma once

#include "carthom/mixed.hpp"

namespace carthom {

// Total complex of the two-differential bicomplex of a normalized tower.
// Degree m holds one block per column k = 0..floor(m/2); column k lives at
// level m - 2k and blocks are laid out in increasing k.
struct MixedTotal {
    int top_degree = 0;
    ChainComplex tot;
    std::vector<std::vector<uint64_t>> offset;   // offset[m][k]
    std::vector<std::vector<uint32_t>> block;    // block[m][k] = dim of level m - 2k
};

// requires m.top >= top_degree
MixedTotal mixed_total(const MixedComplex& m, int top_degree);

// homology of the total complex through degree d_max (tower must reach
// level d_max + 1)
std::vector<uint32_t> cyclic_dims(const MixedComplex& m, int d_max);
std::vector<uint32_t> cyclic_dims(const CycObj& x, int d_max);

// the short exact sequence  column-zero -> total -> total shifted by two
// induces the usual long exact sequence tying level homology to the total;
// returns true when the induced sequence is exact through degree d_max
bool sbi_exact(const MixedComplex& m, int d_max);

// ---- two-term complexes of towers ----

// c1 --del--> c0, del a levelwise map commuting with all structure maps
struct CyclicPair {
    CycObj c0, c1;
    CyclicMapData del;
};

struct MixedPair {
    MixedComplex m0, m1;
    std::vector<SMat> del;   // induced on normalized levels
};

MixedPair mixed_pair(const CyclicPair& k);

// cone-style total: degree m = (total of c0 at m) + (total of c1 at m - 1)
struct PairTotal {
    ChainComplex tot;
    MixedTotal t0, t1;
    std::vector<uint64_t> off0, off1;   // group offsets per degree
};

PairTotal pair_total(const MixedPair& k, int top_degree);
std::vector<uint32_t> cyclic_dims_pair(const CyclicPair& k, int d_max);

// ---- longer complexes of towers ----

// m[0] <-d[1]- m[1] <-d[2]- ..., every d[j] levelwise, commuting with all
// structure maps, consecutive composites zero; d[0] is ignored
struct ComplexOfCyclic {
    std::vector<CycObj> m;
    std::vector<CyclicMapData> d;
};
void validate_tower_complex(const ComplexOfCyclic& tc);

// iterated cone: degree deg collects the cyclic total of layer j at inner
// degree deg - j; layer j keeps its total differential times (-1)^j and
// receives the lifted connecting map from layer j + 1, extending the
// two-term convention of pair_total
struct TowerTotal {
    ChainComplex tot;
    std::vector<MixedComplex> mx;            // normalized layers
    std::vector<MixedTotal> part;            // part[j] built through top - j
    std::vector<std::vector<SMat>> del;      // descended connecting maps
    std::vector<std::vector<uint64_t>> off;  // off[deg][j]: offset of layer j
};
TowerTotal tower_total(const ComplexOfCyclic& tc, int top_degree);

// the leading layer's total is a subcomplex of the tower total
ChainMapData tower_block_inclusion(const TowerTotal& tt);

// lifts levelwise layer maps f[j] between the layers of two tower totals
// (same layer count, same top degree) to a chain map of the totals;
// verified before returning
ChainMapData lift_tower_map(const TowerTotal& x, const TowerTotal& y,
                            const std::vector<CyclicMapData>& f);

// total plus its homology through d_max; the total is built one degree
// higher so the top group is honest
struct TowerHomology {
    TowerTotal tt;
    std::vector<Homology> hc;
};
TowerHomology tower_homology(const ComplexOfCyclic& tc, int d_max);

// ---- canonical truncations (degree indexing preserved) ----

// kills homology strictly below a: degree a shrinks to the cycle subspace
struct TruncationFrom {
    ChainComplex c;
    ChainMapData incl;   // into the original
};
TruncationFrom truncate_from(const ChainComplex& x, int a);

// kills homology strictly above b: degree b + 1 becomes chains mod cycles
struct TruncationTo {
    ChainComplex c;
    ChainMapData proj;   // from the original
};
TruncationTo truncate_to(const ChainComplex& x, int b);

// both cuts at once; homology agrees with x exactly on [a, b]
ChainComplex window_truncation(const ChainComplex& x, int a, int b);

// ---- rotation quotient ----

// quotient of the unnormalized face complex by the image of 1 - lambda,
// lambda the signed rotation; computes the total complex exactly when each
// level is free over the rotation action
struct LambdaQuotient {
    ChainComplex c;
    std::vector<QuotientPresentation> pres;   // per level
};
LambdaQuotient lambda_quotient(const CycObj& x);

}   // namespace carthom
