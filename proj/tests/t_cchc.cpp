#include <doctest.h>

#include "carthom/cchc.hpp"
#include "carthom/ktwist.hpp"

using namespace carthom;

namespace {

MixedComplex nerve_mixed(const Algebra& a, int top) {
  return mixed_complex(materialize(NerveGen(a), top));
}

}  // namespace

TEST_SUITE("cchc") {

TEST_CASE("total homology of the ground field") {
  MixedComplex m = nerve_mixed(field_algebra(3), 5);
  CHECK(cyclic_dims(m, 4) == std::vector<uint32_t>{1, 0, 1, 0, 1});
}

TEST_CASE("total homology of dual numbers over F_3") {
  // hand value: degree 3 sees the vanishing of the raising operator at
  // level 2, which a characteristic-zero computation would not
  MixedComplex m = nerve_mixed(truncated_polynomial(2, 3), 5);
  CHECK(cyclic_dims(m, 4) == std::vector<uint32_t>{2, 0, 2, 1, 3});
}

TEST_CASE("degree zero always agrees with level homology") {
  for (const Algebra& a :
       {truncated_polynomial(3, 3), monoid_algebra(FiniteMonoid::cyclic_group(2), 3)}) {
    MixedComplex m = nerve_mixed(a, 2);
    HochschildData h = hochschild_data(a, 1);
    CHECK(cyclic_dims(m, 1)[0] == hochschild_dims(h)[0]);
  }
}

TEST_CASE("column sequence induces an exact triangle") {
  CHECK(sbi_exact(nerve_mixed(truncated_polynomial(2, 3), 5), 3));
  CHECK(sbi_exact(nerve_mixed(monoid_algebra(FiniteMonoid::cyclic_group(2), 3), 4), 2));
  CHECK(sbi_exact(nerve_mixed(field_algebra(2), 5), 3));
}

TEST_CASE("cone of the identity pair is acyclic") {
  CycObj x = materialize(NerveGen(truncated_polynomial(2, 3)), 4);
  CyclicPair pr{x, x, {}};
  for (int n = 0; n <= x.top; ++n) pr.del.level.push_back(SMat::identity(x.dims[n], x.f));
  CHECK(cyclic_dims_pair(pr, 3) == std::vector<uint32_t>{0, 0, 0, 0});
}

TEST_CASE("zero pair splits as a direct sum") {
  CycObj x = materialize(NerveGen(field_algebra(3)), 4);
  CyclicPair pr{x, x, {}};
  for (int n = 0; n <= x.top; ++n) pr.del.level.push_back(SMat::zero(x.dims[n], x.dims[n], x.f));
  // degrees 0..2 of HC plus HC shifted by one: (1,0,1) and (0,1,0)
  CHECK(cyclic_dims_pair(pr, 2) == std::vector<uint32_t>{1, 1, 1});
}

TEST_CASE("circle towers are levelwise exact") {
  KTower k = k_tower(NerveGen(truncated_polynomial(2, 3)), 3);
  verify_k_exactness(k);
  KTower kp = k_tower(NerveGen(truncated_polynomial(2, 3), 3), 1);
  verify_k_exactness(kp);
}

TEST_CASE("total homology of a circle tower is level homology") {
  {
    KTower k = k_tower(NerveGen(field_algebra(3)), 4);
    CyclicPair pr{k.k0, k.k1, k.del};
    CHECK(cyclic_dims_pair(pr, 3) == std::vector<uint32_t>{1, 0, 0, 0});
  }
  {
    KTower k = k_tower(NerveGen(truncated_polynomial(2, 3)), 4);
    CyclicPair pr{k.k0, k.k1, k.del};
    HochschildData h = hochschild_data(truncated_polynomial(2, 3), 3);
    CHECK(cyclic_dims_pair(pr, 3) == hochschild_dims(h));
  }
}

TEST_CASE("canonical truncations cut homology to a window") {
  MixedComplex m = nerve_mixed(truncated_polynomial(2, 3), 5);
  ChainComplex c = b_complex(m);
  // level homology of dual numbers: 2,1,1,1,...
  CHECK(homology_dims(c, 3) == std::vector<uint32_t>{2, 1, 1, 1});
  TruncationFrom lo = truncate_from(c, 1);
  CHECK(homology_dims(lo.c, 3) == std::vector<uint32_t>{0, 1, 1, 1});
  TruncationTo hi = truncate_to(c, 2);
  CHECK(homology_dims(hi.c, 3) == std::vector<uint32_t>{2, 1, 1, 0});
  ChainComplex w = window_truncation(c, 1, 2);
  CHECK(homology_dims(w, 3) == std::vector<uint32_t>{0, 1, 1, 0});
  ChainComplex all = window_truncation(c, 0, 5);
  CHECK(homology_dims(all, 3) == homology_dims(c, 3));
}

TEST_CASE("truncation comparison maps match homology in range") {
  MixedComplex m = nerve_mixed(truncated_polynomial(2, 3), 4);
  ChainComplex c = b_complex(m);
  TruncationFrom lo = truncate_from(c, 1);
  Homology h2a = homology_at(lo.c, 2);
  Homology h2b = homology_at(c, 2);
  REQUIRE(h2b.dim() == 1);
  SMat ind = induced_on_homology(h2a, h2b, lo.incl.level[2]);
  CHECK(rank(ind) == h2b.dim());
  CHECK(h2a.dim() == h2b.dim());
}

TEST_CASE("tower total of two layers matches the pair total") {
  KTower k = k_tower(NerveGen(truncated_polynomial(2, 3)), 4);
  CyclicPair pr{k.k0, k.k1, k.del};
  PairTotal pt = pair_total(mixed_pair(pr), 4);
  ComplexOfCyclic tc{{k.k0, k.k1}, {{}, k.del}};
  TowerTotal tt = tower_total(tc, 4);
  CHECK(tt.tot.dims == pt.tot.dims);
  for (int deg = 1; deg <= 4; ++deg) CHECK(tt.tot.d[deg] == pt.tot.d[deg]);
}

TEST_CASE("split layers add their homology with shifts") {
  CycObj x = materialize(NerveGen(field_algebra(3)), 4);
  CyclicMapData z;
  for (int n = 0; n <= x.top; ++n) z.level.push_back(SMat::zero(x.dims[n], x.dims[n], x.f));
  ComplexOfCyclic tc{{x, x, x}, {{}, z, z}};
  TowerTotal tt = tower_total(tc, 3);
  // HC of the point is (1, 0, 1, ...); three shifted copies stack up
  CHECK(homology_dims(tt.tot, 2) == std::vector<uint32_t>{1, 1, 2});
}

TEST_CASE("an identity layer cancels in the tower total") {
  CycObj x = materialize(NerveGen(field_algebra(3)), 4);
  CyclicMapData one, z;
  for (int n = 0; n <= x.top; ++n) {
    one.level.push_back(SMat::identity(x.dims[n], x.f));
    z.level.push_back(SMat::zero(x.dims[n], x.dims[n], x.f));
  }
  ComplexOfCyclic tc{{x, x, x}, {{}, one, z}};
  TowerTotal tt = tower_total(tc, 3);
  CHECK(homology_dims(tt.tot, 2) == std::vector<uint32_t>{0, 0, 1});
}

TEST_CASE("edge layer of a circle tower is cyclically acyclic") {
  for (const Algebra& a : {field_algebra(3), truncated_polynomial(2, 3)}) {
    KTower k = k_tower(NerveGen(a), 4);
    CHECK(cyclic_dims(mixed_complex(k.k1), 3) == std::vector<uint32_t>{0, 0, 0, 0});
    ComplexOfCyclic tc{{k.k0, k.k1}, {{}, k.del}};
    TowerTotal tt = tower_total(tc, 4);
    ChainMapData incl = tower_block_inclusion(tt);
    CHECK(quasi_iso(tt.part[0].tot, tt.tot, incl, 3));
  }
}

TEST_CASE("lifted layer maps respect the totals") {
  CycObj x = materialize(NerveGen(truncated_polynomial(2, 3)), 3);
  CyclicMapData one;
  for (int n = 0; n <= x.top; ++n) one.level.push_back(SMat::identity(x.dims[n], x.f));
  ComplexOfCyclic tc{{x, x}, {{}, one}};
  TowerTotal tt = tower_total(tc, 3);
  ChainMapData self = lift_tower_map(tt, tt, {one, one});
  for (int deg = 0; deg <= 3; ++deg)
    CHECK(self.level[deg] == SMat::identity(tt.tot.dims[deg], x.f));
}

TEST_CASE("rotation quotient of the ground field") {
  CycObj x = materialize(NerveGen(field_algebra(3)), 5);
  LambdaQuotient q = lambda_quotient(x);
  for (int n = 0; n <= 5; ++n) CHECK(q.c.dims[n] == (n % 2 == 0 ? 1u : 0u));
  CHECK(homology_dims(q.c, 4) == std::vector<uint32_t>{1, 0, 1, 0, 1});
}

TEST_CASE("rotation quotient descends in characteristic two") {
  CycObj x = materialize(NerveGen(truncated_polynomial(2, 2)), 4);
  LambdaQuotient q = lambda_quotient(x);
  q.c.validate();
  CHECK(q.c.top() == 4);
}

}  // TEST_SUITE
