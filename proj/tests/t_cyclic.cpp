#include <doctest.h>

#include "carthom/cyclic.hpp"

using namespace carthom;

TEST_SUITE("cyclic") {

TEST_CASE("digit packing roundtrip") {
  for (uint64_t idx : {0ull, 1ull, 7ull, 63ull, 100ull}) {
    auto d = unpack_digits(idx, 4, 4);
    CHECK(pack_digits(d, 4) == idx);
  }
  CHECK(unpack_digits(6, 2, 3) == std::vector<uint32_t>{0, 1, 1});
  CHECK_THROWS(unpack_digits(8, 2, 3));
}

TEST_CASE("nerve rotation convention") {
  // tau moves the last factor to the front: digit_0 of the image is the
  // old top digit
  Algebra a = truncated_polynomial(2, 3);
  NerveGen g(a);
  // level 2, idx = digits (1,0,0) = 1 -> tau -> (0,1,0) = 2
  SVec t = g.tau(2, 1);
  REQUIRE(t.size() == 1);
  CHECK(t[0].idx == 2);
  // idx = digits (0,0,1) = 4 -> (1,0,0) = 1
  CHECK(g.tau(2, 4)[0].idx == 1);
}

TEST_CASE("nerve faces multiply adjacent factors") {
  Algebra a = truncated_polynomial(2, 3);  // basis 1, x with x^2 = 0
  NerveGen g(a);
  // level 1, element x (x) x: idx = 1 + 1*2 = 3
  // d_0 multiplies factors 0,1: x*x = 0
  CHECK(g.face(1, 0, 3).empty());
  // level 1, element 1 (x) x: idx = 0 + 1*2 = 2: d_0 = x, d_1 = x*1 = x
  CHECK(svec_eq(g.face(1, 0, 2), svec_unit(1)));
  CHECK(svec_eq(g.face(1, 1, 2), svec_unit(1)));
  // degeneracy s_0 on x at level 0 inserts the unit after position 0
  CHECK(svec_eq(g.degen(0, 0, 1), svec_unit(1)));  // x (x) 1 = digits (1,0) = 1
}

TEST_CASE("cyclic relations for plain nerves") {
  verify_cyclic_relations(materialize(NerveGen(truncated_polynomial(2, 3)), 4));
  verify_cyclic_relations(materialize(NerveGen(monoid_algebra(FiniteMonoid::cyclic_group(2), 3)), 3));
  verify_cyclic_relations(materialize(NerveGen(matrix_algebra(2, 3)), 2));
}

TEST_CASE("cyclic relations for edgewise-restricted nerves") {
  // multiplicity p towers with tau of order p(n+1)
  verify_cyclic_relations(materialize(NerveGen(truncated_polynomial(2, 3), 3), 2));
  verify_cyclic_relations(materialize(NerveGen(truncated_polynomial(2, 2), 2), 2));
  verify_cyclic_relations(materialize(NerveGen(matrix_algebra(2, 3), 3), 1));
}

TEST_CASE("cyclic relations for circle cells") {
  Fp f{3};
  verify_cyclic_relations(materialize(CellGen(f, 1, 0), 5));
  verify_cyclic_relations(materialize(CellGen(f, 1, 1), 5));
  verify_cyclic_relations(materialize(CellGen(f, 3, 0), 3));
  verify_cyclic_relations(materialize(CellGen(f, 3, 1), 3));
  verify_cyclic_relations(materialize(CellGen(f, 2, 1), 4));
}

TEST_CASE("cyclic relations for constants, inflations, tensors") {
  Fp f{3};
  verify_cyclic_relations(materialize(PointGen(f, 3), 3));
  NerveGen base(truncated_polynomial(2, 3));
  verify_cyclic_relations(materialize(InflationGen(base, 3), 3));
  NerveGen fine(truncated_polynomial(2, 3), 3);
  CellGen edges(f, 3, 1);
  verify_cyclic_relations(materialize(DiagTensorGen(edges, fine), 2));
  CellGen verts(f, 3, 0);
  verify_cyclic_relations(materialize(DiagTensorGen(verts, fine), 2));
}

TEST_CASE("rotation invariants of the level-two nerve") {
  // dual numbers: 8 basis tensors, 4 rotation orbits
  Algebra a = truncated_polynomial(2, 3);
  CycObj x = materialize(NerveGen(a), 2);
  Subspace inv = invariants_of(x.tau[2]);
  CHECK(inv.dim() == 4);
  QuotientPresentation co = coinvariants_of(x.tau[2]);
  CHECK(co.projection.rows == 4);
}

TEST_CASE("power sum of a rotation is the orbit sum") {
  Fp f{3};
  SMat rot = SMat::from_triples(3, 3, f, {{1, 0, 1}, {2, 1, 1}, {0, 2, 1}});
  SMat n = power_sum(rot, 3);
  for (uint32_t i = 0; i < 3; ++i)
    for (uint32_t j = 0; j < 3; ++j) CHECK(n.at(i, j) == 1);
}

TEST_CASE("cyclic map verification") {
  Algebra a = truncated_polynomial(2, 3);
  CycObj x = materialize(NerveGen(a), 2);
  CyclicMapData id;
  for (int n = 0; n <= 2; ++n) id.level.push_back(SMat::identity(x.dims[n], x.f));
  verify_cyclic_map(x, x, id);
  CyclicMapData broken = id;
  broken.level[1] = SMat::from_triples(4, 4, x.f, {{0, 0, 1}, {1, 1, 1}, {3, 2, 1}, {2, 3, 1}});
  CHECK_THROWS_AS(verify_cyclic_map(x, x, broken), invariant_violation);
}

TEST_CASE("sigma acts trivially on inflated towers") {
  NerveGen base(truncated_polynomial(2, 3));
  CycObj x = materialize(InflationGen(base, 3), 2);
  for (int n = 0; n <= 2; ++n) CHECK(x.sigma(n) == SMat::identity(x.dims[n], x.f));
}

}  // TEST_SUITE
