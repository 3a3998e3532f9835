#include <doctest.h>

#include "carthom/complex.hpp"
#include "carthom/subdivision.hpp"

using namespace carthom;

TEST_SUITE("subdivision") {

TEST_CASE("push formula spot checks") {
  Algebra a = truncated_polynomial(2, 3);
  {
    // three blocks, degree 1: first five factors multiply, last survives
    SubdivisionPush s = subdivision_push(a, 3, 1);
    // x (x) 1 (x) 1 (x) 1 (x) 1 (x) x  ->  x (x) x
    uint32_t src = 1 + 32;
    CHECK(svec_eq(s.level[1].col[src], svec_unit(3)));
    // x in two slots of the head: x*x = 0
    uint32_t src2 = 1 + 2;
    CHECK(s.level[1].col[src2].empty());
  }
  {
    // two blocks, degree 0: plain product of the pair
    SubdivisionPush s = subdivision_push(a, 2, 0);
    CHECK(s.level[0].col[3].empty());                    // x*x
    CHECK(svec_eq(s.level[0].col[1], svec_unit(1)));     // x*1
  }
}

TEST_CASE("push commutes with face sums") {
  SubdivisionPush s3 = subdivision_push(truncated_polynomial(2, 3), 3, 2);
  verify_subdivision_chain_map(truncated_polynomial(2, 3), s3, 2);
  SubdivisionPush s2 = subdivision_push(truncated_polynomial(2, 2), 2, 2);
  verify_subdivision_chain_map(truncated_polynomial(2, 2), s2, 2);
}

TEST_CASE("push induces homology isomorphisms") {
  CHECK(subdivision_homology_iso(truncated_polynomial(2, 3), 3, 2));
  CHECK(subdivision_homology_iso(truncated_polynomial(2, 2), 2, 2));
  CHECK(subdivision_homology_iso(monoid_algebra(FiniteMonoid::cyclic_group(2), 3), 3, 1));
}

TEST_CASE("face complex dims follow the tower") {
  CycObj x = materialize(NerveGen(truncated_polynomial(2, 3), 3), 2);
  ChainComplex c = face_complex(x);
  CHECK(c.dims == std::vector<uint32_t>{8, 64, 512});
  CHECK(homology_dims(c, 1) == homology_dims(face_complex(materialize(NerveGen(truncated_polynomial(2, 3)), 2)), 1));
}

}  // TEST_SUITE
