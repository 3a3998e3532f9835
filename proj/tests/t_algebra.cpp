#include <doctest.h>

#include "carthom/algebra.hpp"

using namespace carthom;

TEST_SUITE("algebra") {

TEST_CASE("builtin algebras satisfy the axioms") {
  CHECK(verify_axioms(field_algebra(3)));
  CHECK(verify_axioms(truncated_polynomial(2, 3)));
  CHECK(verify_axioms(truncated_polynomial(4, 5)));
  CHECK(verify_axioms(matrix_algebra(2, 3)));
  CHECK(verify_axioms(monoid_algebra(FiniteMonoid::cyclic_group(2), 3)));
  CHECK(verify_axioms(monoid_algebra(FiniteMonoid::cyclic_group(4), 3)));
  CHECK(verify_axioms(tensor_product(truncated_polynomial(2, 3), matrix_algebra(2, 3))));
}

TEST_CASE("monoid validation catches bad tables") {
  FiniteMonoid g = FiniteMonoid::cyclic_group(3);
  g.table[4] = (g.table[4] + 1) % 3;  // break associativity/identity
  CHECK_THROWS_AS(g.validate(), invariant_violation);
}

TEST_CASE("pointed monoid algebra contracts the absorbing element") {
  // {1, x, x^2, 0} with x^3 = 0 gives the truncated polynomial algebra
  Algebra a = monoid_algebra(FiniteMonoid::truncated_pointed(3), 3);
  Algebra b = truncated_polynomial(3, 3);
  CHECK(a.dim == b.dim);
  CHECK(svec_eq(a.unit, b.unit));
  for (uint32_t i = 0; i < a.dim; ++i)
    for (uint32_t j = 0; j < a.dim; ++j)
      CHECK(svec_eq(a.mul_basis(i, j), b.mul_basis(i, j)));
  CHECK(a.is_monomial());
}

TEST_CASE("matrix algebra multiplication") {
  Algebra m = matrix_algebra(2, 3);
  CHECK(m.dim == 4);
  // E01 * E10 = E00, E10 * E01 = E11, E01 * E01 = 0
  CHECK(svec_eq(m.mul_basis(1, 2), svec_unit(0)));
  CHECK(svec_eq(m.mul_basis(2, 1), svec_unit(3)));
  CHECK(m.mul_basis(1, 1).empty());
  CHECK(!m.is_commutative());
  CHECK(m.is_monomial());
}

TEST_CASE("degree zero trace space dimensions") {
  // commutative algebras: everything survives
  CHECK(hh0(truncated_polynomial(2, 3)) == 2);
  CHECK(hh0(monoid_algebra(FiniteMonoid::cyclic_group(2), 3)) == 2);
  CHECK(hh0(field_algebra(5)) == 1);
  // matrices: only the trace survives
  CHECK(hh0(matrix_algebra(2, 3)) == 1);
  CHECK(hh0(matrix_algebra(2, 5)) == 1);
}

TEST_CASE("tensor product of group algebras") {
  Algebra z2 = monoid_algebra(FiniteMonoid::cyclic_group(2), 3);
  Algebra t = tensor_product(z2, z2);
  CHECK(t.dim == 4);
  CHECK(verify_axioms(t));
  CHECK(t.is_commutative());
  CHECK(hh0(t) == 4);
}

TEST_CASE("basis permutation gives an isomorphic algebra") {
  Algebra a = truncated_polynomial(3, 3);
  std::vector<uint32_t> perm = {2, 0, 1};  // new e_i = old e_{perm[i]}
  Algebra b = permute_basis(a, perm);
  CHECK(verify_axioms(b));
  // new index of old k is inv[k]; x = old 1 = new 2, x^2 = old 2 = new 0
  // so new e2 * new e2 = old x * old x = old x^2 = new e0
  CHECK(svec_eq(b.mul_basis(2, 2), svec_unit(0)));
  CHECK(svec_eq(b.unit, svec_unit(1)));  // old 1 sits at new index 1
  CHECK(hh0(b) == hh0(a));
  // identity permutation is a no-op
  Algebra c = permute_basis(a, {0, 1, 2});
  CHECK(c.table == a.table);
  CHECK_THROWS_AS(permute_basis(a, {0, 0, 1}), invariant_violation);
}

TEST_CASE("content hash distinguishes algebras") {
  CHECK(truncated_polynomial(2, 3).content_hash() !=
        truncated_polynomial(3, 3).content_hash());
  CHECK(truncated_polynomial(2, 3).content_hash() !=
        truncated_polynomial(2, 5).content_hash());
  CHECK(truncated_polynomial(2, 3).content_hash() ==
        truncated_polynomial(2, 3).content_hash());
}

}  // TEST_SUITE
