#pragma once
// Finite-dimensional unital associative F_p-algebras and finite monoids.

#include <string>
#include <vector>

#include "carthom/linalg.hpp"

namespace carthom {

struct FiniteMonoid {
  uint32_t size = 0;
  std::vector<uint32_t> table;  // row-major: table[a*size + b] = a*b
  uint32_t identity_index = 0;
  std::optional<uint32_t> zero_index;  // absorbing element, if any
  std::vector<std::string> labels;

  uint32_t mul(uint32_t a, uint32_t b) const { return table[a * size + b]; }
  void validate() const;  // associativity, identity, absorbing zero
  bool is_commutative() const;

  static FiniteMonoid cyclic_group(uint32_t r);
  // {1, x, ..., x^{m-1}, 0} with x^m = 0: pointed monoid of the truncated
  // polynomial algebra.
  static FiniteMonoid truncated_pointed(uint32_t m);
};

struct Algebra {
  Fp f;
  uint32_t dim = 0;
  std::vector<std::string> basis_labels;
  SVec unit;                // coordinates of 1
  std::vector<SVec> table;  // table[i*dim + j] = e_i * e_j

  const SVec& mul_basis(uint32_t i, uint32_t j) const { return table[i * dim + j]; }
  SVec mul(const SVec& a, const SVec& b) const;
  bool is_monomial() const;  // every basis product is 0 or a scalar multiple of a basis vector
  bool is_commutative() const;
  uint64_t content_hash() const;  // for cache keys
  std::string describe() const;
};

Algebra field_algebra(uint32_t p);
Algebra truncated_polynomial(uint32_t m, uint32_t p);
Algebra matrix_algebra(uint32_t n, uint32_t p);
Algebra monoid_algebra(const FiniteMonoid& g, uint32_t p);
Algebra tensor_product(const Algebra& a, const Algebra& b);
bool verify_axioms(const Algebra& a);
// dim A - rank of the commutator span [A, A].
uint32_t hh0(const Algebra& a);
// Same algebra with basis order permuted: new e_i = old e_{perm[i]}.
Algebra permute_basis(const Algebra& a, const std::vector<uint32_t>& perm);

}  // namespace carthom
