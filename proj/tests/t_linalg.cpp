#include <doctest.h>

#include <set>

#include "carthom/linalg.hpp"

using namespace carthom;

TEST_SUITE("linalg") {

TEST_CASE("prime field arithmetic") {
  Fp f{7};
  CHECK(f.add(3, 5) == 1);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.neg(0) == 0);
  CHECK(f.neg(2) == 5);
  for (uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.pow(3, 6) == 1);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-14) == 0);
  CHECK(is_prime(2));
  CHECK(is_prime(101));
  CHECK(!is_prime(1));
  CHECK(!is_prime(91));
}

TEST_CASE("sparse vector basics") {
  Fp f{5};
  SVec a = svec_unit(3);
  a = svec_axpy(f, a, 2, svec_unit(1));
  a = svec_axpy(f, a, 4, svec_unit(3));
  CHECK(svec_coeff(a, 1) == 2);
  CHECK(svec_coeff(a, 3) == 0);  // 1 + 4 = 0
  CHECK(svec_coeff(a, 7) == 0);
  CHECK(a.size() == 1);
  SVec b = svec_scale(f, a, 3);
  CHECK(svec_coeff(b, 1) == 1);
  SVec c = svec_map_idx(f, a, [](uint32_t i) { return uint64_t(i) + 10; });
  CHECK(svec_coeff(c, 11) == 2);
  SVec d = svec_canon(f, SVec{{4, 3}, {1, 2}, {4, 2}});
  CHECK(d.size() == 1);
  CHECK(svec_coeff(d, 1) == 2);
}

TEST_CASE("matrix composition and transpose") {
  Fp f{3};
  SMat a = SMat::from_triples(2, 3, f, {{0, 0, 1}, {1, 1, 2}, {0, 2, 1}});
  SMat b = SMat::from_triples(3, 2, f, {{0, 0, 1}, {1, 0, 1}, {2, 1, 2}});
  SMat ab = a.mul(b);  // (2x3)(3x2) = 2x2
  CHECK(ab.rows == 2);
  CHECK(ab.cols == 2);
  CHECK(ab.at(0, 0) == 1);
  CHECK(ab.at(1, 0) == 2);
  CHECK(ab.at(0, 1) == 2);
  CHECK(ab.at(1, 1) == 0);
  SMat at = a.transpose();
  CHECK(at.rows == 3);
  CHECK(at.at(2, 0) == 1);
  SMat s = a.add(a.scale(2));  // a + 2a = 0 mod 3
  CHECK(s.is_zero());
}

TEST_CASE("echelon rank and membership") {
  Fp f{5};
  Ech e(f, 4);
  CHECK(e.insert(svec_unit(0)));
  SVec v = svec_axpy(f, svec_unit(0), 3, svec_unit(2));
  CHECK(e.insert(v));
  CHECK(!e.insert(svec_scale(f, v, 2)));
  CHECK(e.rank() == 2);
  CHECK(e.contains(svec_unit(2)));
  CHECK(!e.contains(svec_unit(1)));
  auto b = e.basis();
  REQUIRE(b.size() == 2);
  // canonical reduced basis here is exactly e0, e2
  CHECK(svec_eq(b[0], svec_unit(0)));
  CHECK(svec_eq(b[1], svec_unit(2)));
}

TEST_CASE("basis is insertion-order independent") {
  Fp f{7};
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<SVec> vecs;
    for (int k = 0; k < 5; ++k) {
      SVec v;
      for (uint32_t i = 0; i < 6; ++i) v = svec_axpy(f, v, rng.below(7), svec_unit(i));
      vecs.push_back(v);
    }
    Ech e1(f, 6), e2(f, 6);
    for (const auto& v : vecs) e1.insert(v);
    for (auto it = vecs.rbegin(); it != vecs.rend(); ++it) e2.insert(*it);
    CHECK(e1.basis() == e2.basis());
    CHECK(e1.same_span(e2));
  }
}

TEST_CASE("tracked echelon reports combinations") {
  Fp f{7};
  Ech e(f, 4, /*tracked=*/true);
  SVec x = svec_axpy(f, svec_unit(0), 1, svec_unit(1));
  SVec y = svec_axpy(f, svec_unit(1), 1, svec_unit(2));
  CHECK(!e.insert_tagged(x, svec_unit(0)));
  CHECK(!e.insert_tagged(y, svec_unit(1)));
  // x + 2y should come back as exactly that combination of tags
  SVec z = svec_axpy(f, x, 2, y);
  auto combo = e.express(z);
  REQUIRE(combo.has_value());
  CHECK(svec_coeff(*combo, 0) == 1);
  CHECK(svec_coeff(*combo, 1) == 2);
  auto dup = e.insert_tagged(z, svec_unit(2));
  REQUIRE(dup.has_value());
  CHECK(svec_eq(*dup, *combo));
  CHECK(!e.express(svec_unit(3)).has_value());
}

TEST_CASE("kernel and image of a map") {
  Fp f{3};
  // d: F^3 -> F^2, d(e0) = e0, d(e1) = e0, d(e2) = 0
  SMat d = SMat::from_triples(2, 3, f, {{0, 0, 1}, {0, 1, 1}});
  CHECK(rank(d) == 1);
  Subspace k = kernel_basis(d);
  CHECK(k.dim() == 2);
  for (uint32_t j = 0; j < k.dim(); ++j) CHECK(d.apply(k.basis.col[j]).empty());
  Subspace im = image_basis(d);
  CHECK(im.dim() == 1);
  CHECK(svec_eq(im.basis.col[0], svec_unit(0)));
}

TEST_CASE("quotient presentation is a retraction") {
  Fp f{5};
  // quotient of F^4 by span{e0 - e1, e2}
  SVec r = svec_axpy(f, svec_unit(0), 4, svec_unit(1));
  Subspace sub = subspace_from_vectors(f, 4, {r, svec_unit(2)});
  QuotientPresentation q = quotient_presentation(4, sub);
  CHECK(q.projection.rows == 2);
  CHECK(q.projection.cols == 4);
  CHECK(q.section.rows == 4);
  CHECK(q.projection.apply(r).empty());
  CHECK(q.projection.apply(svec_unit(2)).empty());
  CHECK(q.projection.mul(q.section) == SMat::identity(2, f));
  // e0 and e1 agree in the quotient
  CHECK(svec_eq(q.projection.apply(svec_unit(0)), q.projection.apply(svec_unit(1))));
}

TEST_CASE("restrict map to invariant subspace") {
  Fp f{3};
  // rotation of F^3: e0 -> e1 -> e2 -> e0; invariant line e0+e1+e2
  SMat rot = SMat::from_triples(3, 3, f, {{1, 0, 1}, {2, 1, 1}, {0, 2, 1}});
  SVec s = svec_axpy(f, svec_axpy(f, svec_unit(0), 1, svec_unit(1)), 1, svec_unit(2));
  Subspace line = subspace_from_vectors(f, 3, {s});
  SMat small = restrict_map(rot, line, line);
  CHECK(small == SMat::identity(1, f));
  Subspace axis = subspace_from_vectors(f, 3, {svec_unit(0)});
  CHECK_THROWS_AS(restrict_map(rot, axis, axis), invariant_violation);
}

TEST_CASE("solve picks a canonical solution") {
  Fp f{7};
  SMat m = SMat::from_triples(2, 3, f, {{0, 0, 1}, {0, 1, 1}, {1, 2, 1}});
  SVec rhs = svec_axpy(f, svec_unit(0), 5, svec_unit(1));
  auto x = solve(m, rhs);
  REQUIRE(x.has_value());
  CHECK(svec_eq(m.apply(*x), rhs));
  auto again = solve(m, rhs);
  CHECK(svec_eq(*x, *again));
  SMat z = SMat::zero(2, 3, f);
  CHECK(!solve(z, svec_unit(1)).has_value());
}

TEST_CASE("subspace equality and containment") {
  Fp f{3};
  SVec a = svec_axpy(f, svec_unit(0), 1, svec_unit(1));
  Subspace s1 = subspace_from_vectors(f, 3, {svec_unit(0), svec_unit(1)});
  Subspace s2 = subspace_from_vectors(f, 3, {a, svec_unit(1)});
  CHECK(subspace_equal(s1, s2));
  Subspace line = subspace_from_vectors(f, 3, {a});
  CHECK(subspace_contains(s1, line));
  CHECK(!subspace_contains(line, s1));
}

TEST_CASE("randomized echelon against brute span count") {
  Rng rng(12345);
  Fp f{3};
  for (int trial = 0; trial < 20; ++trial) {
    uint32_t n = 1 + rng.below(5);
    std::vector<SVec> vecs;
    for (uint32_t k = 0; k < 5; ++k) {
      SVec v;
      for (uint32_t i = 0; i < n; ++i) v = svec_axpy(f, v, rng.below(3), svec_unit(i));
      vecs.push_back(v);
    }
    Ech e(f, n);
    for (const SVec& v : vecs) e.insert(v);
    // brute force: count distinct vectors generated by all coefficient tuples
    std::set<std::vector<uint32_t>> span;
    size_t total = 1;
    for (size_t i = 0; i < vecs.size(); ++i) total *= 3;
    for (size_t mask = 0; mask < total; ++mask) {
      std::vector<uint32_t> cur(n, 0);
      size_t m = mask;
      for (const SVec& g : vecs) {
        uint32_t c = static_cast<uint32_t>(m % 3);
        m /= 3;
        for (const Term& t : g) cur[t.idx] = f.add(cur[t.idx], f.mul(c, t.c));
      }
      span.insert(cur);
    }
    size_t expect = 1;
    for (uint32_t r = 0; r < e.rank(); ++r) expect *= 3;
    CHECK(span.size() == expect);
  }
}

TEST_CASE("randomized kernels and tag combinations stay exact") {
  // regression: tags must absorb reduction corrections with a minus sign,
  // which only shows up when inserted vectors overlap earlier pivots
  for (uint32_t p : {2u, 3u, 5u}) {
    Fp f(p);
    Rng rng(900 + p);
    for (int trial = 0; trial < 15; ++trial) {
      uint32_t rows = 1 + rng.below(6), cols = 1 + rng.below(8);
      SMat m(rows, cols, f);
      for (uint32_t j = 0; j < cols; ++j) {
        SVec v;
        for (uint32_t i = 0; i < rows; ++i) v = svec_axpy(f, v, rng.below(p), svec_unit(i));
        m.set_col(j, v);
      }
      Subspace ker = kernel_basis(m);
      CHECK(m.mul(ker.basis).is_zero());
      CHECK(ker.dim() + rank(m) == cols);

      std::vector<SVec> vecs = m.col;
      Ech e(f, rows, /*tracked=*/true);
      for (uint32_t k = 0; k < vecs.size(); ++k) e.insert_tagged(vecs[k], svec_unit(k));
      SVec w;
      std::vector<uint32_t> coeffs;
      for (uint32_t k = 0; k < vecs.size(); ++k) {
        uint32_t a = rng.below(p);
        coeffs.push_back(a);
        w = svec_axpy(f, w, a, vecs[k]);
      }
      auto combo = e.express(w);
      REQUIRE(combo.has_value());
      SVec back;
      for (const Term& t : *combo) back = svec_axpy(f, back, t.c, vecs[t.idx]);
      CHECK(svec_eq(back, w));
    }
  }
}

}  // TEST_SUITE
