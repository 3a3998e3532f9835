#include <doctest.h>

#include "carthom/pcyclic.hpp"
#include "carthom/wres.hpp"

using namespace carthom;

namespace {

// identity plus ones on the superdiagonal: unipotent single block
SMat jordan(uint32_t k, Fp f) {
  SMat m = SMat::identity(k, f);
  for (uint32_t j = 1; j < k; ++j) m.col[j] = svec_axpy(f, m.col[j], 1, svec_unit(j - 1));
  return m;
}

SMat cyclic_perm(uint32_t k, Fp f) {
  SMat m(k, k, f);
  for (uint32_t j = 0; j < k; ++j) m.set_col(j, svec_unit((j + 1) % k));
  return m;
}

SMat direct_sum(const SMat& a, const SMat& b) {
  SMat m(a.rows + b.rows, a.cols + b.cols, a.f);
  for (uint32_t j = 0; j < a.cols; ++j) m.set_col(j, a.col[j]);
  for (uint32_t j = 0; j < b.cols; ++j) {
    SVec v;
    for (const Term& t : b.col[j]) v.push_back(Term{t.idx + a.rows, t.c});
    m.set_col(a.cols + j, v);
  }
  return m;
}

}  // namespace

TEST_SUITE("pcyclic") {

TEST_CASE("trivial and free summands are tight") {
  Fp f(3);
  TightReport triv = tightness_of_operator(f, SMat::identity(1, f), 3);
  CHECK(triv.tight);
  CHECK(triv.h_odd == 1);
  CHECK(triv.h_even == 1);
  TightReport fr = tightness_of_operator(f, cyclic_perm(3, f), 3);
  CHECK(fr.tight);
  CHECK(fr.h_odd == 0);
  CHECK(fr.h_even == 0);
  TightReport both = tightness_of_operator(f, direct_sum(SMat::identity(2, f), cyclic_perm(3, f)), 3);
  CHECK(both.tight);
  CHECK(both.h_odd == 2);
}

TEST_CASE("middle unipotent blocks are not tight") {
  Fp f(3);
  TightReport j2 = tightness_of_operator(f, jordan(2, f), 3);
  CHECK(!j2.tight);
  CHECK(j2.h_odd == 1);
  CHECK(j2.h_even == 1);
  // a tight part does not rescue it
  TightReport mixy = tightness_of_operator(f, direct_sum(jordan(2, f), cyclic_perm(3, f)), 3);
  CHECK(!mixy.tight);

  Fp f5(5);
  for (uint32_t k = 2; k <= 4; ++k) CHECK(!tightness_of_operator(f5, jordan(k, f5), 5).tight);
  TightReport full = tightness_of_operator(f5, jordan(5, f5), 5);
  CHECK(full.tight);
  CHECK(full.h_odd == 0);
}

TEST_CASE("trace maps and round trips") {
  Fp f(3);
  {
    TraceData t = trace_data(f, cyclic_perm(3, f), 3);
    CHECK(t.inv.dim() == 1);
    CHECK(t.coinv.projection.rows == 1);
    CHECK(rank(t.trace) == 1);  // iso on a free module
  }
  {
    TraceData t = trace_data(f, SMat::identity(2, f), 3);
    CHECK(t.trace.is_zero());  // multiplication by p
    CHECK(t.inv.dim() == 2);
  }
}

TEST_CASE("census matches the operator path on tower levels") {
  NerveGen g(truncated_polynomial(2, 3), 3);
  auto byc = tightness_by_census(g, 1);
  REQUIRE(byc.has_value());
  CHECK(byc->via_census);
  CycObj x = materialize(g, 1);
  TightReport op = tightness_of_operator(x.f, x.sigma(1), 3);
  CHECK(op.tight == byc->tight);
  CHECK(op.h_odd == byc->h_odd);
  CHECK(op.h_even == byc->h_even);
  // rotation by two on six digit slots fixes period-two patterns
  CHECK(byc->h_odd == 4);
}

TEST_CASE("census handles larger permutation levels") {
  NerveGen g(matrix_algebra(2, 3), 3);
  TightReport r = tightness_of_level(g, 2);
  CHECK(r.via_census);
  CHECK(r.tight);
  // fixed points of rotation by three on nine slots: period-three patterns
  CHECK(r.h_odd == 4 * 4 * 4);
}

TEST_CASE("level entry point picks the census for permutation towers") {
  NerveGen g(truncated_polynomial(2, 3), 3);
  TightReport r = tightness_of_level(g, 0);
  CHECK(r.via_census);
  CHECK(r.tight);
  CHECK(r.h_odd == 2);  // constant digit patterns on three slots
}

TEST_CASE("periodic resolution alternates shift and power sum") {
  WRes w = w_resolution(3, 8);
  CHECK(w.d[1].mul(w.d[2]).is_zero());
  CHECK(w.d[2].mul(w.d[3]).is_zero());
  CHECK(w.d[1] == w.d[3]);
  CHECK(w.d[2] == w.d[4]);
  SMat cube = w.sigma.mul(w.sigma).mul(w.sigma);
  CHECK(cube == SMat::identity(3, w.f));
}

TEST_CASE("comultiplication solves and passes the exact checks") {
  // construction verifies the chain-map and both counit identities
  // degree by degree; failure throws
  DiagonalApprox da = diagonal_approximation(3, 6);
  CHECK(svec_eq(da.delta_gen[0], svec_unit(0)));
  for (int n = 0; n <= 6; ++n)
    CHECK(da.delta_gen[n].size() >= 1);
  DiagonalApprox d5 = diagonal_approximation(5, 4);
  CHECK(d5.w.p == 5);
}

TEST_CASE("degree-one cap acts as the canonical class") {
  Fp f(3);
  DiagonalApprox da = diagonal_approximation(3, 6);

  CapOnModule triv = cap_on_module(f, SMat::identity(1, f), da);
  CHECK(triv.h_odd == 1);
  CHECK(triv.h_even == 1);
  CHECK(triv.odd_to_even == SMat::identity(1, f));

  CapOnModule two = cap_on_module(f, SMat::identity(2, f), da);
  CHECK(two.odd_to_even == SMat::identity(2, f));

  CapOnModule fr = cap_on_module(f, cyclic_perm(3, f), da);
  CHECK(fr.h_odd == 0);
  CHECK(fr.h_even == 0);

  CapOnModule j2 = cap_on_module(f, jordan(2, f), da);
  CHECK(j2.h_odd == 1);
  CHECK(j2.h_even == 1);
  CHECK(j2.odd_to_even.is_zero());
}

TEST_CASE("cap invertibility matches the positional comparison") {
  Fp f(3);
  DiagonalApprox da = diagonal_approximation(3, 4);
  std::vector<SMat> ops = {SMat::identity(1, f),       jordan(2, f),
                           jordan(3, f),               cyclic_perm(3, f),
                           direct_sum(jordan(2, f), SMat::identity(1, f)),
                           direct_sum(cyclic_perm(3, f), SMat::identity(2, f))};
  for (const SMat& s : ops) {
    TightReport t = tightness_of_operator(f, s, 3);
    CapOnModule c = cap_on_module(f, s, da);
    CHECK(c.h_odd == t.h_odd);
    CHECK(c.h_even == t.h_even);
    bool iso = (c.h_odd == c.h_even) && rank(c.odd_to_even) == c.h_odd;
    CHECK(iso == t.tight);
  }

  Fp f5(5);
  DiagonalApprox d5 = diagonal_approximation(5, 4);
  CapOnModule j3 = cap_on_module(f5, jordan(3, f5), d5);
  CHECK(j3.h_odd == 1);
  CHECK(j3.h_even == 1);
  CHECK(j3.odd_to_even.is_zero());
}

}  // TEST_SUITE

