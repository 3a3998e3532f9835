#include "carthom/wres.hpp"

#include <tuple>

#include "carthom/complex.hpp"
#include "carthom/cyclic.hpp"

namespace carthom {

namespace {

constexpr uint32_t kOne = 1;

// index of sigma^a u_i (x) sigma^b u_j inside the degree-(i+j) sum,
// block k = i
uint32_t pair_idx(uint32_t p, uint32_t k, uint32_t a, uint32_t b) {
  return k * p * p + a * p + b;
}

// simultaneous shift by t on both tensor factors, blockwise
SVec shift_diag(Fp f, const SVec& v, uint32_t p, uint32_t t) {
  SVec out;
  out.reserve(v.size());
  for (const Term& tm : v) {
    uint32_t k = tm.idx / (p * p), r = tm.idx % (p * p);
    uint32_t a = (r / p + t) % p, b = (r % p + t) % p;
    out.push_back(Term{pair_idx(p, k, a, b), tm.c});
  }
  return svec_canon(f, std::move(out));
}

// differential on the degree-n part of the tensor square, in pair
// coordinates; rows live in the degree-(n-1) part
SMat tensor_square_d(Fp f, uint32_t p, uint32_t n) {
  std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> ts;
  for (uint32_t k = 0; k <= n; ++k) {
    uint32_t i = k, j = n - k;
    for (uint32_t a = 0; a < p; ++a)
      for (uint32_t b = 0; b < p; ++b) {
        uint32_t c0 = pair_idx(p, k, a, b);
        if (i >= 1) {
          uint32_t off = (k - 1) * p * p;
          if (i % 2 == 1) {
            ts.emplace_back(off + ((a + 1) % p) * p + b, c0, kOne);
            ts.emplace_back(off + a * p + b, c0, f.p - 1);
          } else {
            for (uint32_t c = 0; c < p; ++c) ts.emplace_back(off + c * p + b, c0, kOne);
          }
        }
        if (j >= 1) {
          uint32_t off = k * p * p;
          uint32_t s = (i % 2 == 0) ? 1 : f.p - 1;
          if (j % 2 == 1) {
            ts.emplace_back(off + a * p + ((b + 1) % p), c0, s);
            ts.emplace_back(off + a * p + b, c0, f.neg(s));
          } else {
            for (uint32_t c = 0; c < p; ++c) ts.emplace_back(off + a * p + c, c0, s);
          }
        }
      }
  }
  return SMat::from_triples(n * p * p, (n + 1) * p * p, f, ts);
}

// rows of the counit against the stated factor; the other factor must
// return the degree generator's coordinates on the nose
SMat counit_rows(Fp f, uint32_t p, uint32_t n, bool left) {
  std::vector<std::tuple<uint32_t, uint32_t, uint32_t>> ts;
  uint32_t k = left ? 0 : n;
  for (uint32_t a = 0; a < p; ++a)
    for (uint32_t b = 0; b < p; ++b)
      ts.emplace_back(left ? b : a, pair_idx(p, k, a, b), kOne);
  return SMat::from_triples(p, (n + 1) * p * p, f, ts);
}

}  // namespace

WRes w_resolution(uint32_t p, int top) {
  require(is_prime(p), "group order must be prime");
  require(top >= 0, "resolution needs at least degree zero");
  Fp f(p);
  WRes w;
  w.f = f;
  w.p = p;
  w.top = top;
  w.sigma = SMat(p, p, f);
  for (uint32_t a = 0; a < p; ++a) w.sigma.set_col(a, svec_unit((a + 1) % p));
  SMat u = w.sigma.add(SMat::identity(p, f), p - 1);
  SMat nrm = power_sum(w.sigma, p);
  w.d.resize(top + 1);
  for (int i = 1; i <= top; ++i) w.d[i] = (i % 2 == 1) ? u : nrm;

  ChainComplex c{f, std::vector<uint32_t>(top + 1, p), w.d};
  c.validate();
  if (top >= 1) {
    std::vector<uint32_t> h = homology_dims(c, top - 1);
    require(h[0] == 1, "degree zero must carry the ground field");
    for (int i = 1; i < top; ++i) require(h[i] == 0, "higher degrees must be exact");
  }
  return w;
}

DiagonalApprox diagonal_approximation(uint32_t p, int top) {
  require(p % 2 == 1, "the comultiplication solver needs odd order");
  DiagonalApprox da;
  da.w = w_resolution(p, top);
  Fp f = da.w.f;
  da.delta_gen.resize(top + 1);
  da.delta_gen[0] = svec_unit(pair_idx(p, 0, 0, 0));

  for (uint32_t n = 1; n <= static_cast<uint32_t>(top); ++n) {
    uint32_t tn = (n + 1) * p * p, tm = n * p * p;
    SMat dt = tensor_square_d(f, p, n);
    SMat c_left = counit_rows(f, p, n, true);
    SMat c_right = counit_rows(f, p, n, false);

    // image of the previous value under the group-ring coefficient of the
    // incoming differential, acting diagonally
    SVec rhs_chain;
    if (n % 2 == 1) {
      rhs_chain = svec_axpy(f, shift_diag(f, da.delta_gen[n - 1], p, 1), f.p - 1,
                            da.delta_gen[n - 1]);
    } else {
      for (uint32_t t = 0; t < p; ++t)
        rhs_chain = svec_axpy(f, rhs_chain, 1, shift_diag(f, da.delta_gen[n - 1], p, t));
    }

    SMat stacked(tm + 2 * p, tn, f);
    for (uint32_t j = 0; j < tn; ++j) {
      SVec col = dt.col[j];
      for (const Term& t : c_left.col[j]) col.push_back(Term{tm + t.idx, t.c});
      for (const Term& t : c_right.col[j]) col.push_back(Term{tm + p + t.idx, t.c});
      stacked.set_col(j, svec_canon(f, std::move(col)));
    }
    SVec b = rhs_chain;
    b.push_back(Term{tm, 1});
    b.push_back(Term{tm + p, 1});
    std::optional<SVec> x = solve(stacked, svec_canon(f, std::move(b)));
    require(x.has_value(), "comultiplication solve failed");
    da.delta_gen[n] = *x;
  }

  // full matrices, extended equivariantly, and the exact identity checks
  std::vector<SMat> full(top + 1);
  for (uint32_t n = 0; n <= static_cast<uint32_t>(top); ++n) {
    full[n] = SMat((n + 1) * p * p, p, f);
    for (uint32_t c = 0; c < p; ++c) full[n].set_col(c, shift_diag(f, da.delta_gen[n], p, c));
    SMat c_left = counit_rows(f, p, n, true);
    SMat c_right = counit_rows(f, p, n, false);
    require(c_left.mul(full[n]) == SMat::identity(p, f), "left counit must be the identity");
    require(c_right.mul(full[n]) == SMat::identity(p, f), "right counit must be the identity");
    if (n >= 1) {
      SMat lhs = tensor_square_d(f, p, n).mul(full[n]);
      SMat rhs = full[n - 1].mul(da.w.d[n]);
      require(lhs == rhs, "comultiplication must intertwine the differentials");
    }
  }

  da.cap.resize(top + 1);
  for (uint32_t n = 1; n <= static_cast<uint32_t>(top); ++n) {
    // contract the degree-one factor: sigma^a u_1 (x) sigma^b u_{n-1}
    // pairs to sigma^(a+b) u_{n-1}
    SMat m(p, p, f);
    for (uint32_t c = 0; c < p; ++c) {
      SVec out;
      for (const Term& t : full[n].col[c]) {
        uint32_t k = t.idx / (p * p), r = t.idx % (p * p);
        if (k != 1) continue;
        out.push_back(Term{(r / p + r % p) % p, t.c});
      }
      m.set_col(c, svec_canon(f, std::move(out)));
    }
    da.cap[n] = m;
  }
  return da;
}

CapOnModule cap_on_module(Fp f, const SMat& sigma_v, const DiagonalApprox& da) {
  require(da.w.p == f.p, "module characteristic must match the group order");
  require(da.w.top >= 3, "need the comultiplication through degree three");
  require(sigma_v.rows == sigma_v.cols, "operator must be square");
  uint32_t p = da.w.p, dim = sigma_v.rows;

  // [sigma^a u (x) v] corresponds to sigma^(-a) v, so the stable odd cap
  // column acts through inverse powers
  std::vector<SMat> pw(p);
  pw[0] = SMat::identity(dim, f);
  for (uint32_t k = 1; k < p; ++k) pw[k] = sigma_v.mul(pw[k - 1]);
  SMat act = SMat::zero(dim, dim, f);
  for (const Term& t : da.cap[3].col[0]) act = act.add(pw[(p - t.idx) % p], t.c);

  SMat u = sigma_v.add(SMat::identity(dim, f), f.p - 1);
  SMat nrm = power_sum(sigma_v, p);
  Homology h_odd(f, dim, &u, &nrm);
  Homology h_even(f, dim, &nrm, &u);

  CapOnModule r;
  r.h_odd = h_odd.dim();
  r.h_even = h_even.dim();
  r.odd_to_even = SMat(r.h_even, r.h_odd, f);
  for (uint32_t j = 0; j < r.h_odd; ++j) {
    SVec w = act.apply(h_odd.reps()[j]);
    require(h_even.is_cycle(w), "cap image must land in the even cycles");
    r.odd_to_even.set_col(j, h_even.express(w));
  }
  return r;
}

}  // namespace carthom
