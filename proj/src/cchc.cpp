#include "carthom/cchc.hpp"

#include <algorithm>

namespace carthom {

namespace {

// writes src into dst with its upper-left corner at (r0, c0)
void add_block(SMat& dst, const SMat& src, uint32_t r0, uint32_t c0) {
  require(r0 + src.rows <= dst.rows && c0 + src.cols <= dst.cols, "block out of bounds");
  for (uint32_t j = 0; j < src.cols; ++j) {
    SVec cur = dst.col[c0 + j];
    for (const Term& t : src.col[j]) cur = svec_axpy(dst.f, cur, t.c, svec_unit(r0 + t.idx));
    dst.set_col(c0 + j, std::move(cur));
  }
}

// descends a fine levelwise map to the normalized levels; requires that it
// factors through the projections and commutes with b and the
// degree-raising map there
std::vector<SMat> descend_levels(const MixedComplex& dst, const MixedComplex& src,
                                 const CyclicMapData& f, int top) {
  std::vector<SMat> out;
  for (int n = 0; n <= top; ++n) {
    SMat raw = dst.proj[n].mul(f.level[n]);
    // must kill degenerate chains so the normalized level map is intrinsic
    SMat resid = raw.add(raw.mul(src.sect[n]).mul(src.proj[n]), dst.f.p - 1);
    require(resid.is_zero(), "level map does not descend");
    out.push_back(raw.mul(src.sect[n]));
  }
  for (int n = 1; n <= top; ++n)
    require(out[n - 1].mul(src.b[n]) == dst.b[n].mul(out[n]),
            "descended map fails to commute with b");
  for (int n = 0; n < top; ++n)
    require(out[n + 1].mul(src.bb[n]) == dst.bb[n].mul(out[n]),
            "descended map fails to commute with B");
  return out;
}

ChainComplex level_complex(const MixedComplex& m, int top_degree) {
  ChainComplex c;
  c.f = m.f;
  c.dims.assign(m.dims.begin(), m.dims.begin() + top_degree + 1);
  c.d.resize(top_degree + 1);
  c.d[0] = SMat::zero(0, c.dims[0], m.f);
  for (int n = 1; n <= top_degree; ++n) c.d[n] = m.b[n];
  return c;
}

}  // namespace

MixedTotal mixed_total(const MixedComplex& m, int top_degree) {
  require(top_degree >= 0, "total degree must be nonnegative");
  if (m.top < top_degree) throw truncation_error("tower too short for the requested total degree");
  MixedTotal t;
  t.top_degree = top_degree;
  t.tot.f = m.f;
  t.tot.dims.assign(top_degree + 1, 0);
  t.offset.resize(top_degree + 1);
  t.block.resize(top_degree + 1);
  for (int deg = 0; deg <= top_degree; ++deg) {
    for (int k = 0; 2 * k <= deg; ++k) {
      int n = deg - 2 * k;
      t.offset[deg].push_back(t.tot.dims[deg]);
      t.block[deg].push_back(m.dims[n]);
      t.tot.dims[deg] += m.dims[n];
    }
  }
  t.tot.d.resize(top_degree + 1);
  t.tot.d[0] = SMat::zero(0, t.tot.dims[0], m.f);
  for (int deg = 1; deg <= top_degree; ++deg) {
    SMat d = SMat::zero(t.tot.dims[deg - 1], t.tot.dims[deg], m.f);
    for (int k = 0; 2 * k <= deg; ++k) {
      int n = deg - 2 * k;
      uint32_t src = static_cast<uint32_t>(t.offset[deg][k]);
      if (n >= 1) add_block(d, m.b[n], static_cast<uint32_t>(t.offset[deg - 1][k]), src);
      if (k >= 1) add_block(d, m.bb[n], static_cast<uint32_t>(t.offset[deg - 1][k - 1]), src);
    }
    t.tot.d[deg] = std::move(d);
  }
  t.tot.validate();
  return t;
}

std::vector<uint32_t> cyclic_dims(const MixedComplex& m, int d_max) {
  MixedTotal t = mixed_total(m, d_max + 1);
  return homology_dims(t.tot, d_max);
}

std::vector<uint32_t> cyclic_dims(const CycObj& x, int d_max) {
  return cyclic_dims(mixed_complex(x), d_max);
}

bool sbi_exact(const MixedComplex& m, int d_max) {
  int t_deg = d_max + 1;
  ChainComplex a = level_complex(m, t_deg);
  MixedTotal t = mixed_total(m, t_deg);
  const ChainComplex& b = t.tot;

  ChainComplex c;
  c.f = m.f;
  c.dims.assign(t_deg + 1, 0);
  c.d.resize(t_deg + 1);
  for (int i = 2; i <= t_deg; ++i) c.dims[i] = b.dims[i - 2];
  c.d[0] = SMat::zero(0, 0, m.f);
  c.d[1] = SMat::zero(0, 0, m.f);
  if (t_deg >= 2) c.d[2] = SMat::zero(0, c.dims[2], m.f);
  for (int i = 3; i <= t_deg; ++i) c.d[i] = b.d[i - 2];
  c.validate();

  SesOfComplexes s;
  s.a = &a;
  s.b = &b;
  s.c = &c;
  for (int i = 0; i <= t_deg; ++i) {
    SMat in = SMat::zero(b.dims[i], a.dims[i], m.f);
    add_block(in, SMat::identity(a.dims[i], m.f), 0, 0);
    s.incl.level.push_back(std::move(in));
    SMat pr = SMat::zero(c.dims[i], b.dims[i], m.f);
    if (i >= 2) {
      for (size_t k = 1; k < t.offset[i].size(); ++k) {
        SMat id = SMat::identity(t.block[i][k], m.f);
        add_block(pr, id, static_cast<uint32_t>(t.offset[i - 2][k - 1]),
                  static_cast<uint32_t>(t.offset[i][k]));
      }
    }
    s.proj.level.push_back(std::move(pr));
  }
  s.validate(t_deg);
  return les_exact(s, d_max);
}

MixedPair mixed_pair(const CyclicPair& k) {
  require(k.c0.top == k.c1.top, "pair towers must share a top level");
  verify_cyclic_map(k.c1, k.c0, k.del);
  MixedPair mp;
  mp.m0 = mixed_complex(k.c0);
  mp.m1 = mixed_complex(k.c1);
  mp.del = descend_levels(mp.m0, mp.m1, k.del, k.c0.top);
  return mp;
}

PairTotal pair_total(const MixedPair& k, int top_degree) {
  require(top_degree >= 1, "pair total needs degree at least one");
  PairTotal pt;
  pt.t0 = mixed_total(k.m0, top_degree);
  pt.t1 = mixed_total(k.m1, top_degree - 1);
  const Fp f = k.m0.f;
  pt.tot.f = f;
  pt.tot.dims.assign(top_degree + 1, 0);
  pt.off0.assign(top_degree + 1, 0);
  pt.off1.assign(top_degree + 1, 0);
  for (int deg = 0; deg <= top_degree; ++deg) {
    pt.off1[deg] = pt.t0.tot.dims[deg];
    pt.tot.dims[deg] = pt.t0.tot.dims[deg] + (deg >= 1 ? pt.t1.tot.dims[deg - 1] : 0);
  }
  // blockwise lift of the connecting map to equal total degrees
  std::vector<SMat> delta(top_degree);
  for (int q = 0; q <= top_degree - 1; ++q) {
    SMat dl = SMat::zero(pt.t0.tot.dims[q], pt.t1.tot.dims[q], f);
    for (size_t kk = 0; kk < pt.t1.offset[q].size(); ++kk) {
      int n = q - 2 * static_cast<int>(kk);
      add_block(dl, k.del[n], static_cast<uint32_t>(pt.t0.offset[q][kk]),
                static_cast<uint32_t>(pt.t1.offset[q][kk]));
    }
    delta[q] = std::move(dl);
  }
  pt.tot.d.resize(top_degree + 1);
  pt.tot.d[0] = SMat::zero(0, pt.tot.dims[0], f);
  for (int deg = 1; deg <= top_degree; ++deg) {
    SMat d = SMat::zero(pt.tot.dims[deg - 1], pt.tot.dims[deg], f);
    add_block(d, pt.t0.tot.d[deg], 0, 0);
    add_block(d, delta[deg - 1], 0, static_cast<uint32_t>(pt.off1[deg]));
    if (deg >= 2)
      add_block(d, pt.t1.tot.d[deg - 1].scale(f.p - 1), static_cast<uint32_t>(pt.off1[deg - 1]),
                static_cast<uint32_t>(pt.off1[deg]));
    pt.tot.d[deg] = std::move(d);
  }
  pt.tot.validate();
  return pt;
}

std::vector<uint32_t> cyclic_dims_pair(const CyclicPair& k, int d_max) {
  PairTotal pt = pair_total(mixed_pair(k), d_max + 1);
  return homology_dims(pt.tot, d_max);
}

void validate_tower_complex(const ComplexOfCyclic& tc) {
  require(!tc.m.empty(), "need at least one layer");
  require(tc.d.size() == tc.m.size(), "need one connecting slot per layer");
  for (size_t j = 1; j < tc.m.size(); ++j) {
    require(tc.m[j].top == tc.m[0].top, "layers must share a top level");
    verify_cyclic_map(tc.m[j], tc.m[j - 1], tc.d[j]);
  }
  for (size_t j = 2; j < tc.m.size(); ++j)
    for (int n = 0; n <= tc.m[0].top; ++n)
      require(tc.d[j - 1].level[n].mul(tc.d[j].level[n]).is_zero(),
              "consecutive connecting maps do not compose to zero");
}

TowerTotal tower_total(const ComplexOfCyclic& tc, int top_degree) {
  validate_tower_complex(tc);
  require(top_degree >= 0, "total degree must be nonnegative");
  const Fp f = tc.m[0].f;
  const int layers = static_cast<int>(tc.m.size());
  TowerTotal tt;
  for (int j = 0; j < layers; ++j) tt.mx.push_back(mixed_complex(tc.m[j]));
  for (int j = 0; j < layers && j <= top_degree; ++j)
    tt.part.push_back(mixed_total(tt.mx[j], top_degree - j));
  tt.del.resize(tt.part.size());
  for (size_t j = 1; j < tt.part.size(); ++j)
    tt.del[j] = descend_levels(tt.mx[j - 1], tt.mx[j], tc.d[j], tc.m[0].top);

  tt.tot.f = f;
  tt.tot.dims.assign(top_degree + 1, 0);
  tt.off.resize(top_degree + 1);
  for (int deg = 0; deg <= top_degree; ++deg) {
    for (int j = 0; j < layers && j <= deg; ++j) {
      tt.off[deg].push_back(tt.tot.dims[deg]);
      tt.tot.dims[deg] += tt.part[j].tot.dims[deg - j];
    }
  }
  tt.tot.d.resize(top_degree + 1);
  tt.tot.d[0] = SMat::zero(0, tt.tot.dims[0], f);
  for (int deg = 1; deg <= top_degree; ++deg) {
    SMat d = SMat::zero(tt.tot.dims[deg - 1], tt.tot.dims[deg], f);
    for (int j = 0; j < layers && j <= deg; ++j) {
      const int inner = deg - j;
      if (inner >= 1) {
        SMat blk = tt.part[j].tot.d[inner];
        if (j % 2) blk = blk.scale(f.p - 1);
        add_block(d, blk, static_cast<uint32_t>(tt.off[deg - 1][j]),
                  static_cast<uint32_t>(tt.off[deg][j]));
      }
      if (j + 1 < layers && j + 1 <= deg) {
        const int q = deg - j - 1;  // inner degree on both sides of the lift
        for (size_t k = 0; k < tt.part[j + 1].offset[q].size(); ++k) {
          const int lvl = q - 2 * static_cast<int>(k);
          add_block(d, tt.del[j + 1][lvl],
                    static_cast<uint32_t>(tt.off[deg - 1][j] + tt.part[j].offset[q][k]),
                    static_cast<uint32_t>(tt.off[deg][j + 1] + tt.part[j + 1].offset[q][k]));
        }
      }
    }
    tt.tot.d[deg] = std::move(d);
  }
  tt.tot.validate();
  return tt;
}

ChainMapData tower_block_inclusion(const TowerTotal& tt) {
  ChainMapData m;
  const int top = tt.tot.top();
  for (int deg = 0; deg <= top; ++deg) {
    SMat in = SMat::zero(tt.tot.dims[deg], tt.part[0].tot.dims[deg], tt.tot.f);
    add_block(in, SMat::identity(tt.part[0].tot.dims[deg], tt.tot.f),
              static_cast<uint32_t>(tt.off[deg][0]), 0);
    m.level.push_back(std::move(in));
  }
  verify_chain_map(tt.part[0].tot, tt.tot, m, top);
  return m;
}

ChainMapData lift_tower_map(const TowerTotal& x, const TowerTotal& y,
                            const std::vector<CyclicMapData>& f) {
  require(x.part.size() == y.part.size(), "layer counts differ");
  require(x.tot.top() == y.tot.top(), "totals have different tops");
  require(f.size() >= x.part.size(), "need one layer map per layer");
  const Fp fld = x.tot.f;
  const int top = x.tot.top();
  const int layers = static_cast<int>(x.part.size());
  std::vector<std::vector<SMat>> lv(layers);
  for (int j = 0; j < layers; ++j)
    lv[j] = descend_levels(y.mx[j], x.mx[j], f[j], x.mx[j].top);
  ChainMapData m;
  for (int deg = 0; deg <= top; ++deg) {
    SMat mm = SMat::zero(y.tot.dims[deg], x.tot.dims[deg], fld);
    for (int j = 0; j < layers && j <= deg; ++j) {
      const int q = deg - j;
      for (size_t k = 0; k < x.part[j].offset[q].size(); ++k) {
        const int lvl = q - 2 * static_cast<int>(k);
        add_block(mm, lv[j][lvl],
                  static_cast<uint32_t>(y.off[deg][j] + y.part[j].offset[q][k]),
                  static_cast<uint32_t>(x.off[deg][j] + x.part[j].offset[q][k]));
      }
    }
    m.level.push_back(std::move(mm));
  }
  verify_chain_map(x.tot, y.tot, m, top);
  return m;
}

TowerHomology tower_homology(const ComplexOfCyclic& tc, int d_max) {
  TowerHomology th;
  th.tt = tower_total(tc, d_max + 1);
  for (int i = 0; i <= d_max; ++i) th.hc.push_back(homology_at(th.tt.tot, i));
  return th;
}

TruncationFrom truncate_from(const ChainComplex& x, int a) {
  require(a >= 0 && a <= x.top(), "cut degree out of range");
  TruncationFrom r;
  r.c.f = x.f;
  r.c.dims.assign(x.top() + 1, 0);
  r.c.d.resize(x.top() + 1);
  if (a == 0) {
    r.c = x;
    for (int i = 0; i <= x.top(); ++i) r.incl.level.push_back(SMat::identity(x.dims[i], x.f));
    return r;
  }
  Subspace z = kernel_basis(x.d[a]);
  for (int i = 0; i <= x.top(); ++i) {
    if (i < a) {
      r.c.dims[i] = 0;
      r.incl.level.push_back(SMat::zero(x.dims[i], 0, x.f));
    } else if (i == a) {
      r.c.dims[i] = z.dim();
      r.incl.level.push_back(z.basis);
    } else {
      r.c.dims[i] = x.dims[i];
      r.incl.level.push_back(SMat::identity(x.dims[i], x.f));
    }
  }
  for (int i = 0; i <= x.top(); ++i) {
    if (i < a) {
      r.c.d[i] = SMat::zero(0, 0, x.f);
    } else if (i == a) {
      r.c.d[i] = SMat::zero(0, r.c.dims[a], x.f);
    } else if (i == a + 1) {
      Subspace src{x.dims[i], SMat::identity(x.dims[i], x.f)};
      r.c.d[i] = restrict_map(x.d[i], src, z);
    } else {
      r.c.d[i] = x.d[i];
    }
  }
  r.c.validate();
  verify_chain_map(r.c, x, r.incl, x.top());
  return r;
}

TruncationTo truncate_to(const ChainComplex& x, int b) {
  require(b >= 0, "cut degree out of range");
  TruncationTo r;
  if (b >= x.top()) {
    r.c = x;
    for (int i = 0; i <= x.top(); ++i) r.proj.level.push_back(SMat::identity(x.dims[i], x.f));
    return r;
  }
  Subspace z = kernel_basis(x.d[b + 1]);
  QuotientPresentation qp = quotient_presentation(x.dims[b + 1], z);
  r.c.f = x.f;
  r.c.dims.assign(x.top() + 1, 0);
  r.c.d.resize(x.top() + 1);
  for (int i = 0; i <= x.top(); ++i) {
    if (i <= b) {
      r.c.dims[i] = x.dims[i];
      r.proj.level.push_back(SMat::identity(x.dims[i], x.f));
    } else if (i == b + 1) {
      r.c.dims[i] = qp.projection.rows;
      r.proj.level.push_back(qp.projection);
    } else {
      r.c.dims[i] = 0;
      r.proj.level.push_back(SMat::zero(0, x.dims[i], x.f));
    }
  }
  for (int i = 0; i <= x.top(); ++i) {
    if (i <= b) {
      r.c.d[i] = i == 0 ? SMat::zero(0, r.c.dims[0], x.f) : x.d[i];
    } else if (i == b + 1) {
      r.c.d[i] = x.d[i].mul(qp.section);
    } else {
      r.c.d[i] = SMat::zero(r.c.dims[i - 1], 0, x.f);
    }
  }
  r.c.validate();
  verify_chain_map(x, r.c, r.proj, x.top());
  return r;
}

ChainComplex window_truncation(const ChainComplex& x, int a, int b) {
  require(a <= b, "empty window");
  TruncationFrom lo = truncate_from(x, a);
  TruncationTo hi = truncate_to(lo.c, b);
  return hi.c;
}

LambdaQuotient lambda_quotient(const CycObj& x) {
  require(x.mult == 1, "rotation quotient is defined for multiplicity one");
  const Fp f = x.f;
  LambdaQuotient q;
  q.c.f = f;
  q.c.dims.assign(x.top + 1, 0);
  q.c.d.resize(x.top + 1);
  for (int n = 0; n <= x.top; ++n) {
    SMat lam = x.tau[n].scale(n % 2 == 1 ? f.p - 1 : 1);
    SMat one_minus = SMat::identity(x.dims[n], f).add(lam, f.p - 1);
    QuotientPresentation qp = quotient_presentation(x.dims[n], image_basis(one_minus));
    q.c.dims[n] = qp.projection.rows;
    q.pres.push_back(std::move(qp));
  }
  q.c.d[0] = SMat::zero(0, q.c.dims[0], f);
  for (int n = 1; n <= x.top; ++n) {
    SMat b = x.face[n][0];
    for (uint32_t i = 1; i < x.face[n].size(); ++i) b = b.add(x.face[n][i], i % 2 ? f.p - 1 : 1);
    // the face sum must preserve the rotation span for the quotient to exist
    SMat resid = q.pres[n - 1].projection.mul(b);
    resid = resid.add(resid.mul(q.pres[n].section).mul(q.pres[n].projection), f.p - 1);
    require(resid.is_zero(), "face sum does not descend to the rotation quotient");
    q.c.d[n] = q.pres[n - 1].projection.mul(b).mul(q.pres[n].section);
  }
  q.c.validate();
  return q;
}

}  // namespace carthom
