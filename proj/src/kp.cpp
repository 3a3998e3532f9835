#include "carthom/kp.hpp"

#include <stdexcept>
#include <utility>

namespace carthom {

namespace {

Subspace full_space(uint32_t dim, Fp f) {
  return Subspace{dim, SMat::identity(dim, f)};
}

// factor a map through a quotient presentation on its source; the residual
// must vanish or the map was not constant on fibers
SMat through_quotient(const SMat& raw, const QuotientPresentation& src) {
  SMat resid = raw.add(raw.mul(src.section).mul(src.projection), raw.f.p - 1);
  require(resid.is_zero(), "map does not factor through the quotient");
  return raw.mul(src.section);
}

// descend a rotation-equivariant fine map between two presented quotients
SMat descend(const QuotientPresentation& dst, const QuotientPresentation& src,
             const SMat& fine) {
  return through_quotient(dst.projection.mul(fine), src);
}

CycObj restrict_tower(const CycObj& x, const std::vector<Subspace>& s) {
  CycObj r;
  r.f = x.f;
  r.mult = x.mult;
  r.top = x.top;
  r.dims.resize(x.top + 1);
  r.face.resize(x.top + 1);
  r.degen.resize(x.top + 1);
  r.tau.resize(x.top + 1);
  for (int n = 0; n <= x.top; ++n) {
    r.dims[n] = s[n].dim();
    r.tau[n] = restrict_map(x.tau[n], s[n], s[n]);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        r.face[n].push_back(restrict_map(x.face[n][i], s[n], s[n - 1]));
    if (n < x.top)
      for (int i = 0; i <= n; ++i)
        r.degen[n].push_back(restrict_map(x.degen[n][i], s[n], s[n + 1]));
  }
  verify_cyclic_relations(r);
  return r;
}

CycObj quotient_tower(const CycObj& x, const std::vector<Subspace>& s,
                      std::vector<QuotientPresentation>& pres_out) {
  pres_out.clear();
  for (int n = 0; n <= x.top; ++n)
    pres_out.push_back(quotient_presentation(x.dims[n], s[n]));
  CycObj r;
  r.f = x.f;
  r.mult = x.mult;
  r.top = x.top;
  r.dims.resize(x.top + 1);
  r.face.resize(x.top + 1);
  r.degen.resize(x.top + 1);
  r.tau.resize(x.top + 1);
  for (int n = 0; n <= x.top; ++n) {
    r.dims[n] = pres_out[n].projection.rows;
    r.tau[n] = descend(pres_out[n], pres_out[n], x.tau[n]);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        r.face[n].push_back(descend(pres_out[n - 1], pres_out[n], x.face[n][i]));
    if (n < x.top)
      for (int i = 0; i <= n; ++i)
        r.degen[n].push_back(descend(pres_out[n + 1], pres_out[n], x.degen[n][i]));
  }
  verify_cyclic_relations(r);
  return r;
}

}  // namespace

PushedTower push_tower(CycObj fine) {
  require(fine.mult >= 2, "pushing forward needs multiplicity at least two");
  PushedTower pt;
  pt.fine = std::move(fine);
  const CycObj& fn = pt.fine;
  for (int n = 0; n <= fn.top; ++n) {
    pt.sigma.push_back(fn.sigma(n));
    pt.pres.push_back(coinvariants_of(pt.sigma[n]));
  }
  pt.x.f = fn.f;
  pt.x.mult = 1;
  pt.x.top = fn.top;
  pt.x.dims.resize(fn.top + 1);
  pt.x.face.resize(fn.top + 1);
  pt.x.degen.resize(fn.top + 1);
  pt.x.tau.resize(fn.top + 1);
  for (int n = 0; n <= fn.top; ++n) {
    pt.x.dims[n] = pt.pres[n].projection.rows;
    pt.x.tau[n] = descend(pt.pres[n], pt.pres[n], fn.tau[n]);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        pt.x.face[n].push_back(descend(pt.pres[n - 1], pt.pres[n], fn.face[n][i]));
    if (n < fn.top)
      for (int i = 0; i <= n; ++i)
        pt.x.degen[n].push_back(descend(pt.pres[n + 1], pt.pres[n], fn.degen[n][i]));
  }
  verify_cyclic_relations(pt.x);
  return pt;
}

InvariantTower invariant_tower(const PushedTower& pt) {
  const CycObj& fn = pt.fine;
  InvariantTower it;
  for (int n = 0; n <= fn.top; ++n) it.inv.push_back(invariants_of(pt.sigma[n]));
  it.x.f = fn.f;
  it.x.mult = 1;
  it.x.top = fn.top;
  it.x.dims.resize(fn.top + 1);
  it.x.face.resize(fn.top + 1);
  it.x.degen.resize(fn.top + 1);
  it.x.tau.resize(fn.top + 1);
  for (int n = 0; n <= fn.top; ++n) {
    it.x.dims[n] = it.inv[n].dim();
    it.x.tau[n] = restrict_map(fn.tau[n], it.inv[n], it.inv[n]);
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        it.x.face[n].push_back(restrict_map(fn.face[n][i], it.inv[n], it.inv[n - 1]));
    if (n < fn.top)
      for (int i = 0; i <= n; ++i)
        it.x.degen[n].push_back(restrict_map(fn.degen[n][i], it.inv[n], it.inv[n + 1]));
  }
  verify_cyclic_relations(it.x);
  return it;
}

TraceTower trace_tower(const PushedTower& pt, const InvariantTower& it) {
  TraceTower t;
  const Fp f = pt.fine.f;
  for (int n = 0; n <= pt.fine.top; ++n) {
    SMat nrm = power_sum(pt.sigma[n], pt.fine.mult);
    t.tr.push_back(restrict_map(nrm.mul(pt.pres[n].section),
                                full_space(pt.x.dims[n], f), it.inv[n]));
    t.e.push_back(pt.pres[n].projection.mul(it.inv[n].basis));
    require(t.tr[n].mul(t.e[n]).is_zero(), "trace round trip must vanish");
    require(t.e[n].mul(t.tr[n]).is_zero(), "include-project round trip must vanish");
  }
  return t;
}

bool tight_level(const TraceTower& t, int n) {
  const SMat& tr = t.tr[n];
  QuotientPresentation ck = quotient_presentation(tr.cols, image_basis(tr));
  // e kills im(tr), so it descends to the cokernel, and lands in ker(tr)
  Subspace kt = kernel_basis(tr);
  SMat m = restrict_map(t.e[n].mul(ck.section),
                        full_space(ck.projection.rows, tr.f), kt);
  return ck.projection.rows == kt.dim() && rank(m) == kt.dim();
}

KpComplex build_kp(const CycGen& eg, int top) {
  const uint32_t p = eg.mult();
  if (p == 2)
    throw std::invalid_argument(
        "multiplicity two is rejected: the construction needs an odd prime");
  require(is_prime(p) && p >= 3, "multiplicity must be an odd prime");
  require(top >= 3, "need levels through at least three");

  KTower kt = k_tower(eg, top);
  KpComplex kp;
  kp.p = p;
  kp.top = top;
  kp.e = push_tower(std::move(kt.e));
  kp.k0 = push_tower(std::move(kt.k0));
  kp.k1 = push_tower(std::move(kt.k1));
  kp.einv = invariant_tower(kp.e);
  kp.k0inv = invariant_tower(kp.k0);
  kp.k1inv = invariant_tower(kp.k1);
  kp.etr = trace_tower(kp.e, kp.einv);
  kp.k0tr = trace_tower(kp.k0, kp.k0inv);
  kp.k1tr = trace_tower(kp.k1, kp.k1inv);

  for (int n = 0; n <= top; ++n) {
    // the cell levels are free over the rotation, so their traces invert
    require(kp.k0tr.tr[n].rows == kp.k0.x.dims[n] &&
                rank(kp.k0tr.tr[n]) == kp.k0.x.dims[n],
            "trace on the vertex tower must invert");
    require(kp.k1tr.tr[n].rows == kp.k1.x.dims[n] &&
                rank(kp.k1tr.tr[n]) == kp.k1.x.dims[n],
            "trace on the edge tower must invert");
  }

  for (int n = 0; n <= top; ++n) {
    kp.del.level.push_back(
        descend(kp.k0.pres[n], kp.k1.pres[n], kt.del.level[n]));
    kp.kap0.level.push_back(
        descend(kp.e.pres[n], kp.k0.pres[n], kt.collapse.level[n]));
    SMat bfine = kt.edge_span.level[n].mul(kt.collapse.level[n]);
    kp.bt.level.push_back(descend(kp.k1.pres[n], kp.k0.pres[n], bfine));
    kp.kap1inv.push_back(
        restrict_map(kt.edge_span.level[n], kp.einv.inv[n], kp.k1inv.inv[n]));
    // the raising map must agree with its factorization through the trace
    // identifications on both ends
    SMat via_tr = solve_many(
        kp.k1tr.tr[n],
        kp.kap1inv[n].mul(kp.etr.tr[n]).mul(kp.kap0.level[n]));
    require(via_tr == kp.bt.level[n],
            "raising map disagrees with its trace factorization");
    kp.nu.push_back(solve_many(kp.k1tr.tr[n], kp.kap1inv[n]));
  }
  verify_cyclic_map(kp.k1.x, kp.k0.x, kp.del);
  verify_cyclic_map(kp.k0.x, kp.k1.x, kp.bt);
  verify_cyclic_map(kp.k0.x, kp.e.x, kp.kap0);

  for (int n = 0; n <= top; ++n) {
    require(kp.del.level[n].mul(kp.bt.level[n]).is_zero(),
            "boundary after raising must vanish");
    require(kp.bt.level[n].mul(kp.del.level[n]).is_zero(),
            "raising after boundary must vanish");
    // degree-zero homology is the coefficient level, presented by collapse
    require(kp.kap0.level[n].mul(kp.del.level[n]).is_zero(),
            "collapse must kill boundaries");
    require(rank(kp.kap0.level[n]) == kp.e.x.dims[n],
            "collapse must surject onto the coefficients");
    uint32_t rk_del = rank(kp.del.level[n]);
    require(kp.k0.x.dims[n] - rk_del == kp.e.x.dims[n],
            "degree-zero homology must match the coefficients");
    // degree-one homology is the invariant level, embedded by the span
    require(kp.del.level[n].mul(kp.nu[n]).is_zero(),
            "span must land in degree-one cycles");
    require(rank(kp.nu[n]) == kp.nu[n].cols, "span into degree one must embed");
    require(kp.k1.x.dims[n] - rk_del == kp.einv.inv[n].dim(),
            "degree-one homology must match the invariants");
  }
  return kp;
}

KpComplex build_kp(const Algebra& a, uint32_t p, int top) {
  require(a.f.p == p, "multiplicity must match the field characteristic");
  return build_kp(NerveGen(a, p), top);
}

KpSub kp_subcomplexes(const KpComplex& kp) {
  KpSub s;
  const Fp f = kp.e.fine.f;
  for (int n = 0; n <= kp.top; ++n) {
    s.bsub.push_back(image_basis(kp.bt.level[n]));
    s.zsub.push_back(kernel_basis(kp.bt.level[n]));
  }
  s.bk1 = restrict_tower(kp.k1.x, s.bsub);
  s.zk0 = restrict_tower(kp.k0.x, s.zsub);
  s.q1 = quotient_tower(kp.k1.x, s.bsub, s.qpres);
  s.w0 = quotient_tower(kp.k0.x, s.zsub, s.wpres);
  for (int n = 0; n <= kp.top; ++n) {
    s.bk_in_k1.level.push_back(s.bsub[n].basis);
    s.zk_in_k0.level.push_back(s.zsub[n].basis);
    s.to_q1.level.push_back(s.qpres[n].projection);
    s.to_w0.level.push_back(s.wpres[n].projection);
    s.del_z.level.push_back(restrict_map(
        kp.del.level[n], full_space(kp.k1.x.dims[n], f), s.zsub[n]));
    s.bt_bk.level.push_back(restrict_map(
        kp.bt.level[n], full_space(kp.k0.x.dims[n], f), s.bsub[n]));
    // the boundary kills the raising image, so it factors through q1; the
    // raising map kills its own kernel, so it factors through w0
    s.del_q.level.push_back(through_quotient(s.del_z.level[n], s.qpres[n]));
    s.bt_w.level.push_back(through_quotient(s.bt_bk.level[n], s.wpres[n]));
    require(s.w0.dims[n] == s.bk1.dims[n] &&
                rank(s.bt_w.level[n]) == s.bk1.dims[n],
            "induced raising map must invert");
  }
  verify_cyclic_map(s.bk1, kp.k1.x, s.bk_in_k1);
  verify_cyclic_map(s.zk0, kp.k0.x, s.zk_in_k0);
  verify_cyclic_map(kp.k1.x, s.q1, s.to_q1);
  verify_cyclic_map(kp.k0.x, s.w0, s.to_w0);
  verify_cyclic_map(kp.k1.x, s.zk0, s.del_z);
  verify_cyclic_map(kp.k0.x, s.bk1, s.bt_bk);
  verify_cyclic_map(s.q1, s.zk0, s.del_q);
  verify_cyclic_map(s.w0, s.bk1, s.bt_w);
  return s;
}

PowerMaps power_maps(const Algebra& a, const KpComplex& kp) {
  const Fp f = a.f;
  const uint32_t p = kp.p;
  PowerMaps pm;
  pm.base = materialize(NerveGen(a), kp.top);
  for (int n = 0; n <= kp.top; ++n) {
    const uint32_t cnt = static_cast<uint32_t>(n + 1);
    SMat ps(kp.e.x.dims[n], pm.base.dims[n], f);
    for (uint32_t sidx = 0; sidx < pm.base.dims[n]; ++sidx) {
      std::vector<uint32_t> dig = unpack_digits(sidx, a.dim, cnt);
      std::vector<uint32_t> rep(p * cnt);
      for (uint32_t q = 0; q < p * cnt; ++q) rep[q] = dig[q % cnt];
      ps.col[sidx] =
          kp.e.pres[n].projection.col[static_cast<uint32_t>(pack_digits(rep, a.dim))];
    }
    pm.psi.level.push_back(std::move(ps));
    // read the p-fold diagonal off an invariant vector; orbit sums of
    // off-diagonal terms drop
    SMat ph(pm.base.dims[n], kp.einv.inv[n].dim(), f);
    for (uint32_t j = 0; j < kp.einv.inv[n].dim(); ++j) {
      SVec outc;
      for (const Term& t : kp.einv.inv[n].basis.col[j]) {
        std::vector<uint32_t> dig = unpack_digits(t.idx, a.dim, p * cnt);
        bool diag = true;
        for (uint32_t q = cnt; q < p * cnt && diag; ++q)
          diag = dig[q] == dig[q % cnt];
        if (diag) {
          dig.resize(cnt);
          outc = svec_axpy(f, outc, t.c,
                           svec_unit(static_cast<uint32_t>(pack_digits(dig, a.dim))));
        }
      }
      ph.col[j] = std::move(outc);
    }
    pm.psi_hat.push_back(std::move(ph));
  }
  verify_cyclic_map(pm.base, kp.e.x, pm.psi);
  for (int n = 0; n <= kp.top; ++n) {
    require(rank(pm.psi.level[n]) == pm.base.dims[n], "p-power map must embed");
    require(subspace_equal(image_basis(pm.psi.level[n]),
                           kernel_basis(kp.etr.tr[n])),
            "p-power image must be the trace kernel");
    require(pm.psi_hat[n].mul(kp.etr.tr[n]).is_zero(),
            "diagonal reader must kill traces");
    require(rank(pm.psi_hat[n]) == pm.base.dims[n],
            "diagonal reader must present the trace cokernel");
    require(pm.psi.level[n].mul(pm.psi_hat[n]) == kp.etr.e[n],
            "include-project must factor through the diagonal");
  }
  return pm;
}

SVec tensor_power_class(const KpComplex& kp, const Algebra& a, int n,
                        const SVec& v) {
  const Fp f = a.f;
  const uint32_t p = kp.p;
  const uint32_t cnt = static_cast<uint32_t>(n + 1);
  SVec out;
  if (v.empty()) return out;
  std::vector<size_t> pick(p, 0);
  while (true) {
    uint32_t c = 1;
    std::vector<uint32_t> dig(p * cnt);
    for (uint32_t slot = 0; slot < p; ++slot) {
      const Term& t = v[pick[slot]];
      c = f.mul(c, t.c);
      std::vector<uint32_t> d = unpack_digits(t.idx, a.dim, cnt);
      for (uint32_t q = 0; q < cnt; ++q) dig[slot * cnt + q] = d[q];
    }
    out = svec_axpy(
        f, out, c,
        kp.e.pres[n].projection.col[static_cast<uint32_t>(pack_digits(dig, a.dim))]);
    uint32_t slot = 0;
    while (slot < p && ++pick[slot] == v.size()) {
      pick[slot] = 0;
      ++slot;
    }
    if (slot == p) break;
  }
  return out;
}

CollapseIso collapse_isos(const KTower& base, const KpComplex& pulled) {
  CollapseIso ci;
  const Fp f = base.e.f;
  const uint32_t p = pulled.p;
  for (int n = 0; n <= pulled.top; ++n) {
    const uint32_t cells = static_cast<uint32_t>(n + 1);
    const uint32_t ed = base.e.dims[n];
    require(pulled.e.fine.dims[n] == ed,
            "pullback must keep the coefficient levels");
    // fold the p copies of each cell onto the single base copy
    SMat cf0(base.k0.dims[n], p * cells * ed, f);
    SMat cf1(base.k1.dims[n], p * cells * ed, f);
    for (uint32_t idx = 0; idx < p * cells * ed; ++idx) {
      uint32_t cell = idx / ed, q = idx % ed;
      cf0.col[idx] = svec_unit((cell % cells) * ed + q);
      cf1.col[idx] = svec_unit((cell % cells) * ed + q);
    }
    ci.from_pushed0.level.push_back(through_quotient(cf0, pulled.k0.pres[n]));
    ci.from_pushed1.level.push_back(through_quotient(cf1, pulled.k1.pres[n]));
    require(rank(ci.from_pushed0.level[n]) == base.k0.dims[n] &&
                ci.from_pushed0.level[n].cols == base.k0.dims[n],
            "coinvariant model must collapse bijectively");
    require(rank(ci.from_pushed1.level[n]) == base.k1.dims[n] &&
                ci.from_pushed1.level[n].cols == base.k1.dims[n],
            "coinvariant model must collapse bijectively");
    // the invariant model folds through the inverted trace, one orbit
    // representative per class
    SMat inv0 = ci.from_pushed0.level[n].mul(
        solve_many(pulled.k0tr.tr[n], SMat::identity(pulled.k0tr.tr[n].rows, f)));
    SMat inv1 = ci.from_pushed1.level[n].mul(
        solve_many(pulled.k1tr.tr[n], SMat::identity(pulled.k1tr.tr[n].rows, f)));
    require(rank(inv0) == base.k0.dims[n] && inv0.cols == base.k0.dims[n],
            "invariant model must collapse bijectively");
    require(rank(inv1) == base.k1.dims[n] && inv1.cols == base.k1.dims[n],
            "invariant model must collapse bijectively");
    ci.from_inv0.push_back(std::move(inv0));
    ci.from_inv1.push_back(std::move(inv1));
  }
  verify_cyclic_map(pulled.k0.x, base.k0, ci.from_pushed0);
  verify_cyclic_map(pulled.k1.x, base.k1, ci.from_pushed1);
  CyclicMapData i0{ci.from_inv0}, i1{ci.from_inv1};
  verify_cyclic_map(pulled.k0inv.x, base.k0, i0);
  verify_cyclic_map(pulled.k1inv.x, base.k1, i1);
  return ci;
}

}  // namespace carthom
