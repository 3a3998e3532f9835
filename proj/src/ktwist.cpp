#include "carthom/ktwist.hpp"

#include "carthom/complex.hpp"

namespace carthom {

KTower k_tower(const CycGen& eg, int top) {
  KTower kt;
  kt.e = materialize(eg, top);
  const Fp f = kt.e.f;
  const uint32_t c = kt.e.mult;
  CellGen vg(f, c, 0);
  CellGen edg(f, c, 1);
  DiagTensorGen g0(vg, eg);
  DiagTensorGen g1(edg, eg);
  kt.k0 = materialize(g0, top);
  kt.k1 = materialize(g1, top);

  for (int n = 0; n <= top; ++n) {
    const uint32_t m = c * static_cast<uint32_t>(n + 1);
    const uint32_t ed = kt.e.dims[n];
    SMat del(m * ed, m * ed, f);
    SMat span(m * ed, ed, f);
    SMat coll(ed, m * ed, f);
    for (uint32_t j = 0; j < m; ++j) {
      const uint32_t jn = (j + 1) % m;
      for (uint32_t q = 0; q < ed; ++q) {
        SVec bd = svec_unit(jn * ed + q);
        bd = svec_axpy(f, bd, f.p - 1, svec_unit(j * ed + q));
        del.set_col(j * ed + q, std::move(bd));
        coll.set_col(j * ed + q, svec_unit(q));
      }
    }
    for (uint32_t q = 0; q < ed; ++q) {
      SVec s;
      for (uint32_t j = 0; j < m; ++j) s = svec_axpy(f, s, 1, svec_unit(j * ed + q));
      span.set_col(q, std::move(s));
    }
    kt.del.level.push_back(std::move(del));
    kt.edge_span.level.push_back(std::move(span));
    kt.collapse.level.push_back(std::move(coll));
  }
  verify_cyclic_map(kt.k1, kt.k0, kt.del);
  verify_cyclic_map(kt.e, kt.k1, kt.edge_span);
  verify_cyclic_map(kt.k0, kt.e, kt.collapse);
  return kt;
}

void verify_k_exactness(const KTower& k) {
  for (int n = 0; n <= k.e.top; ++n) {
    require(rank(k.edge_span.level[n]) == k.e.dims[n], "edge span not injective");
    require(rank(k.collapse.level[n]) == k.e.dims[n], "collapse not surjective");
    require(exact_at(k.edge_span.level[n], k.del.level[n]), "not exact at the edge level");
    require(exact_at(k.del.level[n], k.collapse.level[n]), "not exact at the vertex level");
  }
}

}  // namespace carthom
