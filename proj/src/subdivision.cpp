#include "carthom/subdivision.hpp"

#include "carthom/complex.hpp"

namespace carthom {

ChainComplex face_complex(const CycObj& x) {
  ChainComplex c;
  c.f = x.f;
  c.dims = x.dims;
  c.d.resize(x.top + 1);
  c.d[0] = SMat::zero(0, x.dims[0], x.f);
  for (int n = 1; n <= x.top; ++n) {
    SMat b = x.face[n][0];
    for (uint32_t i = 1; i < x.face[n].size(); ++i)
      b = b.add(x.face[n][i], i % 2 ? x.f.p - 1 : 1);
    c.d[n] = std::move(b);
  }
  c.validate();
  return c;
}

SubdivisionPush subdivision_push(const Algebra& a, uint32_t p, int top) {
  require(p >= 1, "block count must be positive");
  SubdivisionPush s;
  s.p = p;
  const Fp f = a.f;
  for (int n = 0; n <= top; ++n) {
    const uint32_t fine = p * static_cast<uint32_t>(n + 1);
    const uint32_t lead = static_cast<uint32_t>(n + 1) * (p - 1) + 1;
    uint64_t src_dim = 1, dst_dim = 1;
    for (uint32_t k = 0; k < fine; ++k) src_dim *= a.dim;
    for (uint32_t k = 0; k < static_cast<uint32_t>(n) + 1; ++k) dst_dim *= a.dim;
    require(src_dim <= (1u << 27), "fine level too large to materialize");
    SMat m(static_cast<uint32_t>(dst_dim), static_cast<uint32_t>(src_dim), f);
    for (uint64_t idx = 0; idx < src_dim; ++idx) {
      std::vector<uint32_t> dg = unpack_digits(idx, a.dim, fine);
      SVec acc = svec_unit(dg[0]);
      for (uint32_t k = 1; k < lead; ++k) acc = a.mul(acc, svec_unit(dg[k]));
      uint64_t tail = 0, place = a.dim;
      for (uint32_t t = 1; t <= static_cast<uint32_t>(n); ++t) {
        tail += static_cast<uint64_t>(dg[lead - 1 + t]) * place;
        place *= a.dim;
      }
      SVec colv;
      for (const Term& t : acc)
        colv = svec_axpy(f, colv, t.c, svec_unit(static_cast<uint32_t>(t.idx + tail)));
      m.set_col(static_cast<uint32_t>(idx), std::move(colv));
    }
    s.level.push_back(std::move(m));
  }
  return s;
}

void verify_subdivision_chain_map(const Algebra& a, const SubdivisionPush& s, int up_to) {
  CycObj fine = materialize(NerveGen(a, s.p), up_to);
  CycObj plain = materialize(NerveGen(a), up_to);
  ChainComplex bf = face_complex(fine);
  ChainComplex bp = face_complex(plain);
  for (int n = 1; n <= up_to; ++n)
    require(bp.d[n].mul(s.level[n]) == s.level[n - 1].mul(bf.d[n]),
            "push does not commute with the face sums");
}

bool subdivision_homology_iso(const Algebra& a, uint32_t p, int d_max) {
  int top = d_max + 1;
  SubdivisionPush s = subdivision_push(a, p, top);
  CycObj fine = materialize(NerveGen(a, p), top);
  CycObj plain = materialize(NerveGen(a), top);
  ChainComplex bf = face_complex(fine);
  ChainComplex bp = face_complex(plain);
  ChainMapData m;
  m.level = s.level;
  verify_chain_map(bf, bp, m, top);
  return quasi_iso(bf, bp, m, d_max);
}

}  // namespace carthom
