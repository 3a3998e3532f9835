#include "carthom/mixed.hpp"

namespace carthom {

namespace {

// sum of (-1)^(n*j) tau^j over j = 0..n: the signed rotation sum at level n
SMat signed_power_sum(const SMat& tau, int n, Fp f) {
  SMat acc = SMat::identity(tau.rows, f);
  SMat pw = SMat::identity(tau.rows, f);
  for (int j = 1; j <= n; ++j) {
    pw = tau.mul(pw);
    uint32_t sign = (n % 2 == 1 && j % 2 == 1) ? f.p - 1 : 1;
    acc = acc.add(pw, sign);
  }
  return acc;
}

}  // namespace

MixedComplex mixed_complex(const CycObj& x) {
  require(x.mult == 1, "mixed complex needs multiplicity 1");
  MixedComplex m;
  m.f = x.f;
  m.top = x.top;
  m.dims.resize(x.top + 1);
  m.proj.resize(x.top + 1);
  m.sect.resize(x.top + 1);
  m.b.resize(x.top + 1);
  m.bb.resize(x.top);
  for (int n = 0; n <= x.top; ++n) {
    std::vector<SVec> degenerate;
    if (n >= 1)
      for (int i = 0; i < n; ++i)
        for (const SVec& c : x.degen[n - 1][i].col) degenerate.push_back(c);
    Subspace sub = subspace_from_vectors(x.f, x.dims[n], degenerate);
    QuotientPresentation q = quotient_presentation(x.dims[n], sub);
    m.dims[n] = q.projection.rows;
    m.proj[n] = q.projection;
    m.sect[n] = q.section;
  }
  for (int n = 1; n <= x.top; ++n) {
    SMat bn(x.dims[n - 1], x.dims[n], x.f);
    for (int i = 0; i <= n; ++i) bn = bn.add(x.face[n][i], i % 2 ? x.f.p - 1 : 1);
    // well-definedness on the quotient: b applied to any degenerate vector
    // must die under the target projection
    SMat away = SMat::identity(x.dims[n], x.f).add(m.sect[n].mul(m.proj[n]), x.f.p - 1);
    require(m.proj[n - 1].mul(bn).mul(away).is_zero(), "b does not descend");
    m.b[n] = m.proj[n - 1].mul(bn).mul(m.sect[n]);
  }
  for (int n = 0; n < x.top; ++n) {
    // extra degeneracy tau . s_n followed by the signed rotation sum
    SMat big = x.tau[n + 1].mul(x.degen[n][n]).mul(signed_power_sum(x.tau[n], n, x.f));
    SMat away = SMat::identity(x.dims[n], x.f).add(m.sect[n].mul(m.proj[n]), x.f.p - 1);
    require(m.proj[n + 1].mul(big).mul(away).is_zero(), "B does not descend");
    m.bb[n] = m.proj[n + 1].mul(big).mul(m.sect[n]);
  }
  return m;
}

void verify_mixed_identities(const MixedComplex& m) {
  for (int n = 2; n <= m.top; ++n)
    require(m.b[n - 1].mul(m.b[n]).is_zero(), "b^2 != 0");
  for (int n = 0; n + 2 <= m.top; ++n)
    require(m.bb[n + 1].mul(m.bb[n]).is_zero(), "B^2 != 0");
  for (int n = 0; n + 1 <= m.top; ++n) {
    SMat anti = m.b[n + 1].mul(m.bb[n]);
    if (n >= 1) anti = anti.add(m.bb[n - 1].mul(m.b[n]));
    require(anti.is_zero(), "bB + Bb != 0");
  }
}

ChainComplex b_complex(const MixedComplex& m) {
  ChainComplex c;
  c.f = m.f;
  c.dims = m.dims;
  c.d.resize(m.top + 1);
  for (int n = 1; n <= m.top; ++n) c.d[n] = m.b[n];
  c.validate();
  return c;
}

HochschildData hochschild_data(const Algebra& a, int d_max) {
  require(d_max >= 0, "need d_max >= 0");
  HochschildData h;
  h.a = a;
  h.d_max = d_max;
  h.nerve = materialize(NerveGen(a), d_max + 1);
  h.mx = mixed_complex(h.nerve);
  verify_mixed_identities(h.mx);
  h.c = b_complex(h.mx);
  for (int n = 0; n <= d_max; ++n) h.hh.push_back(homology_at(h.c, n));
  return h;
}

std::vector<uint32_t> hochschild_dims(const HochschildData& h) {
  std::vector<uint32_t> out;
  for (const Homology& x : h.hh) out.push_back(x.dim());
  return out;
}

SMat induced_b_operator(const HochschildData& h, int n) {
  require(n >= 0 && n < h.d_max, "degree out of range for the raising operator");
  return induced_on_homology(h.hh[n], h.hh[n + 1], h.mx.bb[n]);
}

SVec shuffle_unnorm(const Algebra& a, int i, const SVec& x, int j, const SVec& y) {
  Fp f = a.f;
  const uint32_t n = static_cast<uint32_t>(i + j);
  SVec out;
  // subsets of {1..n} of size i, as sorted position lists
  std::vector<uint32_t> sel(i);
  for (int k = 0; k < i; ++k) sel[k] = k + 1;
  auto advance = [&]() {
    int k = i - 1;
    while (k >= 0 && sel[k] == n - (i - 1 - k)) --k;
    if (k < 0) return false;
    ++sel[k];
    for (int l = k + 1; l < i; ++l) sel[l] = sel[l - 1] + 1;
    return true;
  };
  bool more = true;
  do {
    uint32_t inversions = 0;
    for (int k = 0; k < i; ++k) inversions += sel[k] - (k + 1);
    uint32_t sign = inversions % 2 ? f.p - 1 : 1;
    for (const Term& tx : x)
      for (const Term& ty : y) {
        auto gx = unpack_digits(tx.idx, a.dim, i + 1);
        auto gy = unpack_digits(ty.idx, a.dim, j + 1);
        const SVec& head = a.mul_basis(gx[0], gy[0]);
        std::vector<uint32_t> digits(n + 1, 0);
        std::vector<bool> is_a(n + 1, false);
        for (int k = 0; k < i; ++k) {
          digits[sel[k]] = gx[k + 1];
          is_a[sel[k]] = true;
        }
        uint32_t bpos = 1;
        for (uint32_t q = 1; q <= n; ++q)
          if (!is_a[q]) digits[q] = gy[bpos++];
        for (const Term& th : head) {
          digits[0] = th.idx;
          uint64_t idx = pack_digits(digits, a.dim);
          uint32_t c = f.mul(f.mul(tx.c, ty.c), f.mul(th.c, sign));
          out.push_back(Term{static_cast<uint32_t>(idx), c});
        }
      }
    more = i > 0 && advance();
  } while (more);
  return svec_canon(f, std::move(out));
}

SVec shuffle_classes(const HochschildData& h, int i, const SVec& cx, int j, const SVec& cy) {
  require(h.a.is_commutative(), "shuffle product needs a commutative algebra");
  require(i >= 0 && j >= 0 && i + j <= h.d_max, "degrees out of range");
  Fp f = h.a.f;
  // lift class coordinates to normalized cycle representatives, then to the
  // full nerve
  auto lift = [&](int deg, const SVec& coords) {
    SVec z;
    for (const Term& t : coords) z = svec_axpy(f, z, t.c, h.hh[deg].reps()[t.idx]);
    return h.mx.sect[deg].apply(z);
  };
  SVec prod = shuffle_unnorm(h.a, i, lift(i, cx), j, lift(j, cy));
  return h.hh[i + j].express(h.mx.proj[i + j].apply(prod));
}

}  // namespace carthom
