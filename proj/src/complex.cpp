#include "carthom/complex.hpp"

#include <algorithm>

namespace carthom {

void ChainComplex::validate() const {
  require(dims.size() == d.size(), "dims/d length mismatch");
  for (size_t i = 1; i < d.size(); ++i) {
    require(d[i].cols == dims[i], "differential col mismatch");
    require(d[i].rows == dims[i - 1], "differential row mismatch");
    if (i >= 2) require(d[i - 1].mul(d[i]).is_zero(), "d*d != 0");
  }
}

Homology::Homology(Fp f, uint32_t ambient, const SMat* d_out, const SMat* d_in)
    : f_(f), ambient_(ambient), cycles_(f, ambient), classes_(f, ambient, /*tracked=*/true) {
  std::vector<SVec> cycle_basis;
  if (d_out == nullptr || d_out->rows == 0 || d_out->cols == 0) {
    for (uint32_t i = 0; i < ambient; ++i) cycle_basis.push_back(svec_unit(i));
  } else {
    require(d_out->cols == ambient, "outgoing differential mismatch");
    Subspace k = kernel_basis(*d_out);
    cycle_basis = k.basis.col;
  }
  for (const auto& v : cycle_basis) cycles_.insert(v);
  if (d_in != nullptr && d_in->cols > 0) {
    require(d_in->rows == ambient, "incoming differential mismatch");
    for (const auto& c : d_in->col) {
      require(cycles_.contains(c), "boundary is not a cycle");
      classes_.insert_tagged(c, SVec{});
    }
  }
  for (const auto& v : cycle_basis) {
    SVec tag = svec_unit(static_cast<uint32_t>(reps_.size()));
    if (!classes_.insert_tagged(v, tag).has_value()) reps_.push_back(v);
  }
}

SVec Homology::express(const SVec& z) const {
  require(cycles_.contains(z), "not a cycle");
  auto coords = classes_.express(z);
  require(coords.has_value(), "cycle escaped class echelon");
  return *coords;
}

bool Homology::is_cycle(const SVec& z) const { return cycles_.contains(z); }

Homology homology_at(const ChainComplex& c, int i) {
  require(i >= 0 && i <= c.top(), "degree out of range");
  const SMat* dout = (i >= 1) ? &c.d[i] : nullptr;
  const SMat* din = (i + 1 <= c.top()) ? &c.d[i + 1] : nullptr;
  return Homology(c.f, c.dims[i], dout, din);
}

std::vector<uint32_t> homology_dims(const ChainComplex& c, int up_to) {
  std::vector<uint32_t> out;
  for (int i = 0; i <= up_to; ++i) out.push_back(homology_at(c, i).dim());
  return out;
}

void verify_chain_map(const ChainComplex& x, const ChainComplex& y, const ChainMapData& m,
                      int up_to) {
  require(static_cast<int>(m.level.size()) > up_to, "chain map too short");
  for (int i = 0; i <= up_to; ++i) {
    require(m.level[i].cols == x.dims[i] && m.level[i].rows == y.dims[i],
            "chain map level shape mismatch");
    if (i >= 1) {
      require(y.d[i].mul(m.level[i]) == m.level[i - 1].mul(x.d[i]),
              "does not commute with differentials");
    }
  }
}

SMat induced_on_homology(const Homology& hx, const Homology& hy, const SMat& level_map) {
  SMat out(hy.dim(), hx.dim(), level_map.f);
  for (uint32_t k = 0; k < hx.dim(); ++k)
    out.col[k] = hy.express(level_map.apply(hx.reps()[k]));
  return out;
}

bool quasi_iso(const ChainComplex& x, const ChainComplex& y, const ChainMapData& m, int up_to) {
  verify_chain_map(x, y, m, std::min(up_to + 1, std::min(x.top(), y.top())));
  for (int i = 0; i <= up_to; ++i) {
    Homology hx = homology_at(x, i), hy = homology_at(y, i);
    if (hx.dim() != hy.dim()) return false;
    if (rank(induced_on_homology(hx, hy, m.level[i])) != hx.dim()) return false;
  }
  return true;
}

void SesOfComplexes::validate(int up_to) const {
  verify_chain_map(*a, *b, incl, up_to);
  verify_chain_map(*b, *c, proj, up_to);
  for (int i = 0; i <= up_to; ++i) {
    require(rank(incl.level[i]) == a->dims[i], "inclusion not injective");
    require(rank(proj.level[i]) == c->dims[i], "projection not surjective");
    require(proj.level[i].mul(incl.level[i]).is_zero(), "proj*incl != 0");
    require(rank(incl.level[i]) + rank(proj.level[i]) == b->dims[i],
            "not exact in the middle");
  }
}

SMat connecting_map(const SesOfComplexes& s, int n, const Homology& hc_n,
                    const Homology& ha_nm1) {
  Fp f = s.b->f;
  SMat out(ha_nm1.dim(), hc_n.dim(), f);
  if (n == 0) return out;  // target degree -1 is zero
  for (uint32_t k = 0; k < hc_n.dim(); ++k) {
    auto lift = solve(s.proj.level[n], hc_n.reps()[k]);
    require(lift.has_value(), "projection lift failed");
    SVec w = s.b->d[n].apply(*lift);
    auto back = solve(s.incl.level[n - 1], w);
    require(back.has_value(), "snake pullback failed");
    out.col[k] = ha_nm1.express(*back);
  }
  return out;
}

bool exact_at(const SMat& f, const SMat& g) {
  if (!g.mul(f).is_zero()) return false;
  return rank(f) + rank(g) == f.rows;
}

bool les_exact(const SesOfComplexes& s, int d_max) {
  require(s.a->top() >= d_max + 1 && s.b->top() >= d_max + 1 && s.c->top() >= d_max + 1,
          "complexes too short for les through d_max");
  s.validate(d_max + 1);
  std::vector<Homology> ha, hb, hc;
  for (int i = 0; i <= d_max; ++i) {
    ha.push_back(homology_at(*s.a, i));
    hb.push_back(homology_at(*s.b, i));
    hc.push_back(homology_at(*s.c, i));
  }
  std::vector<SMat> fi, fp, fd;  // i_*, p_*, connecting
  for (int i = 0; i <= d_max; ++i) {
    fi.push_back(induced_on_homology(ha[i], hb[i], s.incl.level[i]));
    fp.push_back(induced_on_homology(hb[i], hc[i], s.proj.level[i]));
    fd.push_back(i >= 1 ? connecting_map(s, i, hc[i], ha[i - 1])
                        : SMat(0, hc[0].dim(), s.b->f));
  }
  for (int n = 0; n <= d_max; ++n) {
    // at H_n(B): incoming i_*, outgoing p_*
    if (!exact_at(fi[n], fp[n])) return false;
    // at H_n(C): incoming p_*, outgoing connecting (to degree n-1, or 0)
    SMat down = (n >= 1) ? fd[n] : SMat(0, hc[0].dim(), s.b->f);
    if (!exact_at(fp[n], down)) return false;
    // at H_n(A): incoming connecting from H_{n+1}(C) (available for n < d_max)
    if (n + 1 <= d_max) {
      if (!exact_at(fd[n + 1], fi[n])) return false;
    }
  }
  return true;
}

}  // namespace carthom
