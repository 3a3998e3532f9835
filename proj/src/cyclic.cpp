#include "carthom/cyclic.hpp"

namespace carthom {

std::vector<uint32_t> unpack_digits(uint64_t idx, uint32_t base, uint32_t count) {
  std::vector<uint32_t> d(count);
  for (uint32_t k = 0; k < count; ++k) {
    d[k] = static_cast<uint32_t>(idx % base);
    idx /= base;
  }
  require(idx == 0, "index out of range for digit count");
  return d;
}

uint64_t pack_digits(const std::vector<uint32_t>& digits, uint32_t base) {
  uint64_t idx = 0;
  for (size_t k = digits.size(); k-- > 0;) {
    idx = idx * base + digits[k];
    require(digits[k] < base, "digit out of range");
  }
  return idx;
}

uint64_t ObjGen::level_dim(int n) const {
  require(n >= 0 && n <= x_->top, "level beyond the wrapped tower");
  return x_->dims[n];
}

CycObj zero_tower(Fp f, int top) {
  require(top >= 0, "need top >= 0");
  CycObj z;
  z.f = f;
  z.mult = 1;
  z.top = top;
  z.dims.assign(top + 1, 0);
  z.face.resize(top + 1);
  z.degen.resize(top + 1);
  z.tau.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n >= 1) z.face[n].assign(n + 1, SMat(0, 0, f));
    if (n < top) z.degen[n].assign(n + 1, SMat(0, 0, f));
    z.tau[n] = SMat(0, 0, f);
  }
  return z;
}

SVec CycGen::apply_face(int n, int i, const SVec& v) const {
  Fp f = field();
  SVec out;
  for (const Term& t : v) out = svec_axpy(f, out, t.c, face(n, i, t.idx));
  return out;
}

SVec CycGen::apply_degen(int n, int i, const SVec& v) const {
  Fp f = field();
  SVec out;
  for (const Term& t : v) out = svec_axpy(f, out, t.c, degen(n, i, t.idx));
  return out;
}

SVec CycGen::apply_tau(int n, const SVec& v) const {
  Fp f = field();
  SVec out;
  for (const Term& t : v) out = svec_axpy(f, out, t.c, tau(n, t.idx));
  return out;
}

SMat CycObj::sigma(int n) const {
  SMat s = SMat::identity(dims[n], f);
  for (int k = 0; k <= n; ++k) s = tau[n].mul(s);
  return s;
}

CycObj materialize(const CycGen& g, int top) {
  require(top >= 0, "need top >= 0");
  CycObj o;
  o.f = g.field();
  o.mult = g.mult();
  o.top = top;
  o.dims.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    uint64_t d = g.level_dim(n);
    if (d > (1ull << 27))
      throw truncation_error("level too large to materialize: " + std::to_string(d));
    o.dims[n] = static_cast<uint32_t>(d);
  }
  o.face.resize(top + 1);
  o.degen.resize(top + 1);
  o.tau.resize(top + 1);
  for (int n = 0; n <= top; ++n) {
    if (n >= 1) {
      o.face[n].assign(n + 1, SMat(o.dims[n - 1], o.dims[n], o.f));
      for (int i = 0; i <= n; ++i)
        for (uint32_t idx = 0; idx < o.dims[n]; ++idx)
          o.face[n][i].col[idx] = g.face(n, i, idx);
    }
    if (n < top) {
      o.degen[n].assign(n + 1, SMat(o.dims[n + 1], o.dims[n], o.f));
      for (int i = 0; i <= n; ++i)
        for (uint32_t idx = 0; idx < o.dims[n]; ++idx)
          o.degen[n][i].col[idx] = g.degen(n, i, idx);
    }
    o.tau[n] = SMat(o.dims[n], o.dims[n], o.f);
    for (uint32_t idx = 0; idx < o.dims[n]; ++idx) o.tau[n].col[idx] = g.tau(n, idx);
  }
  return o;
}

void verify_cyclic_relations(const CycObj& x) {
  const int top = x.top;
  auto fail = [](const std::string& what, int n, int i, int j) {
    throw invariant_violation(what + " fails at level " + std::to_string(n) + " (i=" +
                              std::to_string(i) + ", j=" + std::to_string(j) + ")");
  };
  for (int n = 2; n <= top; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (!(x.face[n - 1][i].mul(x.face[n][j]) == x.face[n - 1][j - 1].mul(x.face[n][i])))
          fail("d_i d_j = d_(j-1) d_i", n, i, j);
  for (int n = 0; n + 2 <= top; ++n)
    for (int i = 0; i <= n; ++i)
      for (int j = i; j <= n; ++j)
        if (!(x.degen[n + 1][i].mul(x.degen[n][j]) == x.degen[n + 1][j + 1].mul(x.degen[n][i])))
          fail("s_i s_j = s_(j+1) s_i", n, i, j);
  for (int n = 0; n + 1 <= top; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        SMat lhs = x.face[n + 1][i].mul(x.degen[n][j]);
        if (i == j || i == j + 1) {
          if (!(lhs == SMat::identity(x.dims[n], x.f))) fail("d_i s_j = id", n, i, j);
        } else if (i < j) {
          if (n < 1) continue;
          if (!(lhs == x.degen[n - 1][j - 1].mul(x.face[n][i])))
            fail("d_i s_j = s_(j-1) d_i", n, i, j);
        } else {
          if (n < 1) continue;
          if (!(lhs == x.degen[n - 1][j].mul(x.face[n][i - 1])))
            fail("d_i s_j = s_j d_(i-1)", n, i, j);
        }
      }
  for (int n = 1; n <= top; ++n) {
    for (int i = 1; i <= n; ++i)
      if (!(x.face[n][i].mul(x.tau[n]) == x.tau[n - 1].mul(x.face[n][i - 1])))
        fail("d_i tau = tau d_(i-1)", n, i, -1);
    if (!(x.face[n][0].mul(x.tau[n]) == x.face[n][n])) fail("d_0 tau = d_n", n, 0, -1);
  }
  for (int n = 0; n + 1 <= top; ++n) {
    for (int i = 1; i <= n; ++i)
      if (!(x.degen[n][i].mul(x.tau[n]) == x.tau[n + 1].mul(x.degen[n][i - 1])))
        fail("s_i tau = tau s_(i-1)", n, i, -1);
    if (!(x.degen[n][0].mul(x.tau[n]) == x.tau[n + 1].mul(x.tau[n + 1]).mul(x.degen[n][n])))
      fail("s_0 tau = tau^2 s_n", n, 0, -1);
  }
  for (int n = 0; n <= top; ++n) {
    SMat pw = SMat::identity(x.dims[n], x.f);
    uint32_t ord = x.mult * static_cast<uint32_t>(n + 1);
    for (uint32_t k = 0; k < ord; ++k) pw = x.tau[n].mul(pw);
    if (!(pw == SMat::identity(x.dims[n], x.f))) fail("tau order", n, -1, -1);
  }
  for (int n = 0; n <= top; ++n) {
    SMat sn = x.sigma(n);
    if (n >= 1) {
      SMat sm = x.sigma(n - 1);
      for (int i = 0; i <= n; ++i)
        if (!(x.face[n][i].mul(sn) == sm.mul(x.face[n][i]))) fail("sigma central (faces)", n, i, -1);
    }
    if (n + 1 <= top) {
      SMat sp = x.sigma(n + 1);
      for (int i = 0; i <= n; ++i)
        if (!(x.degen[n][i].mul(sn) == sp.mul(x.degen[n][i])))
          fail("sigma central (degeneracies)", n, i, -1);
    }
  }
}

NerveGen::NerveGen(Algebra a, uint32_t p) : a_(std::move(a)), p_(p) {
  require(p_ >= 1, "multiplicity must be positive");
  require(a_.dim >= 1, "empty algebra");
}

uint64_t NerveGen::level_dim(int n) const {
  uint64_t d = 1;
  for (uint32_t k = 0; k < p_ * static_cast<uint32_t>(n + 1); ++k) {
    require(d <= (1ull << 62) / a_.dim, "level dimension overflow");
    d *= a_.dim;
  }
  return d;
}

namespace {

struct Weighted {
  std::vector<uint32_t> digits;
  uint32_t c;
};

}  // namespace

SVec NerveGen::face(int n, int i, uint32_t idx) const {
  const uint32_t factors = p_ * static_cast<uint32_t>(n + 1);
  std::vector<Weighted> cur = {{unpack_digits(idx, a_.dim, factors), 1}};
  uint32_t m = factors;
  for (int k = static_cast<int>(p_) - 1; k >= 0; --k) {
    uint32_t pos = static_cast<uint32_t>(i) + static_cast<uint32_t>(k) * (n + 1);
    std::vector<Weighted> next;
    for (const Weighted& w : cur) {
      if (pos + 1 < m) {
        const SVec& prod = a_.mul_basis(w.digits[pos], w.digits[pos + 1]);
        for (const Term& t : prod) {
          Weighted nw;
          nw.digits.reserve(m - 1);
          nw.digits.assign(w.digits.begin(), w.digits.begin() + pos);
          nw.digits.push_back(t.idx);
          nw.digits.insert(nw.digits.end(), w.digits.begin() + pos + 2, w.digits.end());
          nw.c = a_.f.mul(w.c, t.c);
          next.push_back(std::move(nw));
        }
      } else {
        // wrap face: the last factor multiplies onto the first from the left
        const SVec& prod = a_.mul_basis(w.digits[m - 1], w.digits[0]);
        for (const Term& t : prod) {
          Weighted nw;
          nw.digits.reserve(m - 1);
          nw.digits.push_back(t.idx);
          nw.digits.insert(nw.digits.end(), w.digits.begin() + 1, w.digits.end() - 1);
          nw.c = a_.f.mul(w.c, t.c);
          next.push_back(std::move(nw));
        }
      }
    }
    cur = std::move(next);
    --m;
  }
  SVec out;
  for (const Weighted& w : cur)
    out.push_back(Term{static_cast<uint32_t>(pack_digits(w.digits, a_.dim)), w.c});
  return svec_canon(a_.f, std::move(out));
}

SVec NerveGen::degen(int n, int i, uint32_t idx) const {
  const uint32_t factors = p_ * static_cast<uint32_t>(n + 1);
  std::vector<Weighted> cur = {{unpack_digits(idx, a_.dim, factors), 1}};
  for (int k = static_cast<int>(p_) - 1; k >= 0; --k) {
    uint32_t pos = static_cast<uint32_t>(i) + static_cast<uint32_t>(k) * (n + 1);
    std::vector<Weighted> next;
    for (const Weighted& w : cur) {
      for (const Term& t : a_.unit) {
        Weighted nw;
        nw.digits.reserve(w.digits.size() + 1);
        nw.digits.assign(w.digits.begin(), w.digits.begin() + pos + 1);
        nw.digits.push_back(t.idx);
        nw.digits.insert(nw.digits.end(), w.digits.begin() + pos + 1, w.digits.end());
        nw.c = a_.f.mul(w.c, t.c);
        next.push_back(std::move(nw));
      }
    }
    cur = std::move(next);
  }
  SVec out;
  for (const Weighted& w : cur)
    out.push_back(Term{static_cast<uint32_t>(pack_digits(w.digits, a_.dim)), w.c});
  return svec_canon(a_.f, std::move(out));
}

SVec NerveGen::tau(int n, uint32_t idx) const {
  const uint32_t factors = p_ * static_cast<uint32_t>(n + 1);
  uint64_t dpow = 1;
  for (uint32_t k = 0; k + 1 < factors; ++k) dpow *= a_.dim;
  uint64_t rot = (idx / dpow) + (idx % dpow) * a_.dim;
  return svec_unit(static_cast<uint32_t>(rot));
}

CellGen::CellGen(Fp f, uint32_t c, int cell_dim) : f_(f), c_(c), cell_dim_(cell_dim) {
  require(c_ >= 1, "multiplicity must be positive");
  require(cell_dim_ == 0 || cell_dim_ == 1, "cells are vertices or edges");
}

SVec CellGen::face(int n, int i, uint32_t idx) const {
  uint32_t m = c_ * static_cast<uint32_t>(n + 1);
  SVec cur = svec_unit(idx);
  for (int k = static_cast<int>(c_) - 1; k >= 0; --k) {
    uint32_t pos = static_cast<uint32_t>(i) + static_cast<uint32_t>(k) * (n + 1);
    SVec next;
    for (const Term& t : cur) {
      uint32_t q = t.idx;
      if (cell_dim_ == 0) {
        uint32_t img;
        if (pos + 1 < m) {
          img = q <= pos ? q : q - 1;  // v_pos and v_(pos+1) merge to v_pos
        } else {
          img = q == m - 1 ? 0 : q;  // wrap: last vertex merges into v_0
        }
        next = svec_axpy(f_, next, t.c, svec_unit(img));
      } else {
        if (q == pos) continue;  // the collapsed edge dies
        uint32_t img = q < pos ? q : q - 1;
        if (pos + 1 == m) img = q;  // wrap kills e_(m-1), others keep index
        next = svec_axpy(f_, next, t.c, svec_unit(img));
      }
    }
    cur = std::move(next);
    --m;
  }
  return cur;
}

SVec CellGen::degen(int n, int i, uint32_t idx) const {
  SVec cur = svec_unit(idx);
  for (int k = static_cast<int>(c_) - 1; k >= 0; --k) {
    uint32_t pos = static_cast<uint32_t>(i) + static_cast<uint32_t>(k) * (n + 1);
    SVec next;
    for (const Term& t : cur) {
      uint32_t q = t.idx;
      if (cell_dim_ == 0) {
        uint32_t img = q <= pos ? q : q + 1;
        next = svec_axpy(f_, next, t.c, svec_unit(img));
      } else {
        if (q == pos) {
          // the split edge becomes the sum of its two halves
          next = svec_axpy(f_, next, t.c, svec_unit(pos));
          next = svec_axpy(f_, next, t.c, svec_unit(pos + 1));
        } else {
          uint32_t img = q < pos ? q : q + 1;
          next = svec_axpy(f_, next, t.c, svec_unit(img));
        }
      }
    }
    cur = std::move(next);
  }
  return cur;
}

SVec CellGen::tau(int n, uint32_t idx) const {
  uint32_t m = c_ * static_cast<uint32_t>(n + 1);
  return svec_unit((idx + 1) % m);
}

DiagTensorGen::DiagTensorGen(const CycGen& a, const CycGen& b) : a_(&a), b_(&b) {
  require(a.field() == b.field(), "tensor factors over different fields");
  require(a.mult() == b.mult(), "tensor factors with different multiplicities");
}

SVec DiagTensorGen::combine(const SVec& av, const SVec& bv, uint64_t bdim) const {
  Fp f = field();
  SVec out;
  for (const Term& ta : av)
    for (const Term& tb : bv) {
      uint64_t idx = static_cast<uint64_t>(ta.idx) * bdim + tb.idx;
      require(idx < (1ull << 32), "tensor index overflow");
      out.push_back(Term{static_cast<uint32_t>(idx), f.mul(ta.c, tb.c)});
    }
  return svec_canon(f, std::move(out));
}

SVec DiagTensorGen::face(int n, int i, uint32_t idx) const {
  uint64_t bdim = b_->level_dim(n);
  uint32_t ia = static_cast<uint32_t>(idx / bdim), ib = static_cast<uint32_t>(idx % bdim);
  return combine(a_->face(n, i, ia), b_->face(n, i, ib), b_->level_dim(n - 1));
}

SVec DiagTensorGen::degen(int n, int i, uint32_t idx) const {
  uint64_t bdim = b_->level_dim(n);
  uint32_t ia = static_cast<uint32_t>(idx / bdim), ib = static_cast<uint32_t>(idx % bdim);
  return combine(a_->degen(n, i, ia), b_->degen(n, i, ib), b_->level_dim(n + 1));
}

SVec DiagTensorGen::tau(int n, uint32_t idx) const {
  uint64_t bdim = b_->level_dim(n);
  uint32_t ia = static_cast<uint32_t>(idx / bdim), ib = static_cast<uint32_t>(idx % bdim);
  return combine(a_->tau(n, ia), b_->tau(n, ib), bdim);
}

void verify_cyclic_map(const CycObj& x, const CycObj& y, const CyclicMapData& m) {
  require(x.top == y.top, "towers of different height");
  require(x.mult == y.mult, "multiplicity mismatch");
  require(m.level.size() == static_cast<size_t>(x.top) + 1, "map level count");
  for (int n = 0; n <= x.top; ++n) {
    require(m.level[n].cols == x.dims[n] && m.level[n].rows == y.dims[n],
            "map level shape mismatch");
    if (n >= 1)
      for (int i = 0; i <= n; ++i)
        require(m.level[n - 1].mul(x.face[n][i]) == y.face[n][i].mul(m.level[n]),
                "map does not commute with faces");
    if (n + 1 <= x.top)
      for (int i = 0; i <= n; ++i)
        require(m.level[n + 1].mul(x.degen[n][i]) == y.degen[n][i].mul(m.level[n]),
                "map does not commute with degeneracies");
    require(m.level[n].mul(x.tau[n]) == y.tau[n].mul(m.level[n]),
            "map does not commute with tau");
  }
}

Subspace invariants_of(const SMat& g) {
  require(g.rows == g.cols, "operator must be square");
  SMat shifted = g.add(SMat::identity(g.rows, g.f), g.f.p - 1);  // g - 1
  return kernel_basis(shifted);
}

QuotientPresentation coinvariants_of(const SMat& g) {
  require(g.rows == g.cols, "operator must be square");
  SMat shifted = g.add(SMat::identity(g.rows, g.f), g.f.p - 1);
  return quotient_presentation(g.rows, image_basis(shifted));
}

SMat power_sum(const SMat& g, uint32_t order) {
  require(g.rows == g.cols, "operator must be square");
  SMat acc = SMat::identity(g.rows, g.f);
  SMat pw = SMat::identity(g.rows, g.f);
  for (uint32_t k = 1; k < order; ++k) {
    pw = g.mul(pw);
    acc = acc.add(pw);
  }
  return acc;
}

}  // namespace carthom
