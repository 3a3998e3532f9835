#include "carthom/algebra.hpp"

#include <sstream>

#include "carthom/common.hpp"

namespace carthom {

void FiniteMonoid::validate() const {
  require(size > 0, "empty monoid");
  require(table.size() == static_cast<size_t>(size) * size, "monoid table size");
  for (uint32_t v : table) require(v < size, "monoid table entry out of range");
  for (uint32_t a = 0; a < size; ++a) {
    require(mul(identity_index, a) == a && mul(a, identity_index) == a,
            "identity law fails");
    if (zero_index) {
      require(mul(*zero_index, a) == *zero_index && mul(a, *zero_index) == *zero_index,
              "absorbing element law fails");
    }
  }
  for (uint32_t a = 0; a < size; ++a)
    for (uint32_t b = 0; b < size; ++b)
      for (uint32_t c = 0; c < size; ++c)
        require(mul(mul(a, b), c) == mul(a, mul(b, c)), "monoid associativity fails");
}

bool FiniteMonoid::is_commutative() const {
  for (uint32_t a = 0; a < size; ++a)
    for (uint32_t b = a + 1; b < size; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

FiniteMonoid FiniteMonoid::cyclic_group(uint32_t r) {
  require(r > 0, "cyclic group order must be positive");
  FiniteMonoid g;
  g.size = r;
  g.identity_index = 0;
  g.table.resize(static_cast<size_t>(r) * r);
  g.labels.resize(r);
  for (uint32_t a = 0; a < r; ++a) {
    g.labels[a] = a == 0 ? "1" : (a == 1 ? "g" : "g^" + std::to_string(a));
    for (uint32_t b = 0; b < r; ++b) g.table[a * r + b] = (a + b) % r;
  }
  return g;
}

FiniteMonoid FiniteMonoid::truncated_pointed(uint32_t m) {
  require(m >= 1, "need m >= 1");
  FiniteMonoid g;
  g.size = m + 1;  // x^0..x^{m-1} plus absorbing 0 at index m
  g.identity_index = 0;
  g.zero_index = m;
  g.table.resize(static_cast<size_t>(g.size) * g.size);
  g.labels.resize(g.size);
  for (uint32_t a = 0; a <= m; ++a) {
    g.labels[a] = a == 0 ? "1" : (a == m ? "0" : (a == 1 ? "x" : "x^" + std::to_string(a)));
    for (uint32_t b = 0; b <= m; ++b) {
      uint32_t s = a + b;  // exponent sum; anything reaching m (or touching 0) dies
      g.table[a * g.size + b] = s >= m ? m : s;
    }
  }
  return g;
}

SVec Algebra::mul(const SVec& a, const SVec& b) const {
  SVec out;
  for (const Term& ta : a)
    for (const Term& tb : b)
      out = svec_axpy(f, out, f.mul(ta.c, tb.c), mul_basis(ta.idx, tb.idx));
  return out;
}

bool Algebra::is_monomial() const {
  for (const SVec& v : table)
    if (v.size() > 1) return false;
  return true;
}

bool Algebra::is_commutative() const {
  for (uint32_t i = 0; i < dim; ++i)
    for (uint32_t j = i + 1; j < dim; ++j)
      if (!svec_eq(mul_basis(i, j), mul_basis(j, i))) return false;
  return true;
}

uint64_t Algebra::content_hash() const {
  uint64_t h = fnv1a_u64(1469598103934665603ull, f.p);
  h = fnv1a_u64(h, dim);
  for (const Term& t : unit) {
    h = fnv1a_u64(h, t.idx);
    h = fnv1a_u64(h, t.c);
  }
  for (const SVec& v : table) {
    h = fnv1a_u64(h, 0xffffffffu);
    for (const Term& t : v) {
      h = fnv1a_u64(h, t.idx);
      h = fnv1a_u64(h, t.c);
    }
  }
  return h;
}

std::string Algebra::describe() const {
  std::ostringstream os;
  os << "F_" << f.p << "-algebra, dim " << dim << " {";
  for (uint32_t i = 0; i < dim; ++i) {
    if (i) os << ", ";
    os << (i < basis_labels.size() ? basis_labels[i] : "e" + std::to_string(i));
  }
  os << "}";
  return os.str();
}

Algebra field_algebra(uint32_t p) {
  Algebra a;
  a.f = Fp{p};
  a.dim = 1;
  a.basis_labels = {"1"};
  a.unit = svec_unit(0);
  a.table = {svec_unit(0)};
  return a;
}

Algebra truncated_polynomial(uint32_t m, uint32_t p) {
  require(m >= 1, "need m >= 1");
  Algebra a;
  a.f = Fp{p};
  a.dim = m;
  a.unit = svec_unit(0);
  a.basis_labels.resize(m);
  a.table.resize(static_cast<size_t>(m) * m);
  for (uint32_t i = 0; i < m; ++i) {
    a.basis_labels[i] = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    for (uint32_t j = 0; j < m; ++j)
      a.table[i * m + j] = (i + j < m) ? svec_unit(i + j) : SVec{};
  }
  return a;
}

Algebra matrix_algebra(uint32_t n, uint32_t p) {
  require(n >= 1, "need n >= 1");
  Algebra a;
  a.f = Fp{p};
  a.dim = n * n;
  a.basis_labels.resize(a.dim);
  a.table.resize(static_cast<size_t>(a.dim) * a.dim);
  // basis E_{rc} at index r*n + c; E_{rc} E_{c'd} = [c == c'] E_{rd}
  for (uint32_t r = 0; r < n; ++r)
    for (uint32_t c = 0; c < n; ++c) {
      uint32_t i = r * n + c;
      a.basis_labels[i] = "E" + std::to_string(r) + std::to_string(c);
      if (r == c) a.unit = svec_axpy(a.f, a.unit, 1, svec_unit(i));
      for (uint32_t c2 = 0; c2 < n; ++c2)
        for (uint32_t d = 0; d < n; ++d) {
          uint32_t j = c2 * n + d;
          a.table[static_cast<size_t>(i) * a.dim + j] =
              (c == c2) ? svec_unit(r * n + d) : SVec{};
        }
    }
  return a;
}

Algebra monoid_algebra(const FiniteMonoid& g, uint32_t p) {
  g.validate();
  Algebra a;
  a.f = Fp{p};
  // Pointed version: the absorbing element is identified with 0, so it is
  // dropped from the basis and products landing on it vanish.
  std::vector<uint32_t> keep;
  std::vector<int64_t> pos(g.size, -1);
  for (uint32_t i = 0; i < g.size; ++i) {
    if (g.zero_index && *g.zero_index == i) continue;
    pos[i] = static_cast<int64_t>(keep.size());
    keep.push_back(i);
  }
  a.dim = static_cast<uint32_t>(keep.size());
  require(a.dim > 0, "monoid algebra has empty basis");
  a.unit = svec_unit(static_cast<uint32_t>(pos[g.identity_index]));
  a.basis_labels.resize(a.dim);
  a.table.resize(static_cast<size_t>(a.dim) * a.dim);
  for (uint32_t i = 0; i < a.dim; ++i) {
    a.basis_labels[i] =
        keep[i] < g.labels.size() ? g.labels[keep[i]] : "m" + std::to_string(keep[i]);
    for (uint32_t j = 0; j < a.dim; ++j) {
      uint32_t prod = g.mul(keep[i], keep[j]);
      a.table[static_cast<size_t>(i) * a.dim + j] =
          pos[prod] < 0 ? SVec{} : svec_unit(static_cast<uint32_t>(pos[prod]));
    }
  }
  return a;
}

Algebra tensor_product(const Algebra& x, const Algebra& y) {
  require(x.f.p == y.f.p, "tensor factors over different fields");
  Algebra a;
  a.f = x.f;
  a.dim = x.dim * y.dim;
  a.basis_labels.resize(a.dim);
  a.table.resize(static_cast<size_t>(a.dim) * a.dim);
  // index (i, j) -> i + j*x.dim (first factor least significant)
  auto pack = [&](uint32_t i, uint32_t j) { return i + j * x.dim; };
  auto pack_vec = [&](const SVec& u, const SVec& v) {
    SVec out;
    for (const Term& tu : u)
      for (const Term& tv : v)
        out = svec_axpy(a.f, out, a.f.mul(tu.c, tv.c), svec_unit(pack(tu.idx, tv.idx)));
    return out;
  };
  a.unit = pack_vec(x.unit, y.unit);
  for (uint32_t i1 = 0; i1 < x.dim; ++i1)
    for (uint32_t j1 = 0; j1 < y.dim; ++j1)
      for (uint32_t i2 = 0; i2 < x.dim; ++i2)
        for (uint32_t j2 = 0; j2 < y.dim; ++j2)
          a.table[static_cast<size_t>(pack(i1, j1)) * a.dim + pack(i2, j2)] =
              pack_vec(x.mul_basis(i1, i2), y.mul_basis(j1, j2));
  for (uint32_t i = 0; i < x.dim; ++i)
    for (uint32_t j = 0; j < y.dim; ++j) {
      std::string li = i < x.basis_labels.size() ? x.basis_labels[i] : "e" + std::to_string(i);
      std::string lj = j < y.basis_labels.size() ? y.basis_labels[j] : "e" + std::to_string(j);
      a.basis_labels[pack(i, j)] = li + "*" + lj;
    }
  return a;
}

bool verify_axioms(const Algebra& a) {
  require(is_prime(a.f.p), "modulus must be prime");
  require(a.dim > 0 && a.table.size() == static_cast<size_t>(a.dim) * a.dim,
          "structure table size mismatch");
  for (const SVec& v : a.table)
    for (const Term& t : v)
      if (t.idx >= a.dim || t.c == 0 || t.c >= a.f.p) return false;
  for (uint32_t i = 0; i < a.dim; ++i) {
    if (!svec_eq(a.mul(a.unit, svec_unit(i)), svec_unit(i))) return false;
    if (!svec_eq(a.mul(svec_unit(i), a.unit), svec_unit(i))) return false;
  }
  for (uint32_t i = 0; i < a.dim; ++i)
    for (uint32_t j = 0; j < a.dim; ++j) {
      SVec ij = a.mul_basis(i, j);
      for (uint32_t k = 0; k < a.dim; ++k) {
        SVec lhs = a.mul(ij, svec_unit(k));
        SVec rhs = a.mul(svec_unit(i), a.mul_basis(j, k));
        if (!svec_eq(lhs, rhs)) return false;
      }
    }
  return true;
}

uint32_t hh0(const Algebra& a) {
  // degree-0 trace space: A / [A, A]
  Ech e(a.f, a.dim);
  for (uint32_t i = 0; i < a.dim; ++i)
    for (uint32_t j = 0; j < a.dim; ++j)
      e.insert(svec_axpy(a.f, a.mul_basis(i, j), a.f.p - 1, a.mul_basis(j, i)));
  return a.dim - e.rank();
}

Algebra permute_basis(const Algebra& a, const std::vector<uint32_t>& perm) {
  require(perm.size() == a.dim, "permutation size mismatch");
  std::vector<uint32_t> inv(a.dim, a.dim);
  for (uint32_t i = 0; i < a.dim; ++i) {
    require(perm[i] < a.dim && inv[perm[i]] == a.dim, "not a permutation");
    inv[perm[i]] = i;
  }
  auto relabel = [&](const SVec& v) {
    return svec_map_idx(a.f, v, [&](uint32_t old) { return static_cast<uint64_t>(inv[old]); });
  };
  Algebra b;
  b.f = a.f;
  b.dim = a.dim;
  b.unit = relabel(a.unit);
  b.basis_labels.resize(a.dim);
  b.table.resize(a.table.size());
  for (uint32_t i = 0; i < a.dim; ++i) {
    b.basis_labels[i] =
        perm[i] < a.basis_labels.size() ? a.basis_labels[perm[i]] : "e" + std::to_string(perm[i]);
    for (uint32_t j = 0; j < a.dim; ++j)
      b.table[static_cast<size_t>(i) * a.dim + j] = relabel(a.mul_basis(perm[i], perm[j]));
  }
  return b;
}

}  // namespace carthom
