#include "carthom/linalg.hpp"

#include <algorithm>
#include <set>

namespace carthom {

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Fp::Fp(uint32_t prime) : p(prime) {
  require(is_prime(prime), "modulus must be prime");
}

uint32_t Fp::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p, acc = 1;
  while (e) {
    if (e & 1) acc = acc * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<uint32_t>(acc);
}

uint32_t Fp::inv(uint32_t a) const {
  require(a % p != 0, "division by zero");
  return pow(a % p, p - 2);
}

SVec svec_unit(uint32_t idx, uint32_t c) {
  if (c == 0) return {};
  return {Term{idx, c}};
}

SVec svec_canon(const Fp& f, SVec v) {
  std::sort(v.begin(), v.end(), [](const Term& a, const Term& b) { return a.idx < b.idx; });
  SVec out;
  out.reserve(v.size());
  size_t i = 0;
  while (i < v.size()) {
    uint32_t idx = v[i].idx;
    uint64_t acc = 0;
    while (i < v.size() && v[i].idx == idx) acc += v[i++].c;
    uint32_t c = static_cast<uint32_t>(acc % f.p);
    if (c) out.push_back(Term{idx, c});
  }
  return out;
}

SVec svec_axpy(const Fp& f, const SVec& a, uint32_t c, const SVec& b) {
  c %= f.p;
  if (c == 0) return a;
  SVec out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j >= b.size() || (i < a.size() && a[i].idx < b[j].idx)) {
      out.push_back(a[i++]);
    } else if (i >= a.size() || b[j].idx < a[i].idx) {
      uint32_t v = f.mul(c, b[j].c);
      if (v) out.push_back(Term{b[j].idx, v});
      ++j;
    } else {
      uint32_t v = f.add(a[i].c, f.mul(c, b[j].c));
      if (v) out.push_back(Term{a[i].idx, v});
      ++i, ++j;
    }
  }
  return out;
}

SVec svec_scale(const Fp& f, const SVec& a, uint32_t c) {
  c %= f.p;
  if (c == 0) return {};
  if (c == 1) return a;
  SVec out;
  out.reserve(a.size());
  for (const Term& t : a) out.push_back(Term{t.idx, f.mul(t.c, c)});
  return out;
}

SVec svec_neg(const Fp& f, const SVec& a) { return svec_scale(f, a, f.p - 1); }

uint32_t svec_coeff(const SVec& a, uint32_t idx) {
  auto it = std::lower_bound(a.begin(), a.end(), idx,
                             [](const Term& t, uint32_t i) { return t.idx < i; });
  return (it != a.end() && it->idx == idx) ? it->c : 0;
}

bool svec_eq(const SVec& a, const SVec& b) { return a == b; }

SVec svec_map_idx(const Fp& f, const SVec& a, const std::function<uint64_t(uint32_t)>& m) {
  SVec out;
  out.reserve(a.size());
  for (const Term& t : a) {
    uint64_t ni = m(t.idx);
    require(ni < (1ull << 32), "index overflow in svec_map_idx");
    out.push_back(Term{static_cast<uint32_t>(ni), t.c});
  }
  return svec_canon(f, std::move(out));
}

SMat SMat::identity(uint32_t n, Fp f) {
  SMat m(n, n, f);
  for (uint32_t i = 0; i < n; ++i) m.col[i] = svec_unit(i);
  return m;
}

SMat SMat::from_triples(uint32_t r, uint32_t c, Fp f,
                        const std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>& ts) {
  SMat m(r, c, f);
  for (const auto& [row, colj, val] : ts) {
    require(row < r && colj < c, "triple out of bounds");
    m.col[colj].push_back(Term{row, val % f.p});
  }
  for (auto& cv : m.col) cv = svec_canon(f, std::move(cv));
  return m;
}

SVec SMat::apply(const SVec& v) const {
  SVec acc;
  for (const Term& t : v) {
    require(t.idx < cols, "vector index out of bounds");
    for (const Term& e : col[t.idx]) acc.push_back(Term{e.idx, f.mul(e.c, t.c)});
  }
  return svec_canon(f, std::move(acc));
}

SMat SMat::mul(const SMat& o) const {
  require(cols == o.rows && f == o.f, "shape mismatch in mul");
  SMat out(rows, o.cols, f);
  for (uint32_t j = 0; j < o.cols; ++j) out.col[j] = apply(o.col[j]);
  return out;
}

SMat SMat::add(const SMat& o, uint32_t scale_o) const {
  require(rows == o.rows && cols == o.cols && f == o.f, "shape mismatch in add");
  SMat out(rows, cols, f);
  for (uint32_t j = 0; j < cols; ++j) out.col[j] = svec_axpy(f, col[j], scale_o, o.col[j]);
  return out;
}

SMat SMat::scale(uint32_t c) const {
  SMat out(rows, cols, f);
  for (uint32_t j = 0; j < cols; ++j) out.col[j] = svec_scale(f, col[j], c);
  return out;
}

SMat SMat::transpose() const {
  SMat out(cols, rows, f);
  for (uint32_t j = 0; j < cols; ++j)
    for (const Term& t : col[j]) out.col[t.idx].push_back(Term{j, t.c});
  return out;  // columns already sorted: j increases outer, rows were sorted
}

bool SMat::is_zero() const {
  for (const auto& c : col)
    if (!c.empty()) return false;
  return true;
}

bool SMat::operator==(const SMat& o) const {
  return rows == o.rows && cols == o.cols && f.p == o.f.p && col == o.col;
}

size_t SMat::nnz() const {
  size_t n = 0;
  for (const auto& c : col) n += c.size();
  return n;
}

Ech::Ech(Fp f, uint32_t ambient_dim, bool tracked)
    : f_(f), dim_(ambient_dim), tracked_(tracked) {}

SVec Ech::reduce(const SVec& v, std::vector<std::pair<uint32_t, uint32_t>>* coords) const {
  SVec res = v;
  std::set<uint32_t> cand;
  auto scan = [&](const SVec& w, uint32_t above) {
    for (const Term& t : w) {
      auto it = row2col_.find(t.idx);
      if (it != row2col_.end() && it->second >= above) cand.insert(it->second);
    }
  };
  scan(res, 0);
  while (!cand.empty()) {
    uint32_t k = *cand.begin();
    cand.erase(cand.begin());
    uint32_t c = svec_coeff(res, pivot_[k]);
    if (!c) continue;
    res = svec_axpy(f_, res, f_.neg(c), cols_[k]);
    if (coords) coords->push_back({k, c});
    // forward-reduced state: cols_[k] only hits pivots of later columns
    scan(cols_[k], k + 1);
  }
  return res;
}

std::optional<SVec> Ech::insert_tagged(const SVec& v, const SVec& tag) {
  std::vector<std::pair<uint32_t, uint32_t>> coords;
  SVec res = reduce(v, &coords);
  if (res.empty()) {
    if (!tracked_) return SVec{};
    SVec combo;
    for (auto& [k, c] : coords)
      for (const Term& t : tags_[k]) combo.push_back(Term{t.idx, f_.mul(t.c, c)});
    return svec_canon(f_, std::move(combo));
  }
  uint32_t lead_row = res.front().idx;
  uint32_t inv = f_.inv(res.front().c);
  cols_.push_back(svec_scale(f_, res, inv));
  pivot_.push_back(lead_row);
  row2col_[lead_row] = static_cast<uint32_t>(cols_.size() - 1);
  if (tracked_) {
    // residual = v - sum c*cols, so the tag picks up the corrections negated
    SVec tg = tag;
    for (auto& [k, c] : coords)
      for (const Term& t : tags_[k]) tg.push_back(Term{t.idx, f_.mul(t.c, f_.neg(c))});
    tags_.push_back(svec_scale(f_, svec_canon(f_, std::move(tg)), inv));
  }
  return std::nullopt;
}

std::optional<SVec> Ech::express(const SVec& v) const {
  require(tracked_, "express needs a tracked echelon");
  std::vector<std::pair<uint32_t, uint32_t>> coords;
  SVec res = reduce(v, &coords);
  if (!res.empty()) return std::nullopt;
  SVec combo;
  for (auto& [k, c] : coords)
    for (const Term& t : tags_[k]) combo.push_back(Term{t.idx, f_.mul(t.c, c)});
  return svec_canon(f_, std::move(combo));
}

std::vector<SVec> Ech::basis() const {
  // Back-substitution in reverse insertion order: every column subtracted is
  // already fully reduced, so one pass suffices.
  std::vector<SVec> out = cols_;
  for (size_t k = out.size(); k-- > 0;) {
    std::set<uint32_t> cand;
    auto scan = [&](const SVec& w) {
      for (const Term& t : w) {
        auto it = row2col_.find(t.idx);
        if (it != row2col_.end() && it->second > k) cand.insert(it->second);
      }
    };
    scan(out[k]);
    while (!cand.empty()) {
      uint32_t j = *cand.begin();
      cand.erase(cand.begin());
      uint32_t c = svec_coeff(out[k], pivot_[j]);
      if (!c) continue;
      out[k] = svec_axpy(f_, out[k], f_.neg(c), out[j]);
      scan(out[j]);
    }
  }
  std::vector<size_t> order(out.size());
  for (size_t i = 0; i < out.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t a, size_t b) { return pivot_[a] < pivot_[b]; });
  std::vector<SVec> sorted;
  sorted.reserve(out.size());
  for (size_t i : order) sorted.push_back(std::move(out[i]));
  return sorted;
}

std::vector<uint32_t> Ech::pivot_rows() const {
  std::vector<uint32_t> p = pivot_;
  std::sort(p.begin(), p.end());
  return p;
}

bool Ech::same_span(const Ech& o) const {
  if (rank() != o.rank()) return false;
  for (const auto& c : o.cols_)
    if (!contains(c)) return false;
  return true;
}

uint32_t rank(const SMat& m) {
  Ech e(m.f, m.rows);
  for (const auto& c : m.col) e.insert(c);
  return e.rank();
}

Subspace subspace_from_vectors(Fp f, uint32_t ambient, const std::vector<SVec>& gens) {
  Ech e(f, ambient);
  for (const auto& g : gens) e.insert(g);
  auto b = e.basis();
  Subspace s;
  s.ambient_dim = ambient;
  s.basis = SMat(ambient, static_cast<uint32_t>(b.size()), f);
  for (uint32_t j = 0; j < b.size(); ++j) s.basis.col[j] = b[j];
  return s;
}

Subspace image_basis(const SMat& m) { return subspace_from_vectors(m.f, m.rows, m.col); }

Subspace kernel_basis(const SMat& m) {
  Ech e(m.f, m.rows, /*tracked=*/true);
  std::vector<SVec> kernel;
  for (uint32_t j = 0; j < m.cols; ++j) {
    auto combo = e.insert_tagged(m.col[j], svec_unit(j));
    if (combo) {
      // e_j - combo maps to zero
      kernel.push_back(svec_axpy(m.f, svec_unit(j), m.f.p - 1, *combo));
    }
  }
  return subspace_from_vectors(m.f, m.cols, kernel);
}

bool subspace_equal(const Subspace& a, const Subspace& b) {
  return a.ambient_dim == b.ambient_dim && a.basis.col == b.basis.col;
}

bool subspace_contains(const Subspace& big, const Subspace& small) {
  if (big.ambient_dim != small.ambient_dim) return false;
  Ech e(big.basis.f, big.ambient_dim);
  for (const auto& c : big.basis.col) e.insert(c);
  for (const auto& c : small.basis.col)
    if (!e.contains(c)) return false;
  return true;
}

Subspace subspace_intersection(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim == b.ambient_dim, "ambient dimension mismatch");
  Fp f = a.basis.f.p ? a.basis.f : b.basis.f;
  if (a.dim() == 0 || b.dim() == 0) return subspace_from_vectors(f, a.ambient_dim, {});
  // stack [A | B]; kernel vectors give A-coordinates of common elements
  SMat stacked(a.ambient_dim, a.dim() + b.dim(), f);
  for (uint32_t j = 0; j < a.dim(); ++j) stacked.set_col(j, a.basis.col[j]);
  for (uint32_t j = 0; j < b.dim(); ++j) stacked.set_col(a.dim() + j, b.basis.col[j]);
  Subspace ker = kernel_basis(stacked);
  std::vector<SVec> gens;
  for (const SVec& k : ker.basis.col) {
    SVec coords;
    for (const Term& t : k)
      if (t.idx < a.dim()) coords.push_back(t);
    gens.push_back(a.basis.apply(coords));
  }
  return subspace_from_vectors(f, a.ambient_dim, gens);
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require(a.ambient_dim == b.ambient_dim, "ambient dimension mismatch");
  Fp f = a.basis.f.p ? a.basis.f : b.basis.f;
  std::vector<SVec> gens = a.basis.col;
  gens.insert(gens.end(), b.basis.col.begin(), b.basis.col.end());
  return subspace_from_vectors(f, a.ambient_dim, gens);
}

QuotientPresentation quotient_presentation(uint32_t ambient_dim, const Subspace& sub) {
  require(sub.ambient_dim == ambient_dim, "ambient dimension mismatch");
  Fp f = sub.basis.f;
  // Re-canonicalize defensively; pivot-complement rule needs reduced echelon.
  Subspace s = subspace_from_vectors(f, ambient_dim, sub.basis.col);
  uint32_t k = s.dim();
  std::vector<uint32_t> piv(k);
  std::vector<bool> is_piv(ambient_dim, false);
  for (uint32_t j = 0; j < k; ++j) {
    piv[j] = s.basis.col[j].front().idx;
    is_piv[piv[j]] = true;
  }
  std::vector<uint32_t> comp;
  for (uint32_t r = 0; r < ambient_dim; ++r)
    if (!is_piv[r]) comp.push_back(r);
  std::vector<uint32_t> pos(ambient_dim, 0);
  for (uint32_t i = 0; i < comp.size(); ++i) pos[comp[i]] = i;

  QuotientPresentation out;
  out.projection = SMat(static_cast<uint32_t>(comp.size()), ambient_dim, f);
  for (uint32_t r = 0; r < ambient_dim; ++r) {
    if (!is_piv[r]) {
      out.projection.col[r] = svec_unit(pos[r]);
    }
  }
  for (uint32_t j = 0; j < k; ++j) {
    SVec c;
    for (const Term& t : s.basis.col[j])
      if (!is_piv[t.idx]) c.push_back(Term{pos[t.idx], f.neg(t.c)});
    out.projection.col[piv[j]] = svec_canon(f, std::move(c));
  }
  out.section = SMat(ambient_dim, static_cast<uint32_t>(comp.size()), f);
  for (uint32_t i = 0; i < comp.size(); ++i) out.section.col[i] = svec_unit(comp[i]);
  return out;
}

SMat restrict_map(const SMat& m, const Subspace& source, const Subspace& target) {
  Fp f = m.f;
  Ech e(f, target.ambient_dim, /*tracked=*/true);
  for (uint32_t j = 0; j < target.basis.cols; ++j)
    e.insert_tagged(target.basis.col[j], svec_unit(j));
  SMat out(target.dim(), source.dim(), f);
  for (uint32_t j = 0; j < source.dim(); ++j) {
    auto coords = e.express(m.apply(source.basis.col[j]));
    if (!coords) throw invariant_violation("not invariant");
    out.col[j] = *coords;
  }
  return out;
}

std::optional<SVec> solve(const SMat& m, const SVec& b) {
  Ech e(m.f, m.rows, /*tracked=*/true);
  for (uint32_t j = 0; j < m.cols; ++j) e.insert_tagged(m.col[j], svec_unit(j));
  return e.express(b);
}

SMat solve_many(const SMat& m, const SMat& rhs) {
  require(m.rows == rhs.rows, "row count mismatch");
  Ech e(m.f, m.rows, /*tracked=*/true);
  for (uint32_t j = 0; j < m.cols; ++j) e.insert_tagged(m.col[j], svec_unit(j));
  SMat out(m.cols, rhs.cols, m.f);
  for (uint32_t j = 0; j < rhs.cols; ++j) {
    auto x = e.express(rhs.col[j]);
    if (!x) throw invariant_violation("column outside the image");
    out.col[j] = std::move(*x);
  }
  return out;
}

SMat inverse(const SMat& m) {
  require(m.rows == m.cols, "inverse needs a square matrix");
  SMat inv = solve_many(m, SMat::identity(m.rows, m.f));
  require(m.mul(inv) == SMat::identity(m.rows, m.f), "matrix is singular");
  return inv;
}

}  // namespace carthom
