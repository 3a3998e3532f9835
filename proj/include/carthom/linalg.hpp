#pragma once
// Exact linear algebra over F_p: sparse vectors/matrices, reduced column
// echelon forms with lowest-index pivots, kernels, images, quotients.
// All outputs are canonical: identical inputs give bit-identical results.

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "carthom/common.hpp"

namespace carthom {

// Prime field context. Values live in [0, p).
struct Fp {
  uint32_t p = 0;
  Fp() = default;
  explicit Fp(uint32_t prime);
  uint32_t add(uint32_t a, uint32_t b) const { uint32_t s = a + b; return s >= p ? s - p : s; }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p - b; }
  uint32_t neg(uint32_t a) const { return a ? p - a : 0; }
  uint32_t mul(uint32_t a, uint32_t b) const { return static_cast<uint32_t>((uint64_t)a * b % p); }
  uint32_t pow(uint32_t a, uint64_t e) const;
  uint32_t inv(uint32_t a) const;
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p);
    return static_cast<uint32_t>(r < 0 ? r + p : r);
  }
  bool operator==(const Fp& o) const { return p == o.p; }
};

bool is_prime(uint32_t n);

// One term of a sparse vector.
struct Term {
  uint32_t idx;
  uint32_t c;  // nonzero, in [1, p)
  bool operator==(const Term& o) const { return idx == o.idx && c == o.c; }
};

// Sparse vector: terms sorted by index, no zero coefficients.
using SVec = std::vector<Term>;

SVec svec_unit(uint32_t idx, uint32_t c = 1);
// Sorts and combines duplicate indices; drops zeros.
SVec svec_canon(const Fp& f, SVec v);
// a + c*b, all inputs canonical.
SVec svec_axpy(const Fp& f, const SVec& a, uint32_t c, const SVec& b);
SVec svec_scale(const Fp& f, const SVec& a, uint32_t c);
SVec svec_neg(const Fp& f, const SVec& a);
uint32_t svec_coeff(const SVec& a, uint32_t idx);
bool svec_eq(const SVec& a, const SVec& b);
// Relabels indices; keeps ordering assumptions by re-canonicalizing.
SVec svec_map_idx(const Fp& f, const SVec& a, const std::function<uint64_t(uint32_t)>& m);

// Sparse matrix in column-major form; col[j] holds column j.
struct SMat {
  uint32_t rows = 0, cols = 0;
  Fp f;
  std::vector<SVec> col;

  SMat() = default;
  SMat(uint32_t r, uint32_t c, Fp field) : rows(r), cols(c), f(field), col(c) {}
  static SMat identity(uint32_t n, Fp f);
  static SMat zero(uint32_t r, uint32_t c, Fp f) { return SMat(r, c, f); }
  static SMat from_triples(uint32_t r, uint32_t c, Fp f,
                           const std::vector<std::tuple<uint32_t, uint32_t, uint32_t>>& ts);

  uint32_t at(uint32_t r, uint32_t c) const { return svec_coeff(col[c], r); }
  void set_col(uint32_t j, SVec v) { col[j] = std::move(v); }
  SVec apply(const SVec& v) const;         // M*v
  SMat mul(const SMat& o) const;           // this * o
  SMat add(const SMat& o, uint32_t scale_o = 1) const;
  SMat scale(uint32_t c) const;
  SMat transpose() const;
  bool is_zero() const;
  bool operator==(const SMat& o) const;
  size_t nnz() const;
};

// Column echelon accumulator with lowest-index pivots.
// Stored columns are forward-reduced: each has coefficient 1 at its pivot
// row, zero at the pivot rows of all earlier columns, and pivot rows are
// distinct. basis() back-substitutes to the unique reduced form on demand.
class Ech {
 public:
  Ech() = default;
  Ech(Fp f, uint32_t ambient_dim, bool tracked = false);

  uint32_t dim() const { return dim_; }
  uint32_t rank() const { return static_cast<uint32_t>(cols_.size()); }
  const Fp& field() const { return f_; }

  // Subtracts stored columns (in insertion order) until no pivot-row entry
  // remains. coords receives (column slot, coefficient) pairs actually used.
  SVec reduce(const SVec& v, std::vector<std::pair<uint32_t, uint32_t>>* coords = nullptr) const;
  // Reduce; if a nonzero residual remains, normalize on its lowest index and
  // store it. Returns true when the vector enlarged the span.
  bool insert(const SVec& v) { return !insert_tagged(v, SVec{}).has_value(); }
  // Tracked variant: tag is the caller's preimage/combination for v. When v
  // is already in the span, returns the stored-tag combination reproducing v.
  std::optional<SVec> insert_tagged(const SVec& v, const SVec& tag);
  bool contains(const SVec& v) const { return reduce(v).empty(); }
  // Tag combination reproducing v, or nullopt when v is outside the span.
  std::optional<SVec> express(const SVec& v) const;

  // Canonical basis: fully reduced columns sorted by pivot row. Unique for
  // the span (independent of insertion order).
  std::vector<SVec> basis() const;
  std::vector<uint32_t> pivot_rows() const;  // sorted
  bool same_span(const Ech& o) const;

 private:
  Fp f_;
  uint32_t dim_ = 0;
  bool tracked_ = false;
  std::vector<SVec> cols_;       // insertion order, forward-reduced
  std::vector<uint32_t> pivot_;  // pivot row per stored column
  std::vector<SVec> tags_;
  std::unordered_map<uint32_t, uint32_t> row2col_;
};

// Spec-level subspace: ambient dimension + canonical basis matrix.
struct Subspace {
  uint32_t ambient_dim = 0;
  SMat basis;  // columns independent, reduced echelon, sorted by pivot
  uint32_t dim() const { return basis.cols; }
};

uint32_t rank(const SMat& m);
Subspace kernel_basis(const SMat& m);
Subspace image_basis(const SMat& m);
Subspace subspace_from_vectors(Fp f, uint32_t ambient, const std::vector<SVec>& gens);
bool subspace_equal(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& big, const Subspace& small);
Subspace subspace_intersection(const Subspace& a, const Subspace& b);
Subspace subspace_sum(const Subspace& a, const Subspace& b);

// Canonical complement presentation of ambient/sub: projection has full row
// rank ambient - dim(sub), vanishes on sub, and projection*section = id.
// Deterministic pivot-complement rule: quotient coordinates are the non-pivot
// rows of the canonical echelon of sub.
struct QuotientPresentation {
  SMat projection;  // (ambient - k) x ambient
  SMat section;     // ambient x (ambient - k)
};
QuotientPresentation quotient_presentation(uint32_t ambient_dim, const Subspace& sub);

// Matrix of m restricted to source, expressed in target's basis.
// Throws invariant_violation("not invariant") when m(source) leaves target.
SMat restrict_map(const SMat& m, const Subspace& source, const Subspace& target);

// Solves m*x = b; returns std::nullopt when inconsistent. Deterministic
// (canonical echelon solution).
std::optional<SVec> solve(const SMat& m, const SVec& b);

// Solves m*x = rhs column by column over one shared echelon of m.
// Throws invariant_violation when some column is outside the image.
SMat solve_many(const SMat& m, const SMat& rhs);

// Two-sided inverse of a square matrix; throws when singular.
SMat inverse(const SMat& m);

}  // namespace carthom
