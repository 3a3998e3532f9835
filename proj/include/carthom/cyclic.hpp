#pragma once
// Cyclic structures with multiplicity c: a tower of F_p-spaces where level n
// carries faces d_0..d_n down, degeneracies s_0..s_n up, and a cyclic
// operator tau of order c(n+1). Multiplicity 1 is the ordinary cyclic case;
// multiplicity p adds the central power sigma = tau^{n+1} with sigma^p = id.

#include <memory>
#include <vector>

#include "carthom/algebra.hpp"
#include "carthom/linalg.hpp"

namespace carthom {

// Little-endian digit packing: digits[k] = (idx / base^k) % base.
std::vector<uint32_t> unpack_digits(uint64_t idx, uint32_t base, uint32_t count);
uint64_t pack_digits(const std::vector<uint32_t>& digits, uint32_t base);

// Lazy generator: structure maps are produced column by column so that only
// the levels a caller materializes are ever paid for.
class CycGen {
 public:
  virtual ~CycGen() = default;
  virtual Fp field() const = 0;
  virtual uint32_t mult() const = 0;
  virtual uint64_t level_dim(int n) const = 0;
  // d_i on basis vector idx of level n, landing in level n-1 (0 <= i <= n).
  virtual SVec face(int n, int i, uint32_t idx) const = 0;
  // s_i on basis vector idx of level n, landing in level n+1 (0 <= i <= n).
  virtual SVec degen(int n, int i, uint32_t idx) const = 0;
  // tau on basis vector idx of level n.
  virtual SVec tau(int n, uint32_t idx) const = 0;

  SVec apply_face(int n, int i, const SVec& v) const;
  SVec apply_degen(int n, int i, const SVec& v) const;
  SVec apply_tau(int n, const SVec& v) const;
};

// Materialized tower through level `top`.
struct CycObj {
  Fp f;
  uint32_t mult = 1;
  int top = -1;
  std::vector<uint32_t> dims;
  std::vector<std::vector<SMat>> face;   // face[n][i]: X_n -> X_{n-1}, n >= 1
  std::vector<std::vector<SMat>> degen;  // degen[n][i]: X_n -> X_{n+1}, n < top
  std::vector<SMat> tau;                 // tau[n]: X_n -> X_n

  SMat sigma(int n) const;  // tau[n]^(n+1)
};

CycObj materialize(const CycGen& g, int top);

// All formal identities on the materialized range: simplicial relations,
// mixed face/degeneracy relations, cyclic commutations, tau order
// mult*(n+1), and centrality of sigma. Throws on the first failure.
void verify_cyclic_relations(const CycObj& x);

// Cyclic nerve of an algebra, restricted along the degree-p edgewise cover
// when p > 1. Level n holds p(n+1) tensor factors of A; a structure map is
// the composite of p elementary ones spaced n+1 apart; tau rotates the last
// factor to the front. p = 1 is the plain cyclic nerve.
class NerveGen : public CycGen {
 public:
  NerveGen(Algebra a, uint32_t p = 1);
  Fp field() const override { return a_.f; }
  uint32_t mult() const override { return p_; }
  uint64_t level_dim(int n) const override;
  SVec face(int n, int i, uint32_t idx) const override;
  SVec degen(int n, int i, uint32_t idx) const override;
  SVec tau(int n, uint32_t idx) const override;
  const Algebra& algebra() const { return a_; }

 private:
  Algebra a_;
  uint32_t p_;
};

// Cells of the subdivided circle: level n has mult*(n+1) vertices
// (cell_dim 0) or edges (cell_dim 1). A face merges a vertex into its
// successor and collapses the edge between them; a degeneracy splits an
// edge in two. Edge e_j runs from vertex v_j to v_{j+1 (mod m)}.
class CellGen : public CycGen {
 public:
  CellGen(Fp f, uint32_t c, int cell_dim);
  Fp field() const override { return f_; }
  uint32_t mult() const override { return c_; }
  uint64_t level_dim(int n) const override { return static_cast<uint64_t>(c_) * (n + 1); }
  SVec face(int n, int i, uint32_t idx) const override;
  SVec degen(int n, int i, uint32_t idx) const override;
  SVec tau(int n, uint32_t idx) const override;

 private:
  Fp f_;
  uint32_t c_;
  int cell_dim_;
};

// Constant object: every level is F, every structure map the identity.
class PointGen : public CycGen {
 public:
  PointGen(Fp f, uint32_t c) : f_(f), c_(c) {}
  Fp field() const override { return f_; }
  uint32_t mult() const override { return c_; }
  uint64_t level_dim(int) const override { return 1; }
  SVec face(int, int, uint32_t) const override { return svec_unit(0); }
  SVec degen(int, int, uint32_t) const override { return svec_unit(0); }
  SVec tau(int, uint32_t) const override { return svec_unit(0); }

 private:
  Fp f_;
  uint32_t c_;
};

// Same levels and operators, multiplicity scaled by q: the pullback along
// the multiplicity-collapsing projection. sigma acts as tau^{n+1} of the
// base, which is the identity when the base has multiplicity 1.
class InflationGen : public CycGen {
 public:
  InflationGen(const CycGen& base, uint32_t q) : base_(&base), q_(q) {}
  Fp field() const override { return base_->field(); }
  uint32_t mult() const override { return q_ * base_->mult(); }
  uint64_t level_dim(int n) const override { return base_->level_dim(n); }
  SVec face(int n, int i, uint32_t idx) const override { return base_->face(n, i, idx); }
  SVec degen(int n, int i, uint32_t idx) const override { return base_->degen(n, i, idx); }
  SVec tau(int n, uint32_t idx) const override { return base_->tau(n, idx); }

 private:
  const CycGen* base_;
  uint32_t q_;
};

// Levelwise tensor product with diagonal structure maps. Index layout is
// a-major: idx = a_idx * dim_b(level) + b_idx.
class DiagTensorGen : public CycGen {
 public:
  DiagTensorGen(const CycGen& a, const CycGen& b);
  Fp field() const override { return a_->field(); }
  uint32_t mult() const override { return a_->mult(); }
  uint64_t level_dim(int n) const override { return a_->level_dim(n) * b_->level_dim(n); }
  SVec face(int n, int i, uint32_t idx) const override;
  SVec degen(int n, int i, uint32_t idx) const override;
  SVec tau(int n, uint32_t idx) const override;

 private:
  SVec combine(const SVec& av, const SVec& bv, uint64_t bdim) const;
  const CycGen *a_, *b_;
};

// Re-emits a materialized tower as a generator, so tower constructions can
// be iterated. The wrapped object must outlive the view.
class ObjGen : public CycGen {
 public:
  explicit ObjGen(const CycObj& x) : x_(&x) {}
  Fp field() const override { return x_->f; }
  uint32_t mult() const override { return x_->mult; }
  uint64_t level_dim(int n) const override;
  SVec face(int n, int i, uint32_t idx) const override { return x_->face[n][i].col[idx]; }
  SVec degen(int n, int i, uint32_t idx) const override { return x_->degen[n][i].col[idx]; }
  SVec tau(int n, uint32_t idx) const override { return x_->tau[n].col[idx]; }

 private:
  const CycObj* x_;
};

// Tower with every level zero, for padding complexes of towers.
CycObj zero_tower(Fp f, int top);

// Levelwise map commuting with every structure map.
struct CyclicMapData {
  std::vector<SMat> level;
};
void verify_cyclic_map(const CycObj& x, const CycObj& y, const CyclicMapData& m);

// Fixed vectors and orbit space of a finite-order operator g.
Subspace invariants_of(const SMat& g);                // ker(g - 1)
QuotientPresentation coinvariants_of(const SMat& g);  // V / im(g - 1)
SMat power_sum(const SMat& g, uint32_t order);        // 1 + g + ... + g^(order-1)

}  // namespace carthom
