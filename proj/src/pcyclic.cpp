#include "carthom/pcyclic.hpp"

namespace carthom {

TightReport tightness_of_operator(Fp f, const SMat& sigma, uint32_t p) {
  require(is_prime(p) && p == f.p, "operator order must be the field characteristic");
  require(sigma.rows == sigma.cols, "operator must be square");
  SMat pw = SMat::identity(sigma.rows, f);
  for (uint32_t k = 0; k < p; ++k) pw = sigma.mul(pw);
  require(pw == SMat::identity(sigma.rows, f), "operator order does not divide p");

  SMat u = sigma.add(SMat::identity(sigma.rows, f), f.p - 1);
  SMat nrm = power_sum(sigma, p);
  Subspace k1 = kernel_basis(u);
  Subspace kn = kernel_basis(nrm);
  Subspace im_u = image_basis(u);
  Subspace im_n = image_basis(nrm);

  TightReport r;
  r.h_odd = k1.dim() - im_n.dim();
  r.h_even = kn.dim() - im_u.dim();
  bool inj = subspace_contains(im_n, subspace_intersection(k1, im_u));
  bool surj = subspace_contains(subspace_sum(k1, im_u), kn);
  r.tight = inj && surj;
  return r;
}

TraceData trace_data(Fp f, const SMat& sigma, uint32_t p) {
  SMat u = sigma.add(SMat::identity(sigma.rows, f), f.p - 1);
  SMat nrm = power_sum(sigma, p);
  TraceData t;
  t.inv = kernel_basis(u);
  t.coinv = quotient_presentation(sigma.rows, image_basis(u));
  uint32_t cd = t.coinv.projection.rows;
  Subspace coords{cd, SMat::identity(cd, f)};
  t.trace = restrict_map(nrm.mul(t.coinv.section), coords, t.inv);
  t.include_project = t.coinv.projection.mul(t.inv.basis);
  require(t.trace.mul(t.include_project).is_zero(), "trace round trip is p on invariants");
  require(t.include_project.mul(t.trace).is_zero(), "trace round trip is p on coinvariants");
  return t;
}

std::optional<TightReport> tightness_by_census(const CycGen& g, int n) {
  const uint32_t c = g.mult();
  const uint64_t dim = g.level_dim(n);
  require(dim <= 0xffffffffull, "level too large for an index census");
  auto step = [&](uint64_t idx) -> std::optional<uint64_t> {
    // one application of the central power: tau, n + 1 times
    uint64_t cur = idx;
    for (int k = 0; k <= n; ++k) {
      SVec im = g.tau(n, static_cast<uint32_t>(cur));
      if (im.size() != 1 || im.front().c != 1) return std::nullopt;
      cur = im.front().idx;
    }
    return cur;
  };
  uint64_t fixed = 0, moved = 0;
  std::vector<bool> seen(dim, false);
  for (uint64_t i = 0; i < dim; ++i) {
    if (seen[i]) continue;
    uint64_t cur = i, len = 0;
    do {
      seen[cur] = true;
      auto nx = step(cur);
      if (!nx) return std::nullopt;
      cur = *nx;
      ++len;
    } while (cur != i);
    require(len == 1 || len == c, "orbit size must be one or the multiplicity");
    if (len == 1)
      ++fixed;
    else
      moved += len;
  }
  require(fixed + moved == dim, "orbit census mismatch");
  TightReport r;
  r.tight = true;
  r.h_odd = static_cast<uint32_t>(fixed);
  r.h_even = static_cast<uint32_t>(fixed);
  r.via_census = true;
  return r;
}

TightReport tightness_of_level(const CycGen& g, int n) {
  if (auto r = tightness_by_census(g, n)) return *r;
  CycObj x = materialize(g, n);
  return tightness_of_operator(x.f, x.sigma(n), g.mult());
}

}  // namespace carthom
