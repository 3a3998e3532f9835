#pragma once
// Order-p operators on F_p spaces: homology of the acting cyclic group,
// the trace from coinvariants to invariants, tightness (the inclusion-
// induced comparison between odd and even positive-degree homology is
// invertible), and an orbit-census fast path for permutation actions.

#include <optional>

#include "carthom/cyclic.hpp"

namespace carthom {

struct TightReport {
  bool tight = false;
  uint32_t h_odd = 0;    // common dim of all odd positive degrees
  uint32_t h_even = 0;   // common dim of all even positive degrees
  bool via_census = false;
};

// requires sigma^p = 1; p prime
TightReport tightness_of_operator(Fp f, const SMat& sigma, uint32_t p);

// canonical presentations plus the two structure maps between them;
// trace . include_project and include_project . trace are both p = 0
struct TraceData {
  QuotientPresentation coinv;   // ambient / im(sigma - 1)
  Subspace inv;                 // ker(sigma - 1)
  SMat trace;                   // inv coords x coinv coords
  SMat include_project;         // coinv coords x inv coords
};
TraceData trace_data(Fp f, const SMat& sigma, uint32_t p);

// When the central power acts on level n by a coefficient-one permutation
// of basis indices, orbits have size 1 or mult and the module splits into
// trivial and free summands: tight, with h_odd = h_even = #fixed points.
// Returns nullopt when the action is not a plain permutation.
std::optional<TightReport> tightness_by_census(const CycGen& g, int n);

// census when possible, otherwise materialized operator path
TightReport tightness_of_level(const CycGen& g, int n);

}  // namespace carthom
