#pragma once

#include <string>
#include <vector>

#include "scspan/cover.hpp"
#include "scspan/lattice.hpp"

// Span analysis: all comparisons happen in cycle coordinates Z^{E-V+1} with
// the boundary lattice adjoined, so "the classes span H1" is exactly
// "span + B = Z^{E-V+1}".

namespace scspan {

enum class SpanVerdict { equal, finite_index, rank_deficient };

inline const char* to_string(SpanVerdict v) {
  switch (v) {
    case SpanVerdict::equal: return "equal";
    case SpanVerdict::finite_index: return "finite-index";
    default: return "rank-deficient";
  }
}

struct SpanReport {
  int ambient = 0;
  int span_rank = 0;                       // rank of span + B
  int rank_defect = 0;                     // ambient - span_rank
  SpanVerdict verdict = SpanVerdict::rank_deficient;
  std::vector<BigInt> invariant_factors;   // nontrivial factors of Z^amb/(span+B)
  std::vector<std::vector<BigInt>> witnesses;  // basis vectors outside the span
  bool rational_span_full = false;         // saturation comparison

  bool equal() const { return verdict == SpanVerdict::equal; }
};

// span_plus_b must already contain the boundary rows
inline SpanReport analyze_span(const RowHnf& span_plus_b, int ambient,
                               int max_witnesses = 3) {
  SpanReport r;
  r.ambient = ambient;
  r.span_rank = static_cast<int>(span_plus_b.rank());
  r.rank_defect = ambient - r.span_rank;
  r.rational_span_full = (r.rank_defect == 0);
  if (span_plus_b.is_full_lattice()) {
    r.verdict = SpanVerdict::equal;
    return r;
  }
  r.verdict = r.rank_defect == 0 ? SpanVerdict::finite_index : SpanVerdict::rank_deficient;
  auto q = quotient_invariants(span_plus_b.to_matrix());
  r.invariant_factors = q.factors;
  for (int i = 0; i < ambient && static_cast<int>(r.witnesses.size()) < max_witnesses; ++i) {
    std::vector<BigInt> e(static_cast<std::size_t>(ambient), 0);
    e[static_cast<std::size_t>(i)] = 1;
    if (!span_plus_b.contains(e)) r.witnesses.push_back(std::move(e));
  }
  return r;
}

// accumulator for growing curve families over one cover
class SpanAccumulator {
 public:
  explicit SpanAccumulator(const CoverComplex& cover)
      : cover_(&cover), span_(static_cast<std::size_t>(cover.ambient)) {
    for (int v = 0; v < cover.n; ++v)
      span_.add_row(cover.boundary.row(static_cast<std::size_t>(v)));
  }

  // lifts the curve and adds the classes of all its preimage components;
  // returns the number of components
  int add_curve(const CyclicWord& w) {
    LiftDecomposition lift = lift_decompose(*cover_, w);
    for (const auto& comp : lift.components) span_.add_row(comp.cycle);
    return static_cast<int>(lift.components.size());
  }

  const RowHnf& span() const { return span_; }
  const CoverComplex& cover() const { return *cover_; }
  SpanReport report(int max_witnesses = 3) const {
    return analyze_span(span_, cover_->ambient, max_witnesses);
  }

 private:
  const CoverComplex* cover_;
  RowHnf span_;
};

}  // namespace scspan
