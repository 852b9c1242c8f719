#pragma once

#include <vector>

#include "jorder/chart.hpp"

namespace jorder {

struct ChartInterval {
    ChartPoint a, b;
};

/// The ternary cyclic-order relation on the chart model. False on
/// non-transversal triples; otherwise the triple is normalized so that the
/// third point becomes infinity (directly, by rotation, or by the fixed
/// parity-0 word x -> -(x-b)^{-1}) and membership reduces to a cone test.
bool cyclically_ordered(const ChartPoint& a, const ChartPoint& x, const ChartPoint& b);

bool interval_contains(const ChartInterval& iv, const ChartPoint& x);
bool closed_interval_contains(const ChartInterval& iv, const ChartPoint& x);

/// Condition (1) of the quadruple lemma: (a,b,c) and (a,c,d) both cyclic.
bool is_cyclic_quadruple(const ChartPoint& a, const ChartPoint& b, const ChartPoint& c,
                         const ChartPoint& d);

/// Evaluates all three equivalent quadruple conditions independently and
/// verifies they agree (throws InternalInvariantViolation otherwise).
bool is_cyclic_quadruple_verified(const ChartPoint& a, const ChartPoint& b, const ChartPoint& c,
                                  const ChartPoint& d);

/// The linear order induced at a base point: x <_base y.
bool induced_less(const ChartPoint& base, const ChartPoint& x, const ChartPoint& y);

/// Samples a pairwise transversal triple (finite points and infinity mixed).
struct ChartTriple {
    ChartPoint a, x, b;
};
ChartTriple sample_transversal_triple(Rng& rng, const AlgebraDescriptor& d, long bound);

/// Cyclicity, asymmetry and transitivity over sampled transversal
/// triples/quadruples, plus a non-asserted totality probe (total for rank
/// one, fails with witness from rank two on).
AxiomReport check_cyclic_order_axioms(const AlgebraDescriptor& d, const SampleSpec& spec);

/// Invariance under sampled parity-0 words and reversal (with endpoint
/// swap) under parity-1 words, wherever the actions are defined.
AxiomReport check_invariance_and_reversal(const AlgebraDescriptor& d, const SampleSpec& spec);

/// u,v in ]a,b[ with u <_a v implies ]u,v[ contained in ]a,b[.
AxiomReport check_interval_convexity(const AlgebraDescriptor& d, const SampleSpec& spec);

/// Words fixing b with g(a) in ]a,b[ compress the interval into itself.
AxiomReport check_compression(const AlgebraDescriptor& d, const SampleSpec& spec);

} // namespace jorder
