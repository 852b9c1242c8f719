#pragma once

#include <vector>

#include "jorder/cyclic.hpp"
#include "jorder/poly.hpp"

namespace jorder {

/// All catalog pairs (I1, I2) with p in I1, q in I2 and no point of the
/// declared sample set in both. Disjointness is certified on the sample
/// set only ("sampled-disjoint"); p, q and all catalog endpoints are
/// always part of it.
std::vector<std::pair<ChartInterval, ChartInterval>> separating_intervals(
    const ChartPoint& p, const ChartPoint& q, const std::vector<ChartInterval>& catalog,
    const SampleSpec& spec);

/// Default desk-scale interval catalog for an instance: scaled-unit and
/// sampled endpoints, both orientations, plus intervals through infinity.
std::vector<ChartInterval> default_interval_catalog(const AlgebraDescriptor& d,
                                                    const SampleSpec& spec);

/// Over the eps-extension of `base`: interval membership never depends on
/// the eps-part, and points in the same tangent fiber admit no separating
/// catalog pair.
AxiomReport tangent_fiber_inseparability(const AlgebraDescriptor& base, const SampleSpec& spec);

/// Three exact characterizations of the spectral unit ball ]-e,e[ of
/// Sym(n,Q), n <= 3: the cyclic relation, the two-sided Sylvester test and
/// Sturm root counting of the characteristic polynomial on (-1,1).
AxiomReport spectral_ball_check(int n, const SampleSpec& spec);

} // namespace jorder
