#pragma once

#include "weyl/branching.hpp"
#include "weyl/series.hpp"

namespace weyl {

/// The three fundamental-type probe shapes whose symbolic decompositions
/// the general-rank families state: (a,0,...,0), (0,b,0,...,0) and
/// (0,...,0,c).
enum class SeriesProbe { First, Second, Last };

/// Source weight of the probe at the given parameter value. The Second
/// probe needs source rank >= 3.
Weight series_probe_weight(const SeriesKey& key, SeriesProbe probe,
                           const Rat& param);

/// Instantiates the family's symbolic right-hand side at the parameter
/// value, independent of any projection matrix; serves as an oracle against
/// branch() on series_matrix(). Throws for probes the family does not
/// state (the one-row A1 families state only the First probe).
BranchingResult evaluate_series_rule(const SeriesKey& key, SeriesProbe probe,
                                     const Rat& param);

}  // namespace weyl
