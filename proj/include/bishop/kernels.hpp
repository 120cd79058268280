#pragma once

// Batch refutation kernels: evaluate a Real at many indices and look for a
// violated inequality. The *_serial functions are the reference; the
// *_parallel ones spread approximant evaluation and pair checks across
// OpenMP threads and must return exactly what the reference returns.

#include <optional>
#include <vector>

#include "bishop/real.hpp"

namespace bishop::kernels {

/// |x_m - x_n| > 1/m + 1/n at positions i < j of the index list (m = indices[i], n = indices[j]).
struct RegularityViolation {
    Index m;
    Index n;
    Rat distance;
};

/// First violating pair in (i, j) lexicographic order.
std::optional<RegularityViolation> regularity_violation_serial(const Real& x, const IndexSchedule& indices);
std::optional<RegularityViolation> regularity_violation_parallel(const Real& x, const IndexSchedule& indices);

/// Approximants at every index, evaluated concurrently.
std::vector<Rat> approximants_parallel(const Real& x, const IndexSchedule& indices);

/// Same contract as eq_refute / le_refute: the first counterexample in schedule order.
std::optional<EqCounterexample> eq_refute_parallel(const Real& x, const Real& y, const IndexSchedule& budget);
std::optional<LtWitness> le_refute_parallel(const Real& x, const Real& y, const IndexSchedule& budget);

/// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();

}  // namespace bishop::kernels
