#pragma once

#include <cstddef>
#include <vector>

#include "xnseq/common.hpp"

namespace xnseq {

// Result of a least-squares slope fit of log|err| against log(scale).
// Points with err == 0 are skipped; if everything is skipped (or fewer
// than two usable points remain) the fit is reported as degenerate,
// which callers treat as the distinguished "exact" outcome.
struct FitResult {
    double slope = 0.0;
    bool degenerate = false;
    std::size_t points_used = 0;
};

// One sample for the fit: scale > 0 (e.g. x or x/q) and |error| >= 0.
struct FitPoint {
    double scale;
    double abs_error;
};

FitResult fit_log_slope(const std::vector<FitPoint>& points);

// Geometric grid of integers from start to stop (inclusive) with the
// requested number of points, rounded and deduplicated ascending.
std::vector<u64> geometric_grid(u64 start, u64 stop, std::size_t points);

}  // namespace xnseq
