#include "xnseq/fit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace xnseq {

FitResult fit_log_slope(const std::vector<FitPoint>& points) {
    std::vector<double> xs, ys;
    xs.reserve(points.size());
    ys.reserve(points.size());
    for (const FitPoint& p : points) {
        if (p.scale <= 0.0) throw std::invalid_argument("fit_log_slope: scale must be positive");
        if (p.abs_error == 0.0) continue;  // exact point, no log
        xs.push_back(std::log(p.scale));
        ys.push_back(std::log(p.abs_error));
    }
    FitResult r;
    r.points_used = xs.size();
    if (xs.size() < 2) {
        r.degenerate = true;
        return r;
    }
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        r.degenerate = true;
        return r;
    }
    r.slope = sxy / sxx;
    return r;
}

std::vector<u64> geometric_grid(u64 start, u64 stop, std::size_t points) {
    if (start < 1 || stop < start) throw std::invalid_argument("geometric_grid: need 1 <= start <= stop");
    if (points < 1) throw std::invalid_argument("geometric_grid: need points >= 1");
    std::vector<u64> grid;
    grid.reserve(points);
    if (points == 1) {
        grid.push_back(start);
        return grid;
    }
    double la = std::log(static_cast<double>(start));
    double lb = std::log(static_cast<double>(stop));
    for (std::size_t i = 0; i < points; ++i) {
        double t = la + (lb - la) * static_cast<double>(i) / static_cast<double>(points - 1);
        u64 v = static_cast<u64>(std::llround(std::exp(t)));
        v = std::max(start, std::min(stop, v));
        grid.push_back(v);
    }
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace xnseq
