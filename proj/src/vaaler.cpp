#include "xnseq/vaaler.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xnseq {

namespace {

constexpr double kPi = std::numbers::pi;

// Fourier transform of Vaaler's kernel J:
//   Jhat(t) = pi t (1 - |t|) cot(pi t) + |t|,  |t| < 1,  Jhat(0) = 1.
// Takes values in [0, 1] on [-1, 1], which is exactly the coefficient
// bound the approximation needs.
double vaaler_jhat(double t) {
    double at = std::abs(t);
    if (at == 0.0) return 1.0;
    if (at >= 1.0) return 0.0;
    return kPi * at * (1.0 - at) / std::tan(kPi * at) + at;
}

}  // namespace

VaalerPolynomial vaaler_build(double H) {
    if (!(H >= 2.0)) throw std::invalid_argument("vaaler_build: need H >= 2");
    VaalerPolynomial p;
    p.H = H;
    u64 h_max = static_cast<u64>(std::ceil(H)) - 1;  // largest integer < H
    if (static_cast<double>(h_max) >= H) --h_max;
    p.coefficients.reserve(h_max);
    for (u64 h = 1; h <= h_max; ++h)
        p.coefficients.push_back(vaaler_jhat(static_cast<double>(h) / H));
    return p;
}

double vaaler_eval(const VaalerPolynomial& p, double t) {
    // Terms for +h and -h pair up to -c_H(h) sin(2 pi h t) / (pi h).
    KahanSum sum;
    for (u64 h = 1; h <= p.coefficients.size(); ++h) {
        double hd = static_cast<double>(h);
        sum.add(-p.coefficients[h - 1] * std::sin(2.0 * kPi * hd * t) / (kPi * hd));
    }
    return sum.value();
}

double fejer_majorant(double H, double t) {
    if (!(H >= 2.0)) throw std::invalid_argument("fejer_majorant: need H >= 2");
    KahanSum sum;
    sum.add(1.0);
    for (u64 h = 1; static_cast<double>(h) < H; ++h) {
        double hd = static_cast<double>(h);
        sum.add(2.0 * (1.0 - hd / H) * std::cos(2.0 * kPi * hd * t));
    }
    return sum.value() / (2.0 * H);
}

std::pair<double, double> erdos_turan_ratio(const std::vector<double>& points, u64 H) {
    if (points.empty()) throw std::invalid_argument("erdos_turan_ratio: points must be nonempty");
    if (H < 1) throw std::invalid_argument("erdos_turan_ratio: need H >= 1");

    KahanSum psi_sum;
    for (double t : points) psi_sum.add(sawtooth(t));
    double lhs = std::abs(psi_sum.value());

    KahanSum rhs;
    for (u64 h = 1; h <= H; ++h) {
        KahanSum re, im;
        double w = 2.0 * kPi * static_cast<double>(h);
        for (double t : points) {
            re.add(std::cos(w * t));
            im.add(std::sin(w * t));
        }
        rhs.add(std::hypot(re.value(), im.value()) / static_cast<double>(h));
    }
    rhs.add(static_cast<double>(points.size()) / static_cast<double>(H));
    return {lhs, rhs.value()};
}

PhaseSumQuery::PhaseSumQuery(u64 x_, u64 q_, double delta_, double eta_, u64 N_, u64 N_hi_)
    : x(x_), q(q_), delta(delta_), eta(eta_), N(N_), N_hi(N_hi_) {
    if (x < 1) throw std::invalid_argument("PhaseSumQuery: x must be >= 1");
    if (x > kMaxX) throw guard_error("PhaseSumQuery: x exceeds the 2^40 cap");
    if (q < 1) throw std::invalid_argument("PhaseSumQuery: q must be >= 1");
    if (!(delta >= 0.0 && delta <= static_cast<double>(q) + 1.0))
        throw std::invalid_argument("PhaseSumQuery: need 0 <= delta <= q+1");
    if (N < 1 || N_hi < N || N_hi > 2 * N)
        throw std::invalid_argument("PhaseSumQuery: need 1 <= N <= N_hi <= 2N");
}

double phase_sum(const PhaseSumQuery& query) {
    KahanSum sum;
    const double x = static_cast<double>(query.x);
    const double q = static_cast<double>(query.q);
    for (u64 n = query.N + 1; n <= query.N_hi; ++n)
        sum.add(sawtooth(x / (q * static_cast<double>(n) + query.delta) - query.eta));
    return sum.value();
}

PhaseSumReport phase_sum_report(const PhaseSumQuery& query, const ExponentPair& pair) {
    PhaseSumReport rep;
    rep.value = phase_sum(query);
    double k = pair.k.get_d();
    double l = pair.l.get_d();
    double xq = static_cast<double>(query.x) / static_cast<double>(query.q);
    double N = static_cast<double>(query.N);
    rep.pair_bound = std::pow(xq, k / (k + 1.0)) * std::pow(N, (l - k) / (k + 1.0)) + N * N / xq;
    return rep;
}

}  // namespace xnseq
