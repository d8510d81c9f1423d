#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "auxmean/errors.hpp"
#include "auxmean/summation.hpp"

namespace auxmean {

// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
    int order() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Rules are computed once per order (Newton on P_n) and shared; the returned
/// reference stays valid for the lifetime of the process.
const GaussLegendreRule& gauss_legendre(int order);

/// Fixed-order rule on [a, b]. `f` may return double or std::complex<double>.
template <class F>
auto integrate_fixed(const GaussLegendreRule& rule, F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    using R = decltype(f(a));
    R acc{};
    for (int i = 0; i < rule.order(); ++i) {
        acc += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return acc * half;
}

struct QuadratureResult {
    double value = 0.0;
    double abs_error = 0.0;
    long evaluations = 0;
};

namespace detail {

struct Gk15Segment {
    double a;
    double b;
    double value;
    double error;
    double magnitude;  // integral of |f| (rounding scale)
    bool operator<(const Gk15Segment& other) const noexcept { return error < other.error; }
};

inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kKronrodNodes[1], [3], [5] and the centre.
inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class F>
Gk15Segment gk15(F& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    std::array<double, 15> fx;
    fx[14] = f(mid);
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kKronrodNodes[j];
        fx[2 * j] = f(mid - dx);
        fx[2 * j + 1] = f(mid + dx);
    }
    double kronrod = kKronrodWeights[7] * fx[14];
    double gauss = kGaussWeights[3] * fx[14];
    double magnitude = kKronrodWeights[7] * std::abs(fx[14]);
    for (int j = 0; j < 7; ++j) {
        const double pair = fx[2 * j] + fx[2 * j + 1];
        kronrod += kKronrodWeights[j] * pair;
        magnitude += kKronrodWeights[j] * (std::abs(fx[2 * j]) + std::abs(fx[2 * j + 1]));
        if (j % 2 == 1) {
            gauss += kGaussWeights[j / 2] * pair;
        }
    }
    // QUADPACK error scaling: |K - G| is pessimistic for smooth integrands
    const double mean = 0.5 * kronrod;
    double spread = kKronrodWeights[7] * std::abs(fx[14] - mean);
    for (int j = 0; j < 7; ++j) {
        spread += kKronrodWeights[j] * (std::abs(fx[2 * j] - mean) + std::abs(fx[2 * j + 1] - mean));
    }
    const double scale = std::abs(half);
    spread *= scale;
    double error = std::abs((kronrod - gauss) * half);
    if (spread != 0.0 && error != 0.0) {
        error = spread * std::min(1.0, std::pow(200.0 * error / spread, 1.5));
    }
    magnitude *= scale;
    error = std::max(error, 50.0 * std::numeric_limits<double>::epsilon() * magnitude);
    return {a, b, kronrod * half, error, magnitude};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod 7/15 on [a, b]. The interval is first cut
/// into `initial_pieces` equal parts (one per half period for oscillatory
/// integrands). Converged when the summed |K15 - G7| estimate is at most
/// max(abs_tol, rel_tol * |value|), or once it falls to the rounding level
/// 100 eps int |f|, below which bisection cannot help.
template <class F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol, double rel_tol,
                                    long initial_pieces = 1, long max_segments = 200000) {
    QuadratureResult out;
    if (a == b) {
        return out;
    }
    initial_pieces = std::max(1L, initial_pieces);
    if (initial_pieces > max_segments) {
        throw BudgetError("integrate_adaptive: initial subdivision exceeds the segment budget");
    }
    std::priority_queue<detail::Gk15Segment> heap;
    double total_value = 0.0;
    double total_error = 0.0;
    double total_magnitude = 0.0;
    const double width = (b - a) / static_cast<double>(initial_pieces);
    for (long i = 0; i < initial_pieces; ++i) {
        const double lo = a + width * static_cast<double>(i);
        const double hi = (i + 1 == initial_pieces) ? b : a + width * static_cast<double>(i + 1);
        auto seg = detail::gk15(f, lo, hi);
        total_value += seg.value;
        total_error += seg.error;
        total_magnitude += seg.magnitude;
        heap.push(seg);
    }
    out.evaluations = 15 * initial_pieces;

    constexpr double kRoundingFloor = 100.0 * std::numeric_limits<double>::epsilon();
    while (total_error > std::max({abs_tol, rel_tol * std::abs(total_value), kRoundingFloor * total_magnitude})) {
        if (static_cast<long>(heap.size()) >= max_segments) {
            throw ConvergenceError("integrate_adaptive: segment budget exhausted before tolerance was met");
        }
        const detail::Gk15Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gk15(f, worst.a, mid);
        const auto right = detail::gk15(f, mid, worst.b);
        out.evaluations += 30;
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        total_magnitude += left.magnitude + right.magnitude - worst.magnitude;
        heap.push(left);
        heap.push(right);
    }

    // Re-sum in interval order so the result does not depend on heap layout.
    std::vector<detail::Gk15Segment> segments;
    segments.reserve(heap.size());
    while (!heap.empty()) {
        segments.push_back(heap.top());
        heap.pop();
    }
    std::sort(segments.begin(), segments.end(),
              [](const auto& x, const auto& y) { return x.a < y.a; });
    CompensatedSum value;
    CompensatedSum error;
    for (const auto& s : segments) {
        value.add(s.value);
        error.add(s.error);
    }
    out.value = value.value();
    out.abs_error = error.value() + kRoundingFloor * total_magnitude;
    return out;
}

}  // namespace auxmean
