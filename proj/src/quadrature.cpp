#include "graphex/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <vector>

#include "graphex/error.hpp"

namespace graphex {
namespace {

// Kronrod abscissae and weights (QUADPACK qk15); odd entries are Gauss nodes.
constexpr double kNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kKronrod[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kGauss[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kKronrod[7];
    double gauss = fc * kGauss[3];
    double fv1[7], fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kNodes[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        kronrod += kKronrod[j] * (fv1[j] + fv2[j]);
        if (j % 2 == 1) gauss += kGauss[j / 2] * (fv1[j] + fv2[j]);
    }
    const double mean = 0.5 * kronrod;
    double asc = kKronrod[7] * std::abs(fc - mean);
    for (int j = 0; j < 7; ++j)
        asc += kKronrod[j] * (std::abs(fv1[j] - mean) + std::abs(fv2[j] - mean));
    asc *= std::abs(half);

    double error = std::abs((kronrod - gauss) * half);
    if (asc != 0.0 && error != 0.0) error = asc * std::min(1.0, std::pow(200.0 * error / asc, 1.5));
    const double value = kronrod * half;
    if (!std::isfinite(value)) {
        std::ostringstream msg;
        msg << "non-finite integrand on [" << a << ", " << b << "]";
        throw NumericalError(msg.str());
    }
    return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const Integrand& f, double a, double b, const QuadratureOptions& options) {
    if (a == b) return {};
    std::priority_queue<Segment> heap;
    Segment first = gauss_kronrod(f, a, b);
    double total = first.value;
    double total_error = first.error;
    heap.push(first);

    auto converged = [&] {
        return total_error <= std::max(options.abs_tol, options.rel_tol * std::abs(total));
    };
    while (!converged()) {
        if (heap.size() >= options.max_intervals) {
            std::ostringstream msg;
            msg << "quadrature did not converge on [" << a << ", " << b << "] after "
                << heap.size() << " intervals: value " << total << ", error estimate "
                << total_error << ", requested rel_tol " << options.rel_tol;
            throw NumericalError(msg.str());
        }
        const Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= std::min(worst.a, worst.b) || mid >= std::max(worst.a, worst.b)) {
            // interval exhausted at machine precision; accept its error as is
            heap.push({worst.a, worst.b, worst.value, 0.0});
            total_error -= worst.error;
            continue;
        }
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }

    // re-sum from the pieces to shed accumulated cancellation
    QuadratureResult result;
    result.intervals = heap.size();
    std::vector<Segment> pieces;
    pieces.reserve(heap.size());
    while (!heap.empty()) {
        pieces.push_back(heap.top());
        heap.pop();
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const Segment& x, const Segment& y) { return std::abs(x.value) < std::abs(y.value); });
    for (const auto& s : pieces) {
        result.value += s.value;
        result.error += s.error;
    }
    return result;
}

QuadratureResult integrate_with_tails(const Integrand& f, double a, double b,
                                      const TailBound& left_tail, const TailBound& right_tail,
                                      const QuadratureOptions& options) {
    QuadratureResult total = integrate(f, a, b, options);
    double left_step = std::max(1.0, b - a);
    double right_step = left_step;
    for (int round = 0; round < 200; ++round) {
        const double target = 0.01 * options.rel_tol * std::abs(total.value);
        const bool grow_left = left_tail && left_tail(a) > target;
        const bool grow_right = right_tail && right_tail(b) > target;
        if (!grow_left && !grow_right) return total;

        QuadratureOptions piece = options;
        piece.abs_tol = std::max(options.abs_tol, 0.1 * options.rel_tol * std::abs(total.value));
        if (grow_left) {
            const auto part = integrate(f, a - left_step, a, piece);
            a -= left_step;
            left_step *= 2.0;
            total.value += part.value;
            total.error += part.error;
            total.intervals += part.intervals;
        }
        if (grow_right) {
            const auto part = integrate(f, b, b + right_step, piece);
            b += right_step;
            right_step *= 2.0;
            total.value += part.value;
            total.error += part.error;
            total.intervals += part.intervals;
        }
    }
    throw NumericalError("tail bounds did not become negligible while extending the range");
}

}  // namespace graphex
