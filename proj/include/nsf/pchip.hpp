#pragma once

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nsf {

// Monotone cubic (Fritsch-Carlson) interpolant on strictly increasing nodes.
// Preserves monotonicity of the data; clamps to the end values outside the window.
class Pchip {
public:
    Pchip() = default;

    Pchip(std::vector<double> x, std::vector<double> y) : x_(std::move(x)), y_(std::move(y)) {
        const std::size_t n = x_.size();
        if (n < 2 || y_.size() != n) throw std::invalid_argument("Pchip: need >=2 matching nodes");
        for (std::size_t i = 1; i < n; ++i)
            if (!(x_[i] > x_[i - 1])) throw std::invalid_argument("Pchip: nodes must be strictly increasing");
        d_.resize(n);
        std::vector<double> slope(n - 1);
        for (std::size_t i = 0; i + 1 < n; ++i) slope[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);
        d_[0] = slope[0];
        d_[n - 1] = slope[n - 2];
        for (std::size_t i = 1; i + 1 < n; ++i) {
            if (slope[i - 1] * slope[i] <= 0.0) {
                d_[i] = 0.0;
            } else {
                // weighted harmonic mean keeps the interpolant monotone
                const double h0 = x_[i] - x_[i - 1];
                const double h1 = x_[i + 1] - x_[i];
                const double w0 = 2.0 * h1 + h0;
                const double w1 = h1 + 2.0 * h0;
                d_[i] = (w0 + w1) / (w0 / slope[i - 1] + w1 / slope[i]);
            }
        }
    }

    double operator()(double x) const { return eval(x).first; }

    double deriv(double x) const { return eval(x).second; }

    // value and first derivative; constant extension outside [x_front, x_back]
    std::pair<double, double> eval(double x) const {
        if (x <= x_.front()) return {y_.front(), 0.0};
        if (x >= x_.back()) return {y_.back(), 0.0};
        const std::size_t i = interval(x);
        const double h = x_[i + 1] - x_[i];
        const double t = (x - x_[i]) / h;
        const double t2 = t * t, t3 = t2 * t;
        const double h00 = 2 * t3 - 3 * t2 + 1;
        const double h10 = t3 - 2 * t2 + t;
        const double h01 = -2 * t3 + 3 * t2;
        const double h11 = t3 - t2;
        const double val = h00 * y_[i] + h10 * h * d_[i] + h01 * y_[i + 1] + h11 * h * d_[i + 1];
        const double dh00 = (6 * t2 - 6 * t) / h;
        const double dh10 = 3 * t2 - 4 * t + 1;
        const double dh01 = (-6 * t2 + 6 * t) / h;
        const double dh11 = 3 * t2 - 2 * t;
        const double der = dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
        return {val, der};
    }

    double x_min() const { return x_.front(); }
    double x_max() const { return x_.back(); }
    bool empty() const { return x_.empty(); }

private:
    std::size_t interval(double x) const {
        std::size_t lo = 0, hi = x_.size() - 1;
        while (hi - lo > 1) {
            const std::size_t mid = (lo + hi) / 2;
            (x_[mid] <= x ? lo : hi) = mid;
        }
        return lo;
    }

    std::vector<double> x_, y_, d_;
};

}  // namespace nsf
