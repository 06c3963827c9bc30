#pragma once

#include <stdexcept>
#include <vector>

namespace nsf {

// Uniform 1D grid in the shock-frame coordinate.
struct Grid {
    double xi_min = 0.0;
    double xi_max = 1.0;
    int n = 16;

    double h() const { return (xi_max - xi_min) / (n - 1); }
    double point(int i) const { return xi_min + h() * i; }

    void validate() const {
        if (n < 16) throw std::invalid_argument("Grid: need at least 16 points");
        if (!(xi_max > xi_min)) throw std::invalid_argument("Grid: xi_max must exceed xi_min");
    }
};

// Grid-sampled primitive variables at one instant.
struct Field {
    std::vector<double> v, u, theta;
    double t = 0.0;

    explicit Field(int n = 0) : v(n, 1.0), u(n, 0.0), theta(n, 1.0) {}
    int size() const { return static_cast<int>(v.size()); }
};

}  // namespace nsf
