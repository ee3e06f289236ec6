#pragma once

#include <optional>

#include "monoclif/polynomial.hpp"

namespace monoclif {

/// Left Dirac operator sum_j e_j d/dx_j acting in the polynomial's own
/// variable tuple (e_j multiplies coefficients from the left).
CliffPoly dirac_left(const CliffPoly& p);
BiPoly dirac_left(const BiPoly& p, Slot slot);

/// Right Dirac operator: (p) d/du = sum_j (d/du_j p) e_j.
CliffPoly dirac_right(const CliffPoly& p);
BiPoly dirac_right(const BiPoly& p, Slot slot);

/// Laplacian sum_j d^2/dx_j^2; equals -dirac_left(dirac_left(p)).
CliffPoly laplacian(const CliffPoly& p);
BiPoly laplacian(const BiPoly& p, Slot slot);

/// Degree k when sum_j x_j d/dx_j p = k p (zero counts as degree 0),
/// nullopt when p is inhomogeneous.
std::optional<int> euler_degree(const CliffPoly& p);

bool is_monogenic(const CliffPoly& p);

/// P(x) * exp(-c|x|^2) with the Gaussian weight carried symbolically.
/// Closed under the Dirac operator, which is the whole point.
struct GaussianSection {
    CliffPoly poly;
    Rational weight_c;

    GaussianSection(CliffPoly p, Rational c);

    friend bool operator==(const GaussianSection& a, const GaussianSection& b) {
        return a.weight_c == b.weight_c && a.poly == b.poly;
    }
    friend bool operator!=(const GaussianSection& a, const GaussianSection& b) {
        return !(a == b);
    }
};

/// d/dx (P e^{-c|x|^2}) = (dP - 2c x P) e^{-c|x|^2}: same weight, new polynomial.
GaussianSection weighted_dirac(const GaussianSection& g);

} // namespace monoclif
