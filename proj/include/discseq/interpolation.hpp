#pragma once

// Local quadratic interpolation of sequences, the global Lagrange
// interpolant, and curvature classification of polynomials on an interval.

#include <cstddef>
#include <string_view>
#include <vector>

#include "discseq/sequence.hpp"

namespace discseq {

// c0 + c1 x + c2 x^2 + ..., trailing zeros trimmed; the zero polynomial is (0).
class Polynomial {
public:
    Polynomial() : coeffs_{0.0} {}
    explicit Polynomial(std::vector<double> ascending);

    const std::vector<double>& coefficients() const noexcept { return coeffs_; }
    std::size_t degree() const noexcept { return coeffs_.size() - 1; }
    bool is_zero() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }

    double operator()(double x) const noexcept;
    Polynomial derivative() const;

private:
    std::vector<double> coeffs_;
};

// P(x) = a x^2 + b x + c through (n-1, u_{n-1}), (n, u_n), (n+1, u_{n+1}).
struct QuadraticPiece {
    Index center;
    double a, b, c;

    double lo() const noexcept { return static_cast<double>(center - 1); }
    double hi() const noexcept { return static_cast<double>(center + 1); }
    double operator()(double x) const noexcept { return (a * x + b) * x + c; }
    double second_derivative() const noexcept { return 2 * a; }
};

// Coefficients in the closed form
//   a = (u_{n-1} + u_{n+1})/2 - u_n
//   b = (u_{n+1} - u_{n-1})/2 - 2an
//   c = an^2 - ((u_{n+1} - u_{n-1})/2) n + u_n
QuadraticPiece quadratic_piece(const Sequence& u, Index n);

// Evaluates the piece centred at the nearest interior index to x (ties to
// even), clamped to the interior. Domain is [first_index, last_index].
double spline_eval(const Sequence& u, double x);

// Center chosen by spline_eval for x.
Index spline_center(const Sequence& u, double x);

inline constexpr std::size_t kMaxLagrangeDegree = 64;
// Monomial coefficients lose accuracy quickly past this degree.
inline constexpr std::size_t kLagrangeConditioningDegree = 20;

// Interpolant through (k, u_k) at every absolute index k, built from Newton
// divided differences and expanded to monomial form.
Polynomial lagrange_polynomial(const Sequence& u);

enum class Curvature { convex, concave, both, neither };

std::string_view to_string(Curvature c);

// Sign of p'' on [lo, hi]. Exact for degree <= 3 (affine p''); higher
// degrees sample p'' at both endpoints and 1024 interior uniform points.
// A value counts as nonzero when |p''| exceeds tol.slack(p'', 0).
Curvature polynomial_convexity_on_interval(const Polynomial& p, double lo, double hi,
                                           const ToleranceConfig& tol = {});

} // namespace discseq
