#include "discseq/interpolation.hpp"

#include <algorithm>
#include <cmath>

namespace discseq {

Polynomial::Polynomial(std::vector<double> ascending)
    : coeffs_(std::move(ascending))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0)
        coeffs_.pop_back();
    if (coeffs_.empty())
        coeffs_.push_back(0.0);
}

double Polynomial::operator()(double x) const noexcept
{
    double y = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        y = y * x + *it;
    return y;
}

Polynomial Polynomial::derivative() const
{
    if (coeffs_.size() == 1)
        return Polynomial{};
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
        d[k - 1] = static_cast<double>(k) * coeffs_[k];
    return Polynomial(std::move(d));
}

QuadraticPiece quadratic_piece(const Sequence& u, Index n)
{
    if (!u.contains(n - 1) || !u.contains(n + 1))
        throw Error("quadratic_piece: index " + std::to_string(n) + " is not interior");
    const double prev = u[n - 1], mid = u[n], next = u[n + 1];
    const double nd = static_cast<double>(n);
    const double a = (prev + next) / 2 - mid;
    const double half_span = (next - prev) / 2;
    const double b = half_span - 2 * a * nd;
    const double c = a * nd * nd - half_span * nd + mid;
    return {n, a, b, c};
}

namespace {

double round_half_even(double x)
{
    double fl = std::floor(x);
    double diff = x - fl;
    if (diff < 0.5)
        return fl;
    if (diff > 0.5)
        return fl + 1;
    return std::fmod(fl, 2.0) == 0 ? fl : fl + 1;
}

} // namespace

Index spline_center(const Sequence& u, double x)
{
    if (u.size() < 3)
        throw Error("spline needs at least 3 terms");
    if (!(x >= static_cast<double>(u.first_index()) && x <= static_cast<double>(u.last_index())))
        throw Error("outside spline domain");
    auto c = static_cast<Index>(round_half_even(x));
    return std::clamp(c, u.first_index() + 1, u.last_index() - 1);
}

double spline_eval(const Sequence& u, double x)
{
    return quadratic_piece(u, spline_center(u, x))(x);
}

Polynomial lagrange_polynomial(const Sequence& u)
{
    const std::size_t count = u.size();
    if (count - 1 > kMaxLagrangeDegree)
        throw Error("lagrange_polynomial: degree exceeds " + std::to_string(kMaxLagrangeDegree));

    // Divided differences in place: dd[k] = f[x_0, ..., x_k] with x_k = start + k.
    std::vector<double> dd(u.values().begin(), u.values().end());
    for (std::size_t level = 1; level < count; ++level)
        for (std::size_t k = count - 1; k >= level; --k)
            dd[k] = (dd[k] - dd[k - 1]) / static_cast<double>(level);

    // Nested expansion: p = dd[0] + (x - x_0)(dd[1] + (x - x_1)(dd[2] + ...)).
    std::vector<double> poly{dd[count - 1]};
    for (std::size_t k = count - 1; k-- > 0;) {
        const double node = static_cast<double>(u.start_index()) + static_cast<double>(k);
        std::vector<double> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] += poly[i];
            next[i] -= node * poly[i];
        }
        next[0] += dd[k];
        poly = std::move(next);
    }
    return Polynomial(std::move(poly));
}

std::string_view to_string(Curvature c)
{
    switch (c) {
    case Curvature::convex: return "convex";
    case Curvature::concave: return "concave";
    case Curvature::both: return "both";
    case Curvature::neither: return "neither";
    }
    return "neither";
}

Curvature polynomial_convexity_on_interval(const Polynomial& p, double lo, double hi, const ToleranceConfig& tol)
{
    if (!(lo < hi))
        throw Error("polynomial_convexity_on_interval: need lo < hi");
    const Polynomial second = p.derivative().derivative();
    if (second.is_zero())
        return Curvature::both;

    std::vector<double> xs{lo, hi};
    if (second.degree() > 1) {
        constexpr int grid = 1024;
        for (int k = 1; k <= grid; ++k)
            xs.push_back(lo + (hi - lo) * k / (grid + 1));
    }
    bool positive = false, negative = false;
    for (double x : xs) {
        const double y = second(x);
        const double eps = tol.slack(y, 0.0);
        positive = positive || y > eps;
        negative = negative || y < -eps;
    }
    if (positive && negative)
        return Curvature::neither;
    if (positive)
        return Curvature::convex;
    if (negative)
        return Curvature::concave;
    return Curvature::both;
}

} // namespace discseq
