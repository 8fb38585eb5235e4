#include "discseq/sequence.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace discseq {

Sequence::Sequence(int start_index, std::vector<double> values)
    : start_(start_index), values_(std::move(values))
{
    if (start_ != 0 && start_ != 1)
        throw Error("start_index must be 0 or 1");
    if (values_.empty())
        throw Error("sequence is empty");
    for (double x : values_)
        if (!std::isfinite(x))
            throw Error("sequence contains a non-finite value");
}

double Sequence::at(Index n) const
{
    if (!contains(n))
        throw Error("index " + std::to_string(n) + " out of range");
    return (*this)[n];
}

ToleranceConfig::ToleranceConfig(double abs, double rel)
    : abs_tol(abs), rel_tol(rel)
{
    if (!std::isfinite(abs) || !std::isfinite(rel) || abs < 0 || rel < 0)
        throw Error("tolerances must be finite and nonnegative");
}

double ToleranceConfig::slack(double x, double y) const noexcept
{
    return std::max(abs_tol, rel_tol * std::max(std::abs(x), std::abs(y)));
}

Sequence forward_differences(const Sequence& u)
{
    if (u.size() < 2)
        throw Error("sequence too short");
    auto vals = u.values();
    std::vector<double> d(vals.size() - 1);
    for (std::size_t k = 0; k + 1 < vals.size(); ++k)
        d[k] = vals[k + 1] - vals[k];
    return Sequence(1, std::move(d));
}

Sequence second_differences(const Sequence& u)
{
    if (u.size() < 3)
        throw Error("sequence too short");
    auto vals = u.values();
    std::vector<double> s(vals.size() - 2);
    for (std::size_t k = 0; k + 2 < vals.size(); ++k)
        s[k] = vals[k] - 2 * vals[k + 1] + vals[k + 2];
    return Sequence(1, std::move(s));
}

MediantReport mediant_bounds(std::span<const double> a, std::span<const double> b)
{
    if (a.empty())
        throw Error("mediant_bounds: empty input");
    if (a.size() != b.size())
        throw Error("mediant_bounds: length mismatch");
    double lo = INFINITY, hi = -INFINITY;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(b[i] > 0))
            throw Error("mediant_bounds: denominators must be positive");
        double r = a[i] / b[i];
        lo = std::min(lo, r);
        hi = std::max(hi, r);
    }
    double num = std::accumulate(a.begin(), a.end(), 0.0);
    double den = std::accumulate(b.begin(), b.end(), 0.0);
    return {lo, num / den, hi};
}

bool convex_at(const Sequence& u, Index n, const ToleranceConfig& tol)
{
    return tol.leq(2 * u[n], u[n - 1] + u[n + 1]);
}

bool concave_at(const Sequence& u, Index n, const ToleranceConfig& tol)
{
    return tol.leq(u[n - 1] + u[n + 1], 2 * u[n]);
}

SequenceFlags classify(const Sequence& u, const ToleranceConfig& tol)
{
    SequenceFlags f;
    for (Index n = u.first_index(); n <= u.last_index(); ++n) {
        f.nonnegative = f.nonnegative && tol.leq(0.0, u[n]);
        if (n < u.last_index()) {
            f.monotone_increasing = f.monotone_increasing && tol.leq(u[n], u[n + 1]);
            f.monotone_decreasing = f.monotone_decreasing && tol.leq(u[n + 1], u[n]);
        }
        if (n > u.first_index() && n < u.last_index()) {
            f.convex = f.convex && convex_at(u, n, tol);
            f.concave = f.concave && concave_at(u, n, tol);
        }
    }
    return f;
}

} // namespace discseq
