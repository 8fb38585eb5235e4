#include "discseq/convexity.hpp"

#include <cmath>
#include <limits>

namespace discseq {

ConvexityReport check_defining_inequality(const Sequence& u, const ToleranceConfig& tol)
{
    ConvexityReport report;
    for (Index n = u.first_index() + 1; n < u.last_index(); ++n) {
        if (!convex_at(u, n, tol))
            report.violations.push_back({n, 2 * u[n] - u[n - 1] - u[n + 1]});
    }
    report.is_convex = report.violations.empty();
    return report;
}

double slope(const Sequence& u, Index i, Index j)
{
    if (i == j)
        throw Error("degenerate slope");
    if (!u.contains(i) || !u.contains(j))
        throw Error("slope index out of range");
    return (u[j] - u[i]) / static_cast<double>(j - i);
}

namespace {

std::optional<std::array<Index, 3>> first_violating_triple(const Sequence& u, const ToleranceConfig& tol)
{
    const Index lo = u.first_index(), hi = u.last_index();
    for (Index n1 = lo; n1 <= hi - 2; ++n1)
        for (Index n2 = n1 + 1; n2 <= hi - 1; ++n2) {
            const double left = slope(u, n1, n2);
            for (Index n3 = n2 + 1; n3 <= hi; ++n3)
                if (!tol.leq(left, slope(u, n2, n3)))
                    return std::array<Index, 3>{n1, n2, n3};
        }
    return std::nullopt;
}

} // namespace

SlopeCheck check_three_point_slopes(const Sequence& u, const ToleranceConfig& tol, SlopeMode mode)
{
    SlopeCheck result;
    if (mode == SlopeMode::adjacent) {
        for (Index n = u.first_index() + 1; n < u.last_index(); ++n) {
            if (!tol.leq(u[n] - u[n - 1], u[n + 1] - u[n])) {
                result.ok = false;
                break;
            }
        }
        if (result.ok)
            return result;
    }
    result.first_violation = first_violating_triple(u, tol);
    result.ok = !result.first_violation.has_value();
    return result;
}

SupportSequence support_sequence(const Sequence& u)
{
    if (u.size() < 2)
        throw Error("support_sequence: sequence too short");
    const Index lo = u.first_index(), hi = u.last_index();
    const auto width = static_cast<std::size_t>(hi - lo);

    std::vector<double> v(width);
    std::vector<std::pair<Index, Index>> witness(width);

    // Sweep n1 downward keeping the running minimum over n1' >= n1; ties keep
    // the smaller n1, and within one n1 the first (smallest) n2.
    double best = std::numeric_limits<double>::infinity();
    std::pair<Index, Index> best_pair{hi - 1, hi};
    for (Index n1 = hi - 1; n1 >= lo; --n1) {
        double row_min = std::numeric_limits<double>::infinity();
        Index row_arg = n1 + 1;
        for (Index n2 = n1 + 1; n2 <= hi; ++n2) {
            double s = slope(u, n1, n2);
            if (s < row_min) {
                row_min = s;
                row_arg = n2;
            }
        }
        if (row_min <= best) {
            best = row_min;
            best_pair = {n1, row_arg};
        }
        v[static_cast<std::size_t>(n1 - lo)] = best;
        witness[static_cast<std::size_t>(n1 - lo)] = best_pair;
    }
    return SupportSequence{u, std::move(v), lo, hi - 1, std::move(witness)};
}

SupportCheck verify_support(const Sequence& u, const SupportSequence& s, const ToleranceConfig& tol)
{
    if (s.base.first_index() != u.first_index() || s.base.last_index() != u.last_index())
        throw Error("verify_support: support does not match the sequence's index range");
    if (s.first_index < u.first_index() || s.last_index > u.last_index() || s.first_index > s.last_index
        || s.v.size() != static_cast<std::size_t>(s.last_index - s.first_index + 1))
        throw Error("verify_support: malformed support window");

    SupportCheck check;
    for (Index n = s.first_index; n < s.last_index; ++n)
        if (!tol.leq(s.at(n), s.at(n + 1)))
            check.monotone = false;
    for (Index m = u.first_index(); m <= u.last_index(); ++m)
        for (Index n = s.first_index; n <= s.last_index; ++n)
            if (!tol.leq(u[n] - u[m], s.at(n) * static_cast<double>(n - m)))
                check.violations.emplace_back(m, n);
    check.ok = check.monotone && check.violations.empty();
    return check;
}

ConvexityCertificate certify_convexity(const Sequence& u, const ToleranceConfig& tol)
{
    ConvexityCertificate cert;
    cert.defining = check_defining_inequality(u, tol);
    cert.slopes = check_three_point_slopes(u, tol);
    if (u.size() >= 2) {
        cert.support = support_sequence(u);
        cert.support_check = verify_support(u, *cert.support, tol);
    }
    for (Index n = u.first_index() + 1; n < u.last_index(); ++n) {
        const double lhs = 2 * u[n], rhs = u[n - 1] + u[n + 1];
        if (std::abs(lhs - rhs) <= 4 * tol.slack(lhs, rhs))
            cert.borderline = true;
    }
    const bool agree = cert.defining.is_convex == cert.slopes_ok() && cert.defining.is_convex == cert.support_ok();
    if (!agree && !cert.borderline)
        throw std::logic_error("convexity criteria disagree");
    return cert;
}

} // namespace discseq
