#include "discseq/subadditivity.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace discseq {

namespace {

void require_base_one(const Sequence& u)
{
    if (u.start_index() != 1)
        throw Error("subadditivity requires index base 1");
}

void partitions_into(long remaining, long min_part, std::vector<long>& prefix, long n,
                     std::vector<PartitionWitness>& out)
{
    if (remaining == 0) {
        out.push_back({n, prefix});
        return;
    }
    for (long part = min_part; part <= remaining; ++part) {
        prefix.push_back(part);
        partitions_into(remaining - part, part, prefix, n, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<PartitionWitness> enumerate_partitions(long n)
{
    if (n < 1 || n > kOracleMaxN)
        throw Error("oracle scale exceeded");
    std::vector<PartitionWitness> out;
    std::vector<long> prefix;
    partitions_into(n, 1, prefix, n, out);
    std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
        return x.parts.size() < y.parts.size();
    });
    return out;
}

double hull_bruteforce(const Sequence& u, long n)
{
    require_base_one(u);
    if (n < 1 || n > std::min<long>(static_cast<long>(u.size()), kOracleMaxN))
        throw Error("oracle scale exceeded");
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : enumerate_partitions(n)) {
        double sum = 0;
        for (long part : p.parts)
            sum += u[part];
        best = std::min(best, sum);
    }
    return best;
}

HullResult subadditive_hull(const Sequence& u)
{
    require_base_one(u);
    const long len = static_cast<long>(u.size());
    std::vector<double> v(static_cast<std::size_t>(len) + 1);
    // first_part[n] is the part peeled off at n; n itself means "trivial".
    std::vector<long> first_part(static_cast<std::size_t>(len) + 1);

    for (long n = 1; n <= len; ++n) {
        double best = std::numeric_limits<double>::infinity();
        long arg = n;
        for (long j = 1; j < n; ++j) {
            const double cand = u[j] + v[static_cast<std::size_t>(n - j)];
            if (cand < best) {
                best = cand;
                arg = j;
            }
        }
        if (u[n] < best) {
            best = u[n];
            arg = n;
        }
        v[static_cast<std::size_t>(n)] = best;
        first_part[static_cast<std::size_t>(n)] = arg;
    }

    std::vector<PartitionWitness> witnesses;
    witnesses.reserve(static_cast<std::size_t>(len));
    for (long n = 1; n <= len; ++n) {
        PartitionWitness w{n, {}};
        for (long rest = n; rest > 0;) {
            const long j = first_part[static_cast<std::size_t>(rest)];
            w.parts.push_back(j);
            rest -= j;
        }
        // Peeled parts come out nondecreasing already; sort to keep the
        // canonical form independent of that argument.
        std::sort(w.parts.begin(), w.parts.end());
        witnesses.push_back(std::move(w));
    }
    return {Sequence(1, std::vector<double>(v.begin() + 1, v.end())), std::move(witnesses)};
}

SubadditivityCheck is_subadditive_pairwise(const Sequence& u, const ToleranceConfig& tol)
{
    require_base_one(u);
    SubadditivityCheck check;
    const long last = u.last_index();
    for (long m = 1; 2 * m <= last; ++m)
        for (long n = m; m + n <= last; ++n)
            if (!tol.leq(u[m + n], u[m] + u[n]))
                check.violations.emplace_back(m, n);
    check.ok = check.violations.empty();
    return check;
}

double epsilon_star(const Sequence& u)
{
    const auto hull = subadditive_hull(u);
    double eps = 0;
    for (long n = 1; n <= u.last_index(); ++n)
        eps = std::max(eps, u[n] - hull.v[n]);
    return eps;
}

bool is_approx_subadditive(const Sequence& u, double epsilon)
{
    require_base_one(u);
    if (!(epsilon >= 0))
        throw Error("epsilon must be nonnegative");
    return epsilon_star(u) <= epsilon;
}

Decomposition decompose(const Sequence& u)
{
    auto hull = subadditive_hull(u);
    std::vector<double> w(u.size());
    double eps = 0;
    for (long n = 1; n <= u.last_index(); ++n) {
        w[static_cast<std::size_t>(n - 1)] = u[n] - hull.v[n];
        eps = std::max(eps, w[static_cast<std::size_t>(n - 1)]);
    }
    return {std::move(hull.v), Sequence(1, std::move(w)), eps, std::move(hull.witnesses)};
}

Composition compose(const Sequence& v, const Sequence& w, const ToleranceConfig& tol)
{
    if (v.start_index() != 1 || w.start_index() != 1)
        throw ComposeError(ComposeFailure::shape_mismatch, "subadditivity requires index base 1");
    if (v.size() != w.size())
        throw ComposeError(ComposeFailure::shape_mismatch, "v and w differ in length");
    if (!is_subadditive_pairwise(v, tol).ok)
        throw ComposeError(ComposeFailure::v_not_subadditive, "v not subadditive");
    double max_w = 0;
    for (double x : w.values()) {
        if (!tol.leq(0.0, x))
            throw ComposeError(ComposeFailure::w_not_nonnegative, "w not nonnegative");
        max_w = std::max(max_w, x);
    }

    std::vector<double> sum(v.size());
    for (long n = 1; n <= v.last_index(); ++n)
        sum[static_cast<std::size_t>(n - 1)] = v[n] + w[n];
    Sequence u(1, std::move(sum));

    const double measured = epsilon_star(u);
    if (!tol.leq(measured, max_w))
        throw std::logic_error("composed sequence exceeds its certified epsilon");
    return {std::move(u), max_w, measured};
}

} // namespace discseq
