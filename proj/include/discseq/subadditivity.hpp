#pragma once

// Subadditive and approximately subadditive sequences (index base 1): the
// subadditive minorant over all integer partitions, the minimal stability
// parameter eps*, and the split u = v + w into a subadditive v and 0 <= w <= eps*.

#include <string>
#include <utility>
#include <vector>

#include "discseq/sequence.hpp"

namespace discseq {

// Multiset partition of n, parts in nondecreasing order.
struct PartitionWitness {
    long n;
    std::vector<long> parts;

    friend bool operator==(const PartitionWitness&, const PartitionWitness&) = default;
};

inline constexpr long kOracleMaxN = 30;

// Every partition of n exactly once, including (n) itself. 1 <= n <= 30.
std::vector<PartitionWitness> enumerate_partitions(long n);

// min of u_{n_1} + ... + u_{n_k} over all partitions of n, by enumeration.
double hull_bruteforce(const Sequence& u, long n);

struct HullResult {
    Sequence v;
    std::vector<PartitionWitness> witnesses; // witnesses[k] is for index k + 1
};

// v_1 = u_1, v_n = min(u_n, min_{1<=j<n} u_j + v_{n-j}). Each witness is the
// lexicographically smallest minimizing partition.
HullResult subadditive_hull(const Sequence& u);

struct SubadditivityCheck {
    bool ok = true;
    std::vector<std::pair<long, long>> violations; // (m, n), m <= n
};

// u_{m+n} <= u_m + u_n within tolerance for all m <= n with m + n in range.
SubadditivityCheck is_subadditive_pairwise(const Sequence& u, const ToleranceConfig& tol = {});

// max_n (u_n - v_n); 0 exactly when the hull reproduces u.
double epsilon_star(const Sequence& u);

// u_n <= sum over any partition + epsilon, i.e. epsilon_star(u) <= epsilon.
bool is_approx_subadditive(const Sequence& u, double epsilon);

struct Decomposition {
    Sequence v;
    Sequence w;
    double epsilon_star;
    std::vector<PartitionWitness> witnesses;
};

Decomposition decompose(const Sequence& u);

// Hypothesis that compose() found violated.
enum class ComposeFailure {
    shape_mismatch,
    v_not_subadditive,
    w_not_nonnegative,
};

class ComposeError : public Error {
public:
    ComposeError(ComposeFailure which, const std::string& what)
        : Error(what), which_(which) {}
    ComposeFailure which() const noexcept { return which_; }

private:
    ComposeFailure which_;
};

struct Composition {
    Sequence u;
    double certified_epsilon; // max w
    double measured_epsilon;  // epsilon_star(u); <= certified_epsilon within tolerance
};

// u = v + w for subadditive v and nonnegative w; certifies u is
// max(w)-approximately subadditive.
Composition compose(const Sequence& v, const Sequence& w, const ToleranceConfig& tol = {});

} // namespace discseq
