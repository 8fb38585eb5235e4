#pragma once

// The three equivalent convexity criteria for sequences: the defining
// inequality 2u_n <= u_{n-1} + u_{n+1}, monotone divided differences over
// index triples, and existence of a monotone support sequence v with
// u_n - u_m <= v_n (n - m).

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "discseq/sequence.hpp"

namespace discseq {

struct ConvexityViolation {
    Index index;
    double defect; // 2u_n - u_{n-1} - u_{n+1}
};

struct ConvexityReport {
    bool is_convex = true;
    std::vector<ConvexityViolation> violations;
};

ConvexityReport check_defining_inequality(const Sequence& u, const ToleranceConfig& tol = {});

// (u_j - u_i) / (j - i)
double slope(const Sequence& u, Index i, Index j);

enum class SlopeMode {
    adjacent,   // O(N): consecutive slopes nondecreasing
    exhaustive, // O(N^3): every triple n1 < n2 < n3
};

struct SlopeCheck {
    bool ok = true;
    // Lexicographically first (n1, n2, n3) with slope(n1,n2) > slope(n2,n3).
    std::optional<std::array<Index, 3>> first_violation;
};

// Both modes report the same first violation: the adjacent mode only decides
// the verdict and falls back to an ordered scan once a failure is known.
SlopeCheck check_three_point_slopes(const Sequence& u, const ToleranceConfig& tol = {},
                                    SlopeMode mode = SlopeMode::adjacent);

// Monotone support sequence on the window [first_index, last_index].
struct SupportSequence {
    Sequence base;
    std::vector<double> v;
    Index first_index;
    Index last_index;
    // Lexicographically smallest pair (n1, n2) attaining v_n.
    std::vector<std::pair<Index, Index>> witnesses;

    double at(Index n) const { return v.at(static_cast<std::size_t>(n - first_index)); }
};

// v_n = min over n <= n1 < n2 <= last of slope(n1, n2). Undefined at the last
// index, where no such pair exists.
SupportSequence support_sequence(const Sequence& u);

struct SupportCheck {
    bool ok = true;
    bool monotone = true;
    // (m, n) pairs with u_n - u_m > v_n (n - m).
    std::vector<std::pair<Index, Index>> violations;
};

// Accepts any candidate v, not only the one built by support_sequence.
SupportCheck verify_support(const Sequence& u, const SupportSequence& s, const ToleranceConfig& tol = {});

struct ConvexityCertificate {
    ConvexityReport defining;
    SlopeCheck slopes;
    std::optional<SupportSequence> support; // absent for single-term input
    SupportCheck support_check;
    // Some interior defect lies within a few tolerance widths of zero, where
    // the criteria's differently scaled comparisons may legitimately split.
    bool borderline = false;

    bool slopes_ok() const { return slopes.ok; }
    bool support_ok() const { return support_check.ok; }
};

// Runs all three criteria. Throws std::logic_error if they disagree on a
// sequence that is not borderline.
ConvexityCertificate certify_convexity(const Sequence& u, const ToleranceConfig& tol = {});

} // namespace discseq
