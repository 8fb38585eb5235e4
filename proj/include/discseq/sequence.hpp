#pragma once

// Core sequence type, difference operators and elementary classifiers.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace discseq {

// Raised for every violated precondition in the library.
class Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Absolute index into a sequence (start_index + offset).
using Index = long;

// Finite real-valued sequence u_s, u_{s+1}, ... with s in {0, 1}.
// Values are validated once, at construction: nonempty and all finite.
class Sequence {
public:
    Sequence(int start_index, std::vector<double> values);

    int start_index() const noexcept { return start_; }
    std::size_t size() const noexcept { return values_.size(); }
    Index first_index() const noexcept { return start_; }
    Index last_index() const noexcept { return start_ + static_cast<Index>(values_.size()) - 1; }
    bool contains(Index n) const noexcept { return n >= first_index() && n <= last_index(); }

    // Value at absolute index n; throws Error when out of range.
    double at(Index n) const;
    // Value at absolute index n, unchecked.
    double operator[](Index n) const noexcept { return values_[static_cast<std::size_t>(n - start_)]; }

    std::span<const double> values() const noexcept { return values_; }

    friend bool operator==(const Sequence&, const Sequence&) = default;

private:
    int start_;
    std::vector<double> values_;
};

// x <= y holds within tolerance iff x <= y + max(abs_tol, rel_tol * max(|x|, |y|)).
struct ToleranceConfig {
    double abs_tol = 1e-9;
    double rel_tol = 1e-9;

    ToleranceConfig() = default;
    ToleranceConfig(double abs, double rel);

    double slack(double x, double y) const noexcept;
    bool leq(double x, double y) const noexcept { return x <= y + slack(x, y); }
};

// d_k = u_{k+1} - u_k. The result is indexed from 1 whatever the input base,
// so the difference u_n - u_{n-1} sits at index n for start-0 input.
Sequence forward_differences(const Sequence& u);

// s_k = u_k - 2u_{k+1} + u_{k+2}, indexed from 1 (same convention as above).
Sequence second_differences(const Sequence& u);

struct MediantReport {
    double min_ratio;
    double combined_ratio;
    double max_ratio;
};

// min a_i/b_i <= (sum a)/(sum b) <= max a_i/b_i for positive b.
MediantReport mediant_bounds(std::span<const double> a, std::span<const double> b);

struct SequenceFlags {
    bool nonnegative = true;
    bool monotone_increasing = true;
    bool monotone_decreasing = true;
    bool convex = true;
    bool concave = true;
};

SequenceFlags classify(const Sequence& u, const ToleranceConfig& tol = {});

// 2u_n <= u_{n-1} + u_{n+1} within tolerance, for interior n.
bool convex_at(const Sequence& u, Index n, const ToleranceConfig& tol);
bool concave_at(const Sequence& u, Index n, const ToleranceConfig& tol);

} // namespace discseq
