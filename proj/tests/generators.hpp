#pragma once

// Random sequence generators for the property suites. All integer-valued
// unless the name says otherwise, so exact comparisons are meaningful.

#include <algorithm>
#include <random>
#include <vector>

#include "discseq/sequence.hpp"

namespace discseq::testing {

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi)
{
    return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline double uniform_real(Rng& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Nonnegative second differences by construction.
inline Sequence convex_sequence(Rng& rng, std::size_t len, int start)
{
    std::vector<double> u(len);
    double value = static_cast<double>(uniform_int(rng, -20, 20));
    double step = static_cast<double>(uniform_int(rng, -10, 10));
    for (std::size_t k = 0; k < len; ++k) {
        u[k] = value;
        value += step;
        step += static_cast<double>(uniform_int(rng, 0, 4));
    }
    return Sequence(start, std::move(u));
}

inline Sequence random_sequence(Rng& rng, std::size_t len, int start, long lo = -20, long hi = 20)
{
    std::vector<double> u(len);
    for (auto& x : u)
        x = static_cast<double>(uniform_int(rng, lo, hi));
    return Sequence(start, std::move(u));
}

// Convex sequence with a few entries nudged up or down by 1..3.
inline Sequence perturbed_convex(Rng& rng, std::size_t len, int start)
{
    auto base = convex_sequence(rng, len, start);
    std::vector<double> u(base.values().begin(), base.values().end());
    const long hits = uniform_int(rng, 1, 3);
    for (long h = 0; h < hits; ++h) {
        auto k = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(len) - 1));
        u[k] += static_cast<double>(uniform_int(rng, 1, 3) * (uniform_int(rng, 0, 1) ? 1 : -1));
    }
    return Sequence(start, std::move(u));
}

// Mixed corpus: a third convex by construction, a third perturbed, a third random.
inline std::vector<Sequence> convexity_corpus(Rng& rng, std::size_t count, std::size_t min_len = 3,
                                              std::size_t max_len = 50)
{
    std::vector<Sequence> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto len = static_cast<std::size_t>(uniform_int(rng, static_cast<long>(min_len), static_cast<long>(max_len)));
        int start = static_cast<int>(uniform_int(rng, 0, 1));
        switch (i % 3) {
        case 0: out.push_back(convex_sequence(rng, len, start)); break;
        case 1: out.push_back(perturbed_convex(rng, len, start)); break;
        default: out.push_back(random_sequence(rng, len, start)); break;
        }
    }
    return out;
}

// Nonnegative, nonincreasing, start 1. Real-valued when `integral` is false.
inline Sequence decreasing_nonnegative(Rng& rng, std::size_t len, bool integral)
{
    std::vector<double> u(len);
    double value = integral ? static_cast<double>(uniform_int(rng, 0, 50)) : uniform_real(rng, 0, 50);
    for (auto& x : u) {
        x = value;
        double drop = integral ? static_cast<double>(uniform_int(rng, 0, 5)) : uniform_real(rng, 0, 5);
        value = std::max(0.0, value - drop);
    }
    return Sequence(1, std::move(u));
}

// Concave, nondecreasing, nonnegative, start 0: nonincreasing nonnegative increments.
inline Sequence concave_increasing_nonnegative(Rng& rng, std::size_t len)
{
    std::vector<double> u(len);
    double value = static_cast<double>(uniform_int(rng, 0, 20));
    double step = static_cast<double>(uniform_int(rng, 0, 40));
    for (auto& x : u) {
        x = value;
        value += step;
        step = std::max(0.0, step - static_cast<double>(uniform_int(rng, 0, 6)));
    }
    return Sequence(0, std::move(u));
}

} // namespace discseq::testing
