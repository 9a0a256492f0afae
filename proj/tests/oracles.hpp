#pragma once

// Brute-force reference computations.  None of these call into the code
// paths they are used to check.

#include "hvar/monomial.hpp"
#include "hvar/sequence.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using hvar::ExponentVector;

inline bool in_ideal(const std::vector<ExponentVector>& gens, const ExponentVector& v) {
    for (const auto& g : gens) {
        bool div = true;
        for (std::size_t i = 0; i < v.size(); ++i) div = div && g[i] <= v[i];
        if (div) return true;
    }
    return false;
}

// Calls f on every point of [0, bound_0) x ... x [0, bound_{d-1}).
inline void for_box(const std::vector<int>& bound, const std::function<void(const ExponentVector&)>& f) {
    ExponentVector v(bound.size(), 0);
    for (int b : bound) {
        if (b <= 0) return;
    }
    while (true) {
        f(v);
        int i = static_cast<int>(bound.size()) - 1;
        while (i >= 0) {
            if (++v[static_cast<std::size_t>(i)] < bound[static_cast<std::size_t>(i)]) break;
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) return;
    }
}

// Box large enough to contain every standard monomial.
inline std::vector<int> pure_power_box(const std::vector<ExponentVector>& gens, int dim) {
    std::vector<int> bound(static_cast<std::size_t>(dim), 0);
    for (int i = 0; i < dim; ++i) {
        int best = -1;
        for (const auto& g : gens) {
            bool pure = true;
            for (int k = 0; k < dim; ++k) pure = pure && (k == i || g[static_cast<std::size_t>(k)] == 0);
            if (pure && (best < 0 || g[static_cast<std::size_t>(i)] < best)) best = g[static_cast<std::size_t>(i)];
        }
        bound[static_cast<std::size_t>(i)] = best;
    }
    return bound;
}

inline std::int64_t colength(const std::vector<ExponentVector>& gens, int dim) {
    std::int64_t n = 0;
    for_box(pure_power_box(gens, dim), [&](const ExponentVector& v) {
        if (!in_ideal(gens, v)) ++n;
    });
    return n;
}

// Generators of all r-fold sums, without minimalization.
inline std::vector<ExponentVector> power_gens(const std::vector<ExponentVector>& gens, int r) {
    std::vector<ExponentVector> cur{ExponentVector(gens.front().size(), 0)};
    for (int k = 0; k < r; ++k) {
        std::set<ExponentVector> next;
        for (const auto& u : cur) {
            for (const auto& g : gens) {
                ExponentVector w(u.size());
                for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + g[i];
                next.insert(w);
            }
        }
        // keep it bounded: drop dominated vectors
        std::vector<ExponentVector> keep;
        for (const auto& w : next) {
            bool dom = false;
            for (const auto& u : next) {
                if (u != w && in_ideal({u}, w)) {
                    dom = true;
                    break;
                }
            }
            if (!dom) keep.push_back(w);
        }
        cur = keep;
    }
    return cur;
}

// v is integral over I^n when r v lies in I^{rn} for some r; denominators in
// the test instances are small, so r <= max_r suffices there.
inline bool integral_over_power(const std::vector<ExponentVector>& gens, int n, const ExponentVector& v, int max_r = 6) {
    for (int r = 1; r <= max_r; ++r) {
        ExponentVector w(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) w[i] = r * v[i];
        if (in_ideal(power_gens(gens, r * n), w)) return true;
    }
    return false;
}

// Exhaustive representability: x in <gens> by checking all combinations.
inline bool representable(const std::vector<std::int64_t>& gens, std::int64_t x) {
    if (x == 0) return true;
    if (x < 0) return false;
    std::vector<bool> reach(static_cast<std::size_t>(x) + 1, false);
    reach[0] = true;
    for (std::int64_t y = 1; y <= x; ++y) {
        for (auto g : gens) {
            if (g <= y && reach[static_cast<std::size_t>(y - g)]) {
                reach[static_cast<std::size_t>(y)] = true;
                break;
            }
        }
    }
    return reach[static_cast<std::size_t>(x)];
}

// #(H \ (e + H)) counted directly over a window.
inline std::int64_t apery_count(const std::vector<std::int64_t>& gens, std::int64_t e, std::int64_t window) {
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < window; ++x) {
        if (representable(gens, x) && !(x >= e && representable(gens, x - e))) ++n;
    }
    return n;
}

}  // namespace oracle
