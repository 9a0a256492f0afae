#include "hvar/newton.hpp"

#include "hvar/errors.hpp"
#include "hvar/sequence.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <random>

namespace hvar {

namespace {

using Rational = boost::multiprecision::cpp_rational;

// One inequality  sum coeffs[c] * var_c + constant >= 0  over the columns
// (v_1..v_d, lambda_1..lambda_{k-1}), with the set of original rows it was
// combined from.
struct Row {
    std::vector<Int> coeffs;
    Int constant;
    std::uint64_t history = 0;
};

void normalize(Row& row) {
    Int g = boost::multiprecision::abs(row.constant);
    for (const auto& c : row.coeffs) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(c));
    if (g > 1) {
        for (auto& c : row.coeffs) c /= g;
        row.constant /= g;
    }
}

int affine_rank(const std::vector<std::vector<Rational>>& vectors, int dim) {
    std::vector<std::vector<Rational>> m = vectors;
    int rank = 0;
    for (int col = 0; col < dim && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r) {
            if (m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(rank)], m[static_cast<std::size_t>(pivot)]);
        const auto& prow = m[static_cast<std::size_t>(rank)];
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank) continue;
            auto& row = m[static_cast<std::size_t>(r)];
            if (row[static_cast<std::size_t>(col)] == 0) continue;
            Rational f = row[static_cast<std::size_t>(col)] / prow[static_cast<std::size_t>(col)];
            for (int c = col; c < dim; ++c) row[static_cast<std::size_t>(c)] -= f * prow[static_cast<std::size_t>(c)];
        }
        ++rank;
    }
    return rank;
}

// A valid inequality is a facet when the points and recession directions on
// its boundary span a (d-1)-dimensional affine space.
bool is_facet(const Halfspace& h, const std::vector<ExponentVector>& gens, int dim) {
    std::vector<const ExponentVector*> tight;
    for (const auto& g : gens) {
        std::int64_t dot = 0;
        for (int i = 0; i < dim; ++i) dot += h.normal[static_cast<std::size_t>(i)] * g[static_cast<std::size_t>(i)];
        if (dot == h.offset) tight.push_back(&g);
    }
    if (tight.empty()) return false;
    std::vector<std::vector<Rational>> span;
    for (std::size_t t = 1; t < tight.size(); ++t) {
        std::vector<Rational> diff(static_cast<std::size_t>(dim));
        for (int i = 0; i < dim; ++i) {
            diff[static_cast<std::size_t>(i)] = (*tight[t])[static_cast<std::size_t>(i)] - (*tight[0])[static_cast<std::size_t>(i)];
        }
        span.push_back(std::move(diff));
    }
    for (int i = 0; i < dim; ++i) {
        if (h.normal[static_cast<std::size_t>(i)] == 0) {
            std::vector<Rational> e(static_cast<std::size_t>(dim), 0);
            e[static_cast<std::size_t>(i)] = 1;
            span.push_back(std::move(e));
        }
    }
    return affine_rank(span, dim) == dim - 1;
}

std::vector<Row> eliminate(std::vector<Row> rows, std::size_t column, int eliminated_so_far) {
    std::vector<Row> pos, neg, out;
    for (auto& r : rows) {
        const auto& c = r.coeffs[column];
        if (c > 0) {
            pos.push_back(std::move(r));
        } else if (c < 0) {
            neg.push_back(std::move(r));
        } else {
            out.push_back(std::move(r));
        }
    }
    // Chernikov: after t eliminations an irredundant row combines at most t + 1 originals.
    const int limit = eliminated_so_far + 2;
    for (const auto& p : pos) {
        for (const auto& q : neg) {
            const std::uint64_t hist = p.history | q.history;
            if (std::popcount(hist) > limit) continue;
            Row r;
            const Int wp = -q.coeffs[column];
            const Int wq = p.coeffs[column];
            r.coeffs.resize(p.coeffs.size());
            for (std::size_t i = 0; i < p.coeffs.size(); ++i) r.coeffs[i] = wp * p.coeffs[i] + wq * q.coeffs[i];
            r.constant = wp * p.constant + wq * q.constant;
            r.history = hist;
            normalize(r);
            out.push_back(std::move(r));
        }
    }
    // Drop exact duplicates.
    std::map<std::pair<std::vector<Int>, Int>, std::size_t> seen;
    std::vector<Row> unique;
    for (auto& r : out) {
        auto key = std::make_pair(r.coeffs, r.constant);
        auto it = seen.find(key);
        if (it == seen.end()) {
            seen.emplace(std::move(key), unique.size());
            unique.push_back(std::move(r));
        } else if (std::popcount(r.history) < std::popcount(unique[it->second].history)) {
            unique[it->second].history = r.history;
        }
    }
    return unique;
}

}  // namespace

bool NewtonPolyhedron::contains(const ExponentVector& v, std::int64_t scale) const {
    for (const auto& h : halfspaces) {
        std::int64_t dot = 0;
        for (int i = 0; i < dim; ++i) dot += h.normal[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
        if (dot < h.offset * scale) return false;
    }
    return true;
}

bool np_contains(const NewtonPolyhedron& np, const ExponentVector& v) {
    if (static_cast<int>(v.size()) != np.dim) throw InputError("exponent vector has the wrong length");
    return np.contains(v);
}

NewtonPolyhedron newton(const MonomialIdeal& ideal) {
    const int d = ideal.dim();
    if (d > kMaxNewtonDim) throw DimensionUnsupported("Newton polyhedra are supported for d <= 4");
    const auto& gens = ideal.gens();
    const std::size_t k = gens.size();
    if (static_cast<std::size_t>(d) + k > 64) throw DimensionUnsupported("too many generators for elimination");
    const std::size_t cols = static_cast<std::size_t>(d) + k - 1;
    const auto& last = gens.back();

    // lambda_k = 1 - sum_{j<k} lambda_j has been substituted.
    std::vector<Row> rows;
    std::uint64_t bit = 1;
    for (int i = 0; i < d; ++i, bit <<= 1) {
        Row r;
        r.coeffs.assign(cols, 0);
        r.coeffs[static_cast<std::size_t>(i)] = 1;
        for (std::size_t j = 0; j + 1 < k; ++j) {
            r.coeffs[static_cast<std::size_t>(d) + j] = -(gens[j][static_cast<std::size_t>(i)] - last[static_cast<std::size_t>(i)]);
        }
        r.constant = -last[static_cast<std::size_t>(i)];
        r.history = bit;
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j + 1 < k; ++j, bit <<= 1) {
        Row r;
        r.coeffs.assign(cols, 0);
        r.coeffs[static_cast<std::size_t>(d) + j] = 1;
        r.constant = 0;
        r.history = bit;
        rows.push_back(std::move(r));
    }
    if (k > 1) {
        Row r;
        r.coeffs.assign(cols, 0);
        for (std::size_t j = 0; j + 1 < k; ++j) r.coeffs[static_cast<std::size_t>(d) + j] = -1;
        r.constant = 1;
        r.history = bit;
        rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j + 1 < k; ++j) {
        rows = eliminate(std::move(rows), static_cast<std::size_t>(d) + j, static_cast<int>(j));
    }

    std::vector<Halfspace> candidates;
    for (const auto& r : rows) {
        Halfspace h;
        bool nonzero = false;
        for (int i = 0; i < d; ++i) {
            const Int& c = r.coeffs[static_cast<std::size_t>(i)];
            if (c < 0) throw Error("Newton elimination produced a negative normal");
            nonzero = nonzero || c != 0;
            h.normal.push_back(c.convert_to<std::int64_t>());
        }
        if (!nonzero) continue;
        h.offset = Int(-r.constant).convert_to<std::int64_t>();
        candidates.push_back(std::move(h));
    }
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    NewtonPolyhedron np;
    np.dim = d;
    for (auto& h : candidates) {
        if (is_facet(h, gens, d)) np.halfspaces.push_back(std::move(h));
    }
    return np;
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal, int n) {
    return integral_closure(ideal, newton(ideal), n);
}

MonomialIdeal integral_closure(const MonomialIdeal& ideal, const NewtonPolyhedron& np, int n) {
    if (!ideal.is_m_primary()) throw NotMPrimary("integral closure needs an m-primary ideal");
    if (n < 0) throw InputError("negative power");
    const int d = ideal.dim();
    if (n == 0) return MonomialIdeal::unit(d);
    const auto scale = static_cast<std::int64_t>(n);
    constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::max();

    // Least last coordinate of a point of scale * P above `head`.
    auto height = [&](const std::vector<std::int64_t>& head) {
        std::int64_t h = 0;
        for (const auto& hs : np.halfspaces) {
            std::int64_t dot = 0;
            for (int i = 0; i + 1 < d; ++i) dot += hs.normal[static_cast<std::size_t>(i)] * head[static_cast<std::size_t>(i)];
            const std::int64_t need = hs.offset * scale - dot;
            const std::int64_t a = hs.normal[static_cast<std::size_t>(d - 1)];
            if (a == 0) {
                if (need > 0) return kNone;
                continue;
            }
            if (need > 0) h = std::max(h, (need + a - 1) / a);
        }
        return h;
    };

    if (d == 1) return MonomialIdeal::minimalize(1, {{static_cast<int>(height({}))}});

    std::vector<std::int64_t> bound(static_cast<std::size_t>(d - 1), 0);
    for (const auto& g : ideal.gens()) {
        for (int i = 0; i + 1 < d; ++i) {
            bound[static_cast<std::size_t>(i)] = std::max(bound[static_cast<std::size_t>(i)], scale * g[static_cast<std::size_t>(i)]);
        }
    }
    // Heights over the box, row-major with the first axis slowest.
    std::vector<std::int64_t> stride(static_cast<std::size_t>(d - 1), 1);
    for (int i = d - 3; i >= 0; --i) {
        stride[static_cast<std::size_t>(i)] = stride[static_cast<std::size_t>(i + 1)] * (bound[static_cast<std::size_t>(i + 1)] + 1);
    }
    const std::int64_t cells = stride[0] * (bound[0] + 1);
    std::vector<std::int64_t> heights(static_cast<std::size_t>(cells));
    std::vector<std::int64_t> head(static_cast<std::size_t>(d - 1), 0);
    for (std::int64_t idx = 0; idx < cells; ++idx) {
        std::int64_t rem = idx;
        for (int i = 0; i < d - 1; ++i) {
            head[static_cast<std::size_t>(i)] = rem / stride[static_cast<std::size_t>(i)];
            rem %= stride[static_cast<std::size_t>(i)];
        }
        heights[static_cast<std::size_t>(idx)] = height(head);
    }
    std::vector<ExponentVector> gens;
    for (std::int64_t idx = 0; idx < cells; ++idx) {
        const std::int64_t h = heights[static_cast<std::size_t>(idx)];
        if (h == kNone) continue;
        std::int64_t rem = idx;
        bool minimal = true;
        for (int i = 0; i < d - 1; ++i) {
            const std::int64_t coord = rem / stride[static_cast<std::size_t>(i)];
            rem %= stride[static_cast<std::size_t>(i)];
            head[static_cast<std::size_t>(i)] = coord;
            if (coord > 0 && heights[static_cast<std::size_t>(idx - stride[static_cast<std::size_t>(i)])] <= h) minimal = false;
        }
        if (!minimal) continue;
        ExponentVector v;
        for (auto c : head) v.push_back(static_cast<int>(c));
        v.push_back(static_cast<int>(h));
        gens.push_back(std::move(v));
    }
    return MonomialIdeal::minimalize(d, std::move(gens));
}

ExponentVector sample_integral_element(const MonomialIdeal& j, std::uint64_t seed) {
    if (!j.is_m_primary()) throw NotMPrimary("sampling needs an m-primary ideal");
    const int d = j.dim();
    const NewtonPolyhedron np = newton(j);
    std::vector<int> bound;
    for (int i = 0; i < d; ++i) bound.push_back(j.pure_power(i));
    std::vector<ExponentVector> candidates;
    ExponentVector v(static_cast<std::size_t>(d), 0);
    while (true) {
        if (np.contains(v) && !j.contains(v)) candidates.push_back(v);
        int i = d - 1;
        while (i >= 0) {
            if (++v[static_cast<std::size_t>(i)] < bound[static_cast<std::size_t>(i)]) break;
            v[static_cast<std::size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    if (candidates.empty()) throw Exhausted("the ideal is integrally closed");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

}  // namespace hvar
