#include "hvar/monomial.hpp"

#include "hvar/errors.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace hvar {

bool divides(const ExponentVector& a, const ExponentVector& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) return false;
    }
    return true;
}

int total_degree(const ExponentVector& v) { return std::accumulate(v.begin(), v.end(), 0); }

namespace {

// Prefix-minimum Fenwick tree over the second coordinate, used to answer
// "is (y, z) dominated by an earlier vector" in the three-variable sweep.
class MinFenwick {
public:
    explicit MinFenwick(int size) : tree_(static_cast<std::size_t>(size) + 1, std::numeric_limits<int>::max()) {}
    void update(int pos, int value) {
        for (int i = pos + 1; i < static_cast<int>(tree_.size()); i += i & -i) {
            tree_[static_cast<std::size_t>(i)] = std::min(tree_[static_cast<std::size_t>(i)], value);
        }
    }
    int prefix_min(int pos) const {
        int out = std::numeric_limits<int>::max();
        for (int i = pos + 1; i > 0; i -= i & -i) out = std::min(out, tree_[static_cast<std::size_t>(i)]);
        return out;
    }

private:
    std::vector<int> tree_;
};

std::vector<ExponentVector> minimal_elements(int dim, std::vector<ExponentVector> raw) {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    std::vector<ExponentVector> out;
    if (dim == 1) {
        out.push_back(raw.front());
        return out;
    }
    if (dim == 2) {
        int best = std::numeric_limits<int>::max();
        for (auto& v : raw) {
            if (v[1] < best) {
                best = v[1];
                out.push_back(std::move(v));
            }
        }
        return out;
    }
    if (dim == 3) {
        int ymax = 0;
        for (const auto& v : raw) ymax = std::max(ymax, v[1]);
        MinFenwick seen(ymax + 1);
        for (auto& v : raw) {
            if (seen.prefix_min(v[1]) <= v[2]) continue;
            seen.update(v[1], v[2]);
            out.push_back(std::move(v));
        }
        return out;
    }
    // Lexicographic order puts every potential divisor before its multiples.
    for (auto& v : raw) {
        bool dominated = false;
        for (const auto& u : out) {
            if (divides(u, v)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

constexpr std::int64_t kInfinite = -1;

// Number of lattice points outside the ideal, or kInfinite.  Slices the
// staircase along the first axis: between consecutive breakpoints of the
// first coordinate the slice ideal does not change.
std::int64_t count_slices(int dim, std::vector<ExponentVector> gens) {
    if (gens.empty()) return kInfinite;
    for (const auto& g : gens) {
        bool zero = std::all_of(g.begin(), g.end(), [](int e) { return e == 0; });
        if (zero) return 0;
    }
    if (dim == 1) {
        int best = gens.front()[0];
        for (const auto& g : gens) best = std::min(best, g[0]);
        return best;
    }
    std::sort(gens.begin(), gens.end());
    if (gens.front()[0] > 0) return kInfinite;
    if (dim == 2) {
        std::int64_t total = 0;
        int height = std::numeric_limits<int>::max();
        for (std::size_t i = 0; i < gens.size();) {
            const int t = gens[i][0];
            while (i < gens.size() && gens[i][0] == t) {
                height = std::min(height, gens[i][1]);
                ++i;
            }
            if (height == 0) return total;
            if (i == gens.size()) return kInfinite;
            total += static_cast<std::int64_t>(gens[i][0] - t) * height;
        }
        return kInfinite;
    }
    std::int64_t total = 0;
    std::vector<ExponentVector> active;
    for (std::size_t i = 0; i < gens.size();) {
        const int t = gens[i][0];
        while (i < gens.size() && gens[i][0] == t) {
            active.emplace_back(gens[i].begin() + 1, gens[i].end());
            ++i;
        }
        active = minimal_elements(dim - 1, std::move(active));
        const std::int64_t slice = count_slices(dim - 1, active);
        if (slice == 0) return total;
        if (slice == kInfinite || i == gens.size()) return kInfinite;
        total += static_cast<std::int64_t>(gens[i][0] - t) * slice;
    }
    return kInfinite;
}

}  // namespace

MonomialIdeal MonomialIdeal::minimalize(int dim, std::vector<ExponentVector> raw) {
    if (dim < 1) throw InputError("ambient dimension must be positive");
    if (raw.empty()) throw InputError("an ideal needs at least one generator");
    for (const auto& v : raw) {
        if (static_cast<int>(v.size()) != dim) throw InputError("exponent vector has the wrong length");
        for (int e : v) {
            if (e < 0) throw InputError("exponents must be nonnegative");
        }
    }
    return MonomialIdeal(dim, minimal_elements(dim, std::move(raw)));
}

MonomialIdeal MonomialIdeal::unit(int dim) { return minimalize(dim, {ExponentVector(static_cast<std::size_t>(dim), 0)}); }

MonomialIdeal MonomialIdeal::maximal(int dim) {
    std::vector<ExponentVector> gens;
    for (int i = 0; i < dim; ++i) {
        ExponentVector v(static_cast<std::size_t>(dim), 0);
        v[static_cast<std::size_t>(i)] = 1;
        gens.push_back(v);
    }
    return minimalize(dim, std::move(gens));
}

MonomialIdeal MonomialIdeal::pure_powers(const std::vector<int>& exponents) {
    const int dim = static_cast<int>(exponents.size());
    std::vector<ExponentVector> gens;
    for (int i = 0; i < dim; ++i) {
        ExponentVector v(static_cast<std::size_t>(dim), 0);
        v[static_cast<std::size_t>(i)] = exponents[static_cast<std::size_t>(i)];
        gens.push_back(v);
    }
    return minimalize(dim, std::move(gens));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && total_degree(gens_.front()) == 0;
}

int MonomialIdeal::pure_power(int axis) const {
    int best = -1;
    for (const auto& g : gens_) {
        bool pure = true;
        for (int i = 0; i < dim_; ++i) {
            if (i != axis && g[static_cast<std::size_t>(i)] != 0) {
                pure = false;
                break;
            }
        }
        if (pure && (best < 0 || g[static_cast<std::size_t>(axis)] < best)) best = g[static_cast<std::size_t>(axis)];
    }
    return best;
}

bool MonomialIdeal::is_m_primary() const {
    for (int i = 0; i < dim_; ++i) {
        if (pure_power(i) < 0) return false;
    }
    return true;
}

bool MonomialIdeal::contains(const ExponentVector& v) const {
    for (const auto& g : gens_) {
        if (divides(g, v)) return true;
    }
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const auto& g : other.gens_) {
        if (!contains(g)) return false;
    }
    return true;
}

std::int64_t MonomialIdeal::colength() const {
    if (!is_m_primary()) throw NotMPrimary("colength of a monomial ideal that is not m-primary");
    const std::int64_t n = count_slices(dim_, gens_);
    if (n < 0) throw NotMPrimary("staircase is unbounded");
    return n;
}

int MonomialIdeal::order() const {
    int best = std::numeric_limits<int>::max();
    for (const auto& g : gens_) best = std::min(best, total_degree(g));
    return best;
}

std::int64_t staircase_count(int dim, std::vector<ExponentVector> gens) {
    const std::int64_t n = count_slices(dim, std::move(gens));
    if (n < 0) throw NotMPrimary("staircase is unbounded");
    return n;
}

namespace {

void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim() != b.dim()) throw InputError("monomial ideals live in different rings");
}

}  // namespace

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_dim(a, b);
    std::vector<ExponentVector> raw = a.gens();
    raw.insert(raw.end(), b.gens().begin(), b.gens().end());
    return MonomialIdeal::minimalize(a.dim(), std::move(raw));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_dim(a, b);
    std::vector<ExponentVector> raw;
    raw.reserve(a.nu() * b.nu());
    for (const auto& u : a.gens()) {
        for (const auto& v : b.gens()) {
            ExponentVector w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + v[i];
            raw.push_back(std::move(w));
        }
    }
    return MonomialIdeal::minimalize(a.dim(), std::move(raw));
}

MonomialIdeal power(const MonomialIdeal& a, int n) {
    if (n < 0) throw InputError("negative ideal power");
    MonomialIdeal out = MonomialIdeal::unit(a.dim());
    for (int k = 0; k < n; ++k) out = product(out, a);
    return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
    require_same_dim(a, b);
    std::vector<ExponentVector> raw;
    raw.reserve(a.nu() * b.nu());
    for (const auto& u : a.gens()) {
        for (const auto& v : b.gens()) {
            ExponentVector w(u.size());
            for (std::size_t i = 0; i < u.size(); ++i) w[i] = std::max(u[i], v[i]);
            raw.push_back(std::move(w));
        }
    }
    return MonomialIdeal::minimalize(a.dim(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& j, const ExponentVector& c) {
    if (static_cast<int>(c.size()) != j.dim()) throw InputError("exponent vector has the wrong length");
    std::vector<ExponentVector> raw;
    raw.reserve(j.nu());
    for (const auto& g : j.gens()) {
        ExponentVector w(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) w[i] = std::max(g[i] - c[i], 0);
        raw.push_back(std::move(w));
    }
    return MonomialIdeal::minimalize(j.dim(), std::move(raw));
}

MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i) {
    require_same_dim(j, i);
    MonomialIdeal out = MonomialIdeal::unit(j.dim());
    for (const auto& h : i.gens()) {
        if (j.contains(h)) continue;
        out = intersect(out, colon(j, h));
    }
    return out;
}

std::vector<ExponentVector> extra_generators(const MonomialIdeal& j, const MonomialIdeal& i) {
    std::vector<ExponentVector> out;
    for (const auto& g : i.gens()) {
        if (!j.contains(g)) out.push_back(g);
    }
    return out;
}

}  // namespace hvar
