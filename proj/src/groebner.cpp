#include "hvar/groebner.hpp"

#include "hvar/errors.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <string>

namespace hvar {

namespace {

const GfpPolynomial* find_reducer(const PolyRing& ring, const Monomial& m, const std::vector<GfpPolynomial>& basis) {
    for (const auto& g : basis) {
        if (mono_divides(g.lead().mono, m, ring.nvars)) return &g;
    }
    return nullptr;
}

// Reduces f against `basis` (monic leading coefficients not required).  The
// working polynomial lives in an ordered map so a reduction step costs
// O(|g| log |f|) rather than a full copy.
GfpPolynomial reduce(const PolyRing& ring, const GfpPolynomial& f, const std::vector<GfpPolynomial>& basis, bool full) {
    auto desc = [&ring](const Monomial& a, const Monomial& b) { return ring.compare(a, b) > 0; };
    std::map<Monomial, std::uint32_t, decltype(desc)> acc(desc);
    for (const auto& t : f.terms()) acc.emplace(t.mono, t.coef);
    std::vector<Term> rem;
    while (!acc.empty()) {
        auto it = acc.begin();
        const GfpPolynomial* g = find_reducer(ring, it->first, basis);
        if (!g) {
            if (!full) {
                for (const auto& [m, c] : acc) rem.push_back(Term{m, c});
                break;
            }
            rem.push_back(Term{it->first, it->second});
            acc.erase(it);
            continue;
        }
        const std::uint32_t c = ring.mul(it->second, ring.inv(g->lead().coef));
        const Monomial shift = mono_div(it->first, g->lead().mono, ring.nvars);
        acc.erase(it);
        for (std::size_t k = 1; k < g->terms().size(); ++k) {
            const Term& t = g->terms()[k];
            auto [jt, fresh] = acc.try_emplace(mono_mul(t.mono, shift, ring.nvars), 0u);
            jt->second = ring.sub(jt->second, ring.mul(c, t.coef));
            if (jt->second == 0) acc.erase(jt);
        }
    }
    return GfpPolynomial::from_terms(ring, std::move(rem));
}

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
};

}  // namespace

GfpPolynomial normal_form(const PolyRing& ring, const GfpPolynomial& f, const std::vector<GfpPolynomial>& basis) {
    return reduce(ring, f, basis, true);
}

std::vector<GfpPolynomial> buchberger(const PolyRing& ring, std::vector<GfpPolynomial> gens) {
    std::vector<GfpPolynomial> g;
    std::vector<std::vector<char>> pending;

    auto cmp = [&](const Pair& a, const Pair& b) {
        const int c = ring.compare(a.lcm, b.lcm);
        if (c != 0) return c > 0;  // min-heap on lcm
        if (a.j != b.j) return a.j > b.j;
        return a.i > b.i;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(cmp)> queue(cmp);

    auto insert = [&](GfpPolynomial f) {
        f = PolyOps::make_monic(ring, f);
        const std::size_t n = g.size();
        for (auto& row : pending) row.push_back(0);
        pending.emplace_back(n + 1, 0);
        for (std::size_t i = 0; i < n; ++i) {
            pending[i][n] = 1;
            pending[n][i] = 1;
            queue.push(Pair{i, n, mono_lcm(g[i].lead().mono, f.lead().mono, ring.nvars)});
        }
        g.push_back(std::move(f));
    };

    // Cheapest generators first keeps early reductions small.
    std::stable_sort(gens.begin(), gens.end(), [&](const GfpPolynomial& a, const GfpPolynomial& b) {
        if (a.is_zero() || b.is_zero()) return b.is_zero() && !a.is_zero();
        return ring.compare(a.lead().mono, b.lead().mono) < 0;
    });
    for (auto& f : gens) {
        if (f.is_zero()) continue;
        GfpPolynomial r = reduce(ring, f, g, true);
        if (!r.is_zero()) insert(std::move(r));
    }

    while (!queue.empty()) {
        const Pair p = queue.top();
        queue.pop();
        pending[p.i][p.j] = 0;
        pending[p.j][p.i] = 0;
        const auto& fi = g[p.i];
        const auto& fj = g[p.j];
        if (mono_coprime(fi.lead().mono, fj.lead().mono, ring.nvars)) continue;
        if (fi.is_monomial() && fj.is_monomial()) continue;
        bool chain = false;
        for (std::size_t k = 0; k < g.size() && !chain; ++k) {
            if (k == p.i || k == p.j) continue;
            if (pending[p.i][k] || pending[p.j][k]) continue;
            chain = mono_divides(g[k].lead().mono, p.lcm, ring.nvars);
        }
        if (chain) continue;
        // Both leading coefficients are 1.
        GfpPolynomial s = PolyOps::mul_term(ring, fi, mono_div(p.lcm, fi.lead().mono, ring.nvars), 1);
        s = PolyOps::sub_mul(ring, s, 1, mono_div(p.lcm, fj.lead().mono, ring.nvars), fj);
        GfpPolynomial r = reduce(ring, std::move(s), g, true);
        if (!r.is_zero()) insert(std::move(r));
    }

    // Minimal basis, then tail reduction.
    std::vector<GfpPolynomial> minimal;
    for (std::size_t i = 0; i < g.size(); ++i) {
        bool redundant = false;
        for (std::size_t k = 0; k < g.size() && !redundant; ++k) {
            if (k == i) continue;
            if (mono_divides(g[k].lead().mono, g[i].lead().mono, ring.nvars)) {
                // Equal leading terms: keep the earlier one.
                redundant = !(g[k].lead().mono == g[i].lead().mono) || k < i;
            }
        }
        if (!redundant) minimal.push_back(g[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const GfpPolynomial& a, const GfpPolynomial& b) {
        return ring.compare(a.lead().mono, b.lead().mono) < 0;
    });
    std::vector<GfpPolynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<GfpPolynomial> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t k = 0; k < minimal.size(); ++k) {
            if (k != i) others.push_back(minimal[k]);
        }
        GfpPolynomial tail(GfpPolynomial::from_terms(
            ring, std::vector<Term>(minimal[i].terms().begin() + 1, minimal[i].terms().end())));
        GfpPolynomial r = normal_form(ring, tail, others);
        std::vector<Term> terms{minimal[i].lead()};
        terms.insert(terms.end(), r.terms().begin(), r.terms().end());
        reduced.push_back(PolyOps::make_monic(ring, GfpPolynomial::from_terms(ring, std::move(terms))));
    }
    return reduced;
}

GroebnerIdeal::GroebnerIdeal(PolyRing ring, std::vector<GfpPolynomial> gens) : ring_(ring), gens_(std::move(gens)) {
    if (ring_.nvars < 1 || ring_.nvars > kMaxVars) throw InputError("unsupported number of variables");
    if (!is_prime(ring_.prime)) throw InputError("characteristic must be prime");
    if (ring_.order.elim_vars != 0) throw InputError("ideals are stored in degrevlex");
    gens_.erase(std::remove_if(gens_.begin(), gens_.end(), [](const GfpPolynomial& f) { return f.is_zero(); }),
                gens_.end());
    if (gens_.empty()) gens_.push_back(GfpPolynomial{});
}

GroebnerIdeal GroebnerIdeal::from_monomial(const MonomialIdeal& ideal, std::uint32_t prime) {
    PolyRing ring{ideal.dim(), prime, {}};
    std::vector<GfpPolynomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(GfpPolynomial::monomial(ring, g));
    return GroebnerIdeal(ring, std::move(gens));
}

GroebnerIdeal GroebnerIdeal::maximal(int nvars, std::uint32_t prime) {
    return from_monomial(MonomialIdeal::maximal(nvars), prime);
}

const std::vector<GfpPolynomial>& GroebnerIdeal::basis() const {
    std::call_once(cache_->once, [this] {
        std::vector<GfpPolynomial> nonzero;
        for (const auto& f : gens_) {
            if (!f.is_zero()) nonzero.push_back(f);
        }
        cache_->basis = buchberger(ring_, std::move(nonzero));
    });
    return cache_->basis;
}

bool GroebnerIdeal::contains(const GfpPolynomial& f) const { return normal_form(ring_, f, basis()).is_zero(); }

bool GroebnerIdeal::contains(const GroebnerIdeal& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const GfpPolynomial& f) { return contains(f); });
}

bool GroebnerIdeal::is_unit() const {
    const auto& b = basis();
    return b.size() == 1 && b.front().lead().mono == Monomial{};
}

bool GroebnerIdeal::all_monomial() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const GfpPolynomial& f) { return f.is_zero() || f.is_monomial(); });
}

namespace {

void require_same_ring(const GroebnerIdeal& a, const GroebnerIdeal& b) {
    if (!(a.ring() == b.ring())) throw InputError("polynomial ideals live in different rings");
}

bool term_less(const GfpPolynomial& a, const GfpPolynomial& b) {
    return std::lexicographical_compare(
        a.terms().begin(), a.terms().end(), b.terms().begin(), b.terms().end(),
        [](const Term& x, const Term& y) { return x.mono.exp < y.mono.exp || (x.mono.exp == y.mono.exp && x.coef < y.coef); });
}

std::vector<GfpPolynomial> dedupe(const PolyRing& ring, std::vector<GfpPolynomial> gens) {
    for (auto& f : gens) f = PolyOps::make_monic(ring, f);
    std::sort(gens.begin(), gens.end(), term_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return gens;
}

std::vector<ExponentVector> exponents_of(const GroebnerIdeal& a) {
    std::vector<ExponentVector> out;
    for (const auto& f : a.gens()) {
        ExponentVector v;
        for (int i = 0; i < a.dim(); ++i) v.push_back(f.lead().mono.exp[static_cast<std::size_t>(i)]);
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

GroebnerIdeal GroebnerIdeal::with_local_floor(const MonomialIdeal& f) const {
    if (f.dim() != dim() || !f.is_m_primary()) throw InputError("a local floor must be an m-primary monomial ideal");
    // Any m-primary ideal inside a floor is a floor; the pure powers alone
    // keep the Groebner computations small.
    std::vector<int> pure;
    for (int v = 0; v < dim(); ++v) pure.push_back(f.pure_power(v));
    GroebnerIdeal out = *this;
    out.floor_ = MonomialIdeal::pure_powers(pure);
    return out;
}

GroebnerIdeal GroebnerIdeal::floored() const {
    if (!floor_) return *this;
    std::vector<GfpPolynomial> gens = gens_;
    for (const auto& g : floor_->gens()) gens.push_back(GfpPolynomial::monomial(ring_, g));
    return GroebnerIdeal(ring_, std::move(gens));
}

namespace {

// A floor for x: the recorded one, or x itself when x is an m-primary
// monomial ideal.
std::optional<MonomialIdeal> floor_of(const GroebnerIdeal& x) {
    if (x.local_floor()) return x.local_floor();
    if (!x.all_monomial() || x.gens().front().is_zero()) return std::nullopt;
    std::vector<ExponentVector> exps;
    for (const auto& g : x.gens()) exps.emplace_back(g.lead().mono.exp.begin(), g.lead().mono.exp.begin() + x.dim());
    MonomialIdeal m = MonomialIdeal::minimalize(x.dim(), std::move(exps));
    if (!m.is_m_primary()) return std::nullopt;
    return m;
}

}  // namespace

GroebnerIdeal sum(const GroebnerIdeal& a, const GroebnerIdeal& b) {
    require_same_ring(a, b);
    std::vector<GfpPolynomial> gens = a.gens();
    gens.insert(gens.end(), b.gens().begin(), b.gens().end());
    GroebnerIdeal out(a.ring(), dedupe(a.ring(), std::move(gens)));
    if (a.local_floor() && b.local_floor()) return out.with_local_floor(sum(*a.local_floor(), *b.local_floor()));
    if (a.local_floor()) return out.with_local_floor(*a.local_floor());
    if (b.local_floor()) return out.with_local_floor(*b.local_floor());
    return out;
}

GroebnerIdeal product(const GroebnerIdeal& a, const GroebnerIdeal& b) {
    require_same_ring(a, b);
    const auto& ring = a.ring();
    GroebnerIdeal out;
    if (a.all_monomial() && b.all_monomial() && !a.gens().front().is_zero() && !b.gens().front().is_zero()) {
        const MonomialIdeal p = product(MonomialIdeal::minimalize(a.dim(), exponents_of(a)),
                                        MonomialIdeal::minimalize(b.dim(), exponents_of(b)));
        out = GroebnerIdeal::from_monomial(p, ring.prime);
    } else {
        std::vector<GfpPolynomial> gens;
        for (const auto& f : a.gens()) {
            for (const auto& g : b.gens()) gens.push_back(PolyOps::mul(ring, f, g));
        }
        gens = dedupe(ring, std::move(gens));
        if (gens.size() > kMaxProductGens) {
            throw CapExceeded("product has " + std::to_string(gens.size()) + " generators");
        }
        out = GroebnerIdeal(ring, std::move(gens));
    }
    if (!a.local_floor() && !b.local_floor()) return out;
    const auto fa = floor_of(a);
    const auto fb = floor_of(b);
    if (fa && fb) return out.with_local_floor(product(*fa, *fb));
    return out;
}

GroebnerIdeal power(const GroebnerIdeal& a, int n) {
    if (n < 0) throw InputError("negative ideal power");
    GroebnerIdeal out(a.ring(), {GfpPolynomial::constant(a.ring(), 1)});
    for (int k = 0; k < n; ++k) out = product(out, a);
    return out;
}

namespace {

bool zero_dimensional(const PolyRing& ring, const std::vector<GfpPolynomial>& basis) {
    for (int v = 0; v < ring.nvars; ++v) {
        bool found = false;
        for (const auto& g : basis) {
            const Monomial& m = g.lead().mono;
            bool pure = m.exp[static_cast<std::size_t>(v)] > 0;
            for (int i = 0; i < ring.nvars && pure; ++i) {
                if (i != v && m.exp[static_cast<std::size_t>(i)] != 0) pure = false;
            }
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

std::int64_t staircase_of(const PolyRing& ring, const std::vector<GfpPolynomial>& basis) {
    std::vector<ExponentVector> leads;
    for (const auto& g : basis) {
        ExponentVector v;
        for (int i = 0; i < ring.nvars; ++i) v.push_back(g.lead().mono.exp[static_cast<std::size_t>(i)]);
        leads.push_back(std::move(v));
    }
    return staircase_count(ring.nvars, std::move(leads));
}

bool is_unit_basis(const std::vector<GfpPolynomial>& basis) {
    return basis.size() == 1 && basis.front().lead().mono == Monomial{};
}

// x_i^k reduces to zero for some k <= colength for every variable exactly
// when the origin is the only zero of the ideal.
bool origin_supported(const PolyRing& ring, const std::vector<GfpPolynomial>& basis, std::int64_t colength) {
    for (int v = 0; v < ring.nvars; ++v) {
        Monomial x;
        x.exp[static_cast<std::size_t>(v)] = 1;
        GfpPolynomial r = normal_form(ring, GfpPolynomial::from_terms(ring, {Term{x, 1}}), basis);
        std::int64_t k = 1;
        while (!r.is_zero() && k <= colength) {
            r = normal_form(ring, PolyOps::mul_term(ring, r, x, 1), basis);
            ++k;
        }
        if (!r.is_zero()) return false;
    }
    return true;
}

std::vector<GfpPolynomial> maximal_power_gens(const PolyRing& ring, int n) {
    std::vector<GfpPolynomial> out;
    Monomial m;
    // Compositions of n into nvars parts.
    std::vector<int> e(static_cast<std::size_t>(ring.nvars), 0);
    e[0] = n;
    while (true) {
        for (int i = 0; i < ring.nvars; ++i) m.exp[static_cast<std::size_t>(i)] = static_cast<std::uint16_t>(e[static_cast<std::size_t>(i)]);
        out.push_back(GfpPolynomial::from_terms(ring, {Term{m, 1}}));
        // Next composition in reverse-lexicographic enumeration.
        int last = ring.nvars - 1;
        if (e[static_cast<std::size_t>(last)] == n) break;
        int i = last - 1;
        while (e[static_cast<std::size_t>(i)] == 0) --i;
        e[static_cast<std::size_t>(i)] -= 1;
        const int tail = e[static_cast<std::size_t>(last)] + 1;
        e[static_cast<std::size_t>(last)] = 0;
        e[static_cast<std::size_t>(i + 1)] = tail;
    }
    return out;
}

}  // namespace

std::int64_t global_colength(const GroebnerIdeal& a) {
    const auto& basis = a.basis();
    if (basis.front().is_zero()) throw NotMPrimary("zero ideal");
    if (is_unit_basis(basis)) return 0;
    if (!zero_dimensional(a.ring(), basis)) throw NotMPrimary("ideal is not zero-dimensional");
    return staircase_of(a.ring(), basis);
}

std::int64_t local_colength(const GroebnerIdeal& a, int cap) {
    if (a.local_floor()) return global_colength(a.floored());
    const auto& ring = a.ring();
    const auto& basis = a.basis();
    if (basis.front().is_zero()) throw NonStabilizing("zero ideal is not m-primary");
    if (is_unit_basis(basis)) return 0;
    // The origin is a zero only when no basis element has a constant term.
    for (const auto& g : basis) {
        if (g.terms().back().mono == Monomial{}) {
            // g(0) != 0 makes g a unit locally.
            return 0;
        }
    }
    if (zero_dimensional(ring, basis)) {
        const std::int64_t global = staircase_of(ring, basis);
        if (origin_supported(ring, basis, global)) return global;
    }
    std::int64_t prev = -1;
    for (int n = 2; n <= cap; n *= 2) {
        std::vector<GfpPolynomial> gens = basis;
        auto extra = maximal_power_gens(ring, n);
        gens.insert(gens.end(), extra.begin(), extra.end());
        const auto b = buchberger(ring, std::move(gens));
        const std::int64_t c = is_unit_basis(b) ? 0 : staircase_of(ring, b);
        if (c == prev) return c;
        prev = c;
    }
    throw NonStabilizing("local colength did not stabilize by N = " + std::to_string(cap));
}

bool local_ideal_equal(const GroebnerIdeal& a, const GroebnerIdeal& b) {
    if (!b.contains(a)) throw InputError("local equality test needs A inside B");
    return local_colength(a) == local_colength(b);
}

GroebnerIdeal intersect(const GroebnerIdeal& a, const GroebnerIdeal& b) {
    require_same_ring(a, b);
    const PolyRing& base = a.ring();
    if (base.nvars + 1 > kMaxVars) throw DimensionUnsupported("no room for an elimination variable");
    PolyRing ext{base.nvars + 1, base.prime, TermOrder{1}};
    Monomial t;
    t.exp[0] = 1;
    std::vector<GfpPolynomial> gens;
    for (const auto& f : a.basis()) {
        if (f.is_zero()) continue;
        gens.push_back(PolyOps::mul_term(ext, shift_variables(ext, f, 1), t, 1));
    }
    for (const auto& f : b.basis()) {
        if (f.is_zero()) continue;
        const GfpPolynomial g = shift_variables(ext, f, 1);
        gens.push_back(PolyOps::sub(ext, g, PolyOps::mul_term(ext, g, t, 1)));
    }
    const auto elim = buchberger(ext, std::move(gens));
    std::vector<GfpPolynomial> out;
    for (const auto& g : elim) {
        const bool free_of_t = std::all_of(g.terms().begin(), g.terms().end(), [](const Term& x) { return x.mono.exp[0] == 0; });
        if (free_of_t) out.push_back(PolyOps::reorder(base, unshift_variables(base, g, 1)));
    }
    if (out.empty()) out.push_back(GfpPolynomial{});
    return GroebnerIdeal(base, std::move(out));
}

GroebnerIdeal colon(const GroebnerIdeal& a, const GfpPolynomial& h) {
    const PolyRing& ring = a.ring();
    if (h.is_zero()) throw InputError("colon by the zero polynomial");
    if (a.contains(h)) return GroebnerIdeal(ring, {GfpPolynomial::constant(ring, 1)});
    const GroebnerIdeal meet = intersect(a, GroebnerIdeal(ring, {h}));
    std::vector<GfpPolynomial> gens;
    for (const auto& g : meet.basis()) gens.push_back(PolyOps::divide_exact(ring, g, h));
    return GroebnerIdeal(ring, std::move(gens));
}

GroebnerIdeal colon(const GroebnerIdeal& a, const GroebnerIdeal& i) {
    require_same_ring(a, i);
    if (a.local_floor()) return colon(a.floored(), i).with_local_floor(*a.local_floor());
    const PolyRing& ring = a.ring();
    GroebnerIdeal out(ring, {GfpPolynomial::constant(ring, 1)});
    bool first = true;
    for (const auto& g : i.gens()) {
        if (g.is_zero() || a.contains(g)) continue;
        GroebnerIdeal part = colon(a, g);
        out = first ? part : intersect(out, part);
        first = false;
    }
    return out;
}

SampledReduction random_minimal_reduction(const GroebnerIdeal& i, int dim, std::uint64_t seed) {
    const PolyRing& ring = i.ring();
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::uint32_t> coef(1, ring.prime - 1);
    SampledReduction out;
    std::vector<GfpPolynomial> gens;
    for (int k = 0; k < dim; ++k) {
        std::vector<std::uint32_t> row;
        GfpPolynomial f;
        for (const auto& g : i.gens()) {
            const std::uint32_t c = coef(rng);
            row.push_back(c);
            f = PolyOps::add(ring, f, PolyOps::scale(ring, g, c));
        }
        out.coeffs.push_back(std::move(row));
        gens.push_back(std::move(f));
    }
    out.q = GroebnerIdeal(ring, std::move(gens));
    return out;
}

int reduction_number(const GroebnerIdeal& q, const GroebnerIdeal& i, int cap) {
    require_same_ring(q, i);
    GroebnerIdeal ipow(i.ring(), {GfpPolynomial::constant(i.ring(), 1)});
    for (int s = 0; s <= cap; ++s) {
        GroebnerIdeal next = product(ipow, i);
        if (local_ideal_equal(product(q, ipow), next)) return s;
        ipow = std::move(next);
    }
    throw CapExceeded("no reduction number up to " + std::to_string(cap));
}

}  // namespace hvar
