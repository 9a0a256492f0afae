#include "hvar/invariants.hpp"

#include "hvar/errors.hpp"
#include "hvar/fiber_cone.hpp"
#include "hvar/newton.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

namespace hvar {

RingContext RingContext::poly(int d, std::uint32_t prime) {
    if (d < 1 || d > kMaxVars - 1) throw DimensionUnsupported("polynomial rings need 1 <= d <= " + std::to_string(kMaxVars - 1));
    if (!is_prime(prime)) throw InputError("characteristic " + std::to_string(prime) + " is not prime");
    RingContext ctx;
    ctx.kind = Kind::poly;
    ctx.dim = d;
    ctx.prime = prime;
    return ctx;
}

RingContext RingContext::numerical(SemigroupPtr h) {
    if (!h) throw InputError("missing semigroup");
    RingContext ctx;
    ctx.kind = Kind::semigroup;
    ctx.dim = 1;
    ctx.semigroup = std::move(h);
    return ctx;
}

bool RingContext::gorenstein() const { return kind == Kind::poly || semigroup->is_symmetric(); }

bool RingContext::regular() const { return kind == Kind::poly || semigroup->multiplicity() == 1; }

const MonomialIdeal& Ideal::monomial() const {
    if (!is_monomial()) throw InputError("expected a monomial ideal");
    return std::get<MonomialIdeal>(v_);
}

const SemigroupIdeal& Ideal::semigroup() const {
    if (!is_semigroup()) throw InputError("expected a semigroup ideal");
    return std::get<SemigroupIdeal>(v_);
}

const GroebnerIdeal& Ideal::groebner() const {
    if (!is_groebner()) throw InputError("expected a polynomial ideal");
    return std::get<GroebnerIdeal>(v_);
}

GroebnerIdeal Ideal::to_groebner(std::uint32_t prime) const {
    if (is_monomial()) return GroebnerIdeal::from_monomial(monomial(), prime);
    return groebner();
}

std::size_t Ideal::generator_count() const {
    switch (engine()) {
        case Engine::monomial: return monomial().nu();
        case Engine::semigroup: return semigroup().nu();
        case Engine::groebner: return groebner().gens().size();
    }
    return 0;
}

Ideal maximal_ideal(const RingContext& ctx) {
    if (ctx.kind == RingContext::Kind::semigroup) return SemigroupIdeal::maximal(ctx.semigroup);
    return MonomialIdeal::maximal(ctx.dim);
}

namespace {

std::uint32_t prime_of(const Ideal& a, const Ideal& b) {
    if (a.is_groebner()) return a.groebner().ring().prime;
    if (b.is_groebner()) return b.groebner().ring().prime;
    return kDefaultPrime;
}

void require_same_kind(const Ideal& a, const Ideal& b) {
    if (a.is_semigroup() != b.is_semigroup()) throw InputError("ideals live in different rings");
}

// Dispatches a binary operation to the monomial or semigroup engine when both
// operands allow it, and to the Groebner engine otherwise.
template <class Mono, class Semi, class Gb>
auto binary(const Ideal& a, const Ideal& b, Mono mono, Semi semi, Gb gb) {
    require_same_kind(a, b);
    if (a.is_semigroup()) return semi(a.semigroup(), b.semigroup());
    if (a.is_monomial() && b.is_monomial()) return mono(a.monomial(), b.monomial());
    const std::uint32_t p = prime_of(a, b);
    return gb(a.to_groebner(p), b.to_groebner(p));
}

int lowest_degree(const GfpPolynomial& f, int nvars) {
    int best = std::numeric_limits<int>::max();
    for (const auto& t : f.terms()) best = std::min(best, t.mono.degree(0, nvars));
    return best;
}

// Largest number of nonzero generators summing to x, for x in H.
int factorization_length(const NumericalSemigroup& h, std::int64_t x) {
    std::vector<int> best(static_cast<std::size_t>(x) + 1, -1);
    best[0] = 0;
    for (std::int64_t y = 1; y <= x; ++y) {
        for (auto g : h.generators()) {
            if (g > y) break;
            const int prev = best[static_cast<std::size_t>(y - g)];
            if (prev >= 0) best[static_cast<std::size_t>(y)] = std::max(best[static_cast<std::size_t>(y)], prev + 1);
        }
    }
    return best[static_cast<std::size_t>(x)];
}

}  // namespace

std::int64_t colength(const Ideal& i) {
    switch (i.engine()) {
        case Ideal::Engine::monomial: return i.monomial().colength();
        case Ideal::Engine::semigroup: return i.semigroup().colength();
        case Ideal::Engine::groebner: return local_colength(i.groebner());
    }
    return 0;
}

std::int64_t nu(const Ideal& i) {
    if (i.is_monomial()) return static_cast<std::int64_t>(i.monomial().nu());
    if (i.is_semigroup()) return static_cast<std::int64_t>(i.semigroup().nu());
    const GroebnerIdeal& g = i.groebner();
    const GroebnerIdeal mi = product(GroebnerIdeal::maximal(g.dim(), g.ring().prime), g);
    return local_colength(mi) - local_colength(g);
}

int order(const Ideal& i) {
    if (i.is_monomial()) return i.monomial().order();
    if (i.is_semigroup()) {
        const auto& h = *i.semigroup().ambient();
        int best = std::numeric_limits<int>::max();
        for (auto g : i.semigroup().gens()) best = std::min(best, factorization_length(h, g));
        return best;
    }
    const GroebnerIdeal& g = i.groebner();
    int best = std::numeric_limits<int>::max();
    for (const auto& f : g.gens()) {
        if (!f.is_zero()) best = std::min(best, lowest_degree(f, g.dim()));
    }
    return best;
}

Ideal sum(const Ideal& a, const Ideal& b) {
    return binary(
        a, b, [](const auto& x, const auto& y) { return Ideal(sum(x, y)); },
        [](const auto& x, const auto& y) { return Ideal(sum(x, y)); },
        [](const auto& x, const auto& y) { return Ideal(sum(x, y)); });
}

Ideal product(const Ideal& a, const Ideal& b) {
    return binary(
        a, b, [](const auto& x, const auto& y) { return Ideal(product(x, y)); },
        [](const auto& x, const auto& y) { return Ideal(product(x, y)); },
        [](const auto& x, const auto& y) { return Ideal(product(x, y)); });
}

Ideal power(const Ideal& a, int n) {
    switch (a.engine()) {
        case Ideal::Engine::monomial: return power(a.monomial(), n);
        case Ideal::Engine::semigroup: return power(a.semigroup(), n);
        case Ideal::Engine::groebner: return power(a.groebner(), n);
    }
    return a;
}

Ideal colon(const Ideal& a, const Ideal& b) {
    return binary(
        a, b, [](const auto& x, const auto& y) { return Ideal(colon(x, y)); },
        [](const auto& x, const auto& y) { return Ideal(colon(x, y)); },
        [](const auto& x, const auto& y) { return Ideal(colon(x, y)); });
}

bool contains(const Ideal& a, const Ideal& b) {
    return binary(
        a, b, [](const auto& x, const auto& y) { return x.contains(y); },
        [](const auto& x, const auto& y) { return x.contains(y); },
        [](const auto& x, const auto& y) { return x.contains(y); });
}

bool local_equal(const Ideal& a, const Ideal& b) {
    return binary(
        a, b, [](const auto& x, const auto& y) { return x == y; }, [](const auto& x, const auto& y) { return x == y; },
        [](const GroebnerIdeal& x, const GroebnerIdeal& y) {
            const std::int64_t both = local_colength(sum(x, y));
            return local_colength(x) == both && local_colength(y) == both;
        });
}

Ideal integral_closure(const Ideal& i) {
    if (i.is_monomial()) return integral_closure(i.monomial(), 1);
    if (i.is_semigroup()) {
        const SemigroupIdeal& e = i.semigroup();
        const auto& h = e.ambient();
        // Valuations at least min_value; elements past conductor + e are
        // already multiples of the listed ones.
        const std::int64_t v = e.min_value();
        const std::int64_t top = std::max(v, h->conductor()) + h->multiplicity();
        std::vector<std::int64_t> gens;
        for (std::int64_t x = v; x < top; ++x) {
            if (h->contains(x)) gens.push_back(x);
        }
        return SemigroupIdeal::make(h, gens);
    }
    throw InputError("integral closure needs a monomial or semigroup ideal");
}

// ---------------------------------------------------------------------------
// Coefficient extraction

namespace {

struct AdaptiveFit {
    FitReport fit;
    LengthSequence seq;
};

// Tabulates value(1..H) and fits; H starts at 2(d+3) and doubles up to max_n.
AdaptiveFit adaptive_fit(const std::function<Int(int)>& value, int ctx_dim, int degree, int max_n) {
    const int window = degree + 1 + default_guard(degree);
    if (max_n < window) throw InputError("max-n " + std::to_string(max_n) + " is below the fitting window " + std::to_string(window));
    int horizon = std::min(std::max(2 * (ctx_dim + 3), window), max_n);
    AdaptiveFit out;
    out.seq.start_n = 1;
    while (true) {
        while (static_cast<int>(out.seq.values.size()) < horizon) {
            out.seq.values.push_back(value(static_cast<int>(out.seq.values.size()) + 1));
        }
        try {
            out.fit = fit_binomial(out.seq, degree, default_guard(degree));
            return out;
        } catch (const NonPolynomial&) {
            if (horizon >= max_n) {
                throw NonStabilizing("sequence not polynomial of degree " + std::to_string(degree) + " up to n = " + std::to_string(max_n));
            }
            horizon = std::min(2 * horizon, max_n);
        }
    }
}

// Powers I^1, I^2, ... computed once each.
class PowerCache {
public:
    explicit PowerCache(Ideal base) : base_(std::move(base)) {}

    const Ideal& get(int n) {
        while (static_cast<int>(powers_.size()) < n) {
            powers_.push_back(powers_.empty() ? base_ : product(powers_.back(), base_));
        }
        return powers_.at(static_cast<std::size_t>(n - 1));
    }

private:
    Ideal base_;
    std::vector<Ideal> powers_;
};

bool is_parameter_ideal(const RingContext& ctx, const Ideal& i) {
    return i.is_groebner() && static_cast<int>(i.generator_count()) == ctx.dim;
}

HilbertData hilbert_from(const std::function<Int(int)>& value, int d, int max_n) {
    AdaptiveFit a = adaptive_fit(value, d, d, max_n);
    HilbertData out;
    out.poly = a.fit.poly;
    out.postulation = a.fit.postulation_index;
    out.sequence = std::move(a.seq);
    return out;
}

FiberData fiber_from(const std::function<Int(int)>& nu_at, int d, int max_n) {
    AdaptiveFit direct = adaptive_fit(nu_at, d, d - 1, max_n);
    // sum_{r<n} nu(I^r) with nu(I^0) = 1
    std::vector<Int> partial{Int(1)};
    auto iterated = [&](int n) {
        while (static_cast<int>(partial.size()) < n) partial.push_back(partial.back() + nu_at(static_cast<int>(partial.size())));
        return partial.at(static_cast<std::size_t>(n - 1));
    };
    AdaptiveFit summed = adaptive_fit(iterated, d, d, max_n);
    FiberData out;
    out.poly = direct.fit.poly;
    out.sequence = std::move(direct.seq);
    out.f0_iterated = summed.fit.poly.coeffs.front();
    if (out.f0_iterated != out.poly.coeffs.front()) {
        throw OracleMismatch("f_0 from nu(I^n) is " + out.poly.coeffs.front().str() + " but the iterated sum gives " +
                             out.f0_iterated.str());
    }
    return out;
}

void require_m_primary(const Ideal& i) {
    if (i.is_monomial() && !i.monomial().is_m_primary()) throw NotMPrimary("ideal is not m-primary");
}

}  // namespace

HilbertData hilbert_coeffs(const RingContext& ctx, const Ideal& i, int max_n) {
    require_m_primary(i);
    const int d = ctx.dim;
    if (is_parameter_ideal(ctx, i)) {
        // Cohen-Macaulay: gr_Q(R) is a polynomial ring over R/Q.
        const Int base = colength(i);
        HilbertData out;
        out.method = "parameter";
        out.poly.degree = d;
        out.poly.coeffs.assign(static_cast<std::size_t>(d) + 1, Int(0));
        out.poly.coeffs[0] = base;
        out.sequence = tabulate(out.poly, 1, 2 * (d + 3));
        out.postulation = 0;
        return out;
    }
    PowerCache powers(i);
    return hilbert_from([&](int n) { return Int(colength(powers.get(n))); }, d, max_n);
}

FiberData fiber_coeffs(const RingContext& ctx, const Ideal& j, int max_n) {
    require_m_primary(j);
    PowerCache powers(j);
    return fiber_from([&](int n) { return Int(nu(powers.get(n))); }, ctx.dim, max_n);
}

NormalData normal_coeffs(const RingContext& ctx, const Ideal& i, int max_n) {
    if (!i.is_monomial()) throw InputError("normal filtration needs a monomial ideal");
    const MonomialIdeal& base = i.monomial();
    if (!base.is_m_primary()) throw NotMPrimary("ideal is not m-primary");
    const NewtonPolyhedron np = newton(base);
    std::vector<MonomialIdeal> closures;
    auto closure_at = [&](int n) -> const MonomialIdeal& {
        while (static_cast<int>(closures.size()) < n) {
            closures.push_back(integral_closure(base, np, static_cast<int>(closures.size()) + 1));
        }
        return closures.at(static_cast<std::size_t>(n - 1));
    };
    NormalData out;
    out.hilbert = hilbert_from([&](int n) { return Int(closure_at(n).colength()); }, ctx.dim, max_n);
    out.fiber = fiber_from([&](int n) { return Int(static_cast<std::int64_t>(closure_at(n).nu())); }, ctx.dim, max_n);
    return out;
}

// ---------------------------------------------------------------------------
// Reductions

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    // splitmix64 finalizer over the combined words
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

// Coefficient rows of Q over the minimal generators of a monomial I, when
// every generator of Q is such a combination.
std::optional<LinearReduction> as_linear_reduction(const GroebnerIdeal& q, const MonomialIdeal& i) {
    LinearReduction out{i, {}, q.ring().prime};
    for (const auto& f : q.gens()) {
        std::vector<std::uint32_t> row(i.gens().size(), 0);
        for (const auto& t : f.terms()) {
            const ExponentVector e(t.mono.exp.begin(), t.mono.exp.begin() + i.dim());
            auto it = std::find(i.gens().begin(), i.gens().end(), e);
            if (it == i.gens().end()) return std::nullopt;
            row[static_cast<std::size_t>(it - i.gens().begin())] = t.coef;
        }
        out.coeffs.push_back(std::move(row));
    }
    return out;
}

// Once I^{s+1} = Q I^s, the monomial ideal I^{s+1} lies in Q R_m, which
// lets later local computations on Q skip the stabilization search.
Ideal with_reduction_floor(const Ideal& q, const Ideal& i, int s) {
    if (!q.is_groebner()) return q;
    std::optional<MonomialIdeal> f;
    if (i.is_monomial()) {
        f = i.monomial();
    } else if (i.is_groebner() && i.groebner().local_floor()) {
        f = *i.groebner().local_floor();
    }
    if (!f) return q;
    return q.groebner().with_local_floor(power(*f, s + 1));
}

}  // namespace

ReductionReport reduction_number(const RingContext& ctx, const Ideal& q, const Ideal& i, int cap) {
    if (!contains(i, q)) throw InputError("reduction must be contained in the ideal");
    ReductionReport out;
    out.q = q;
    out.prime = ctx.prime;
    out.is_minimal = static_cast<int>(q.generator_count()) == ctx.dim;
    if (q.is_groebner() && i.is_monomial()) {
        if (auto lin = as_linear_reduction(q.groebner(), i.monomial())) {
            out.reduction_number = fiber_reduction_number(*lin, cap);
            out.found = true;
            out.q = with_reduction_floor(q, i, out.reduction_number);
            return out;
        }
    }
    if (q.is_groebner() || i.is_groebner()) {
        out.reduction_number = reduction_number(q.to_groebner(ctx.prime), i.to_groebner(ctx.prime), cap);
        out.found = true;
        out.q = with_reduction_floor(q, i, out.reduction_number);
        return out;
    }
    Ideal ipow = i.is_semigroup() ? Ideal(SemigroupIdeal::unit(ctx.semigroup)) : Ideal(MonomialIdeal::unit(ctx.dim));
    for (int s = 0; s <= cap; ++s) {
        Ideal next = product(ipow, i);
        if (local_equal(product(q, ipow), next)) {
            out.reduction_number = s;
            out.found = true;
            return out;
        }
        ipow = std::move(next);
    }
    throw CapExceeded("no reduction number up to " + std::to_string(cap));
}

ReductionReport minimal_reduction(const RingContext& ctx, const Ideal& i, int samples, std::uint64_t seed, int cap) {
    require_m_primary(i);
    if (i.is_semigroup()) {
        const SemigroupIdeal& e = i.semigroup();
        ReductionReport out = reduction_number(ctx, SemigroupIdeal::make(e.ambient(), {e.min_value()}), i, cap);
        out.samples_tried = 1;
        return out;
    }
    if (static_cast<int>(i.generator_count()) == ctx.dim && i.is_monomial()) {
        ReductionReport out = reduction_number(ctx, i, i, cap);
        out.samples_tried = 0;
        return out;
    }
    if (samples < 1) throw InputError("need at least one sample");
    const GroebnerIdeal gi = i.to_groebner(ctx.prime);
    // nu(I) > d forces I != Q, so 1 is the floor for any sampled Q.
    const int floor = 1;
    ReductionReport best;
    best.prime = ctx.prime;
    best.sampled = true;
    best.is_minimal = true;
    for (int k = 0; k < samples; ++k) {
        SampledReduction s = random_minimal_reduction(gi, ctx.dim, mix_seed(seed, static_cast<std::uint64_t>(k)));
        best.samples_tried = k + 1;
        int r = -1;
        try {
            if (i.is_monomial()) {
                r = fiber_reduction_number(LinearReduction{i.monomial(), s.coeffs, ctx.prime}, cap);
            } else {
                r = reduction_number(s.q, gi, cap);
            }
        } catch (const CapExceeded&) {
            continue;  // not a reduction for this choice of coefficients
        }
        if (!best.found || r < best.reduction_number) {
            best.found = true;
            best.reduction_number = r;
            best.q = with_reduction_floor(s.q, i, r);
            best.coeffs = std::move(s.coeffs);
        }
        if (best.reduction_number <= floor) break;
    }
    return best;
}

SallyReport sally_multiplicity(const RingContext& ctx, const Ideal& q, const Ideal& i) {
    const HilbertData hi = hilbert_coeffs(ctx, i);
    const HilbertData hq = hilbert_coeffs(ctx, q);
    SallyReport out;
    out.e1_i = hi.e(1);
    out.e1_q = hq.e(1);
    out.e0_i = hi.e(0);
    out.colength_i = colength(i);
    out.s0 = out.e1_i - out.e1_q - out.e0_i + out.colength_i;
    out.hypotheses_note =
        "assumes dim S_Q(I) = d (not computed); H^0_m(R) = 0 lies in I since the supported rings are domains";
    return out;
}

Ideal socle_extension(const RingContext& ctx, const Ideal& q, int s) {
    if (s < 0) throw InputError("negative socle exponent");
    if (s == 0) return q;
    return colon(q, power(maximal_ideal(ctx), s));
}

int nu_power_criterion(const RingContext& ctx, const Ideal& i, int cap) {
    PowerCache powers(i);
    for (int n = 1; n <= cap; ++n) {
        if (Int(nu(powers.get(n))) < choose(n + ctx.dim, ctx.dim)) return n - 1;
    }
    throw CapExceeded("nu(I^n) >= C(n+d, d) up to n = " + std::to_string(cap));
}

Int e1_series_check(const RingContext& ctx, const Ideal& q, const Ideal& i, int cap) {
    if (ctx.dim != 1) throw DimensionUnsupported("the series oracle for e_1 needs dimension 1");
    if (!contains(i, q)) throw InputError("reduction must be contained in the ideal");
    Int total = 0;
    Ideal ipow = i.is_semigroup() ? Ideal(SemigroupIdeal::unit(ctx.semigroup)) : Ideal(MonomialIdeal::unit(1));
    bool done = false;
    for (int n = 0; n <= cap && !done; ++n) {
        const Ideal next = product(ipow, i);
        const Ideal qi = product(q, ipow);
        const std::int64_t term = colength(qi) - colength(next);
        total += term;
        done = term == 0;
        ipow = next;
    }
    if (!done) throw CapExceeded("series did not terminate by n = " + std::to_string(cap));
    const Int fitted = hilbert_coeffs(ctx, i).e(1);
    if (fitted != total) {
        throw OracleMismatch("fitted e_1 = " + fitted.str() + " but the series gives " + total.str());
    }
    return total;
}

}  // namespace hvar
