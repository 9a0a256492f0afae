#pragma once

// Randomized property checks shared by test_properties and the acceptance
// binary.  Each returns how many cases ran and the first failing case.

#include "hvar/bounds.hpp"
#include "hvar/errors.hpp"
#include "hvar/newton.hpp"
#include "hvar/report.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace props {

using namespace hvar;

struct Result {
    int cases = 0;
    int failures = 0;
    std::string first_failure;

    void fail(const std::string& what) {
        if (failures++ == 0) first_failure = what;
    }
    bool ok() const { return failures == 0; }
};

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int d, int max_exp, int extra) {
    std::vector<ExponentVector> g;
    for (int i = 0; i < d; ++i) {
        ExponentVector v(static_cast<std::size_t>(d), 0);
        v[static_cast<std::size_t>(i)] = uniform(rng, 1, max_exp);
        g.push_back(v);
    }
    for (int k = 0; k < extra; ++k) {
        ExponentVector v(static_cast<std::size_t>(d), 0);
        for (auto& e : v) e = uniform(rng, 0, max_exp - 1);
        g.push_back(v);
    }
    return MonomialIdeal::minimalize(d, g);
}

inline SemigroupPtr random_semigroup(std::mt19937_64& rng) {
    while (true) {
        std::vector<std::int64_t> gens;
        const int k = uniform(rng, 2, 3);
        for (int i = 0; i < k; ++i) gens.push_back(uniform(rng, 2, 11));
        std::int64_t g = 0;
        for (auto x : gens) g = std::gcd(g, x);
        if (g == 1) return NumericalSemigroup::make(gens);
    }
}

inline std::vector<std::int64_t> random_elements(std::mt19937_64& rng, const NumericalSemigroup& h, int count) {
    std::vector<std::int64_t> out;
    const int top = static_cast<int>(h.conductor() + 2 * h.multiplicity());
    while (static_cast<int>(out.size()) < count) {
        const int x = uniform(rng, 1, top);
        if (h.contains(x)) out.push_back(x);
    }
    return out;
}

/// fit_binomial(tabulate(p), d, 3) recovers p, for d <= 4 and |c_i| <= 50, in
/// both the Hilbert and the fiber sign conventions.
inline Result binomial_round_trip(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    Result r;
    for (int k = 0; k < cases; ++k) {
        BinomialPolynomial p;
        p.degree = uniform(rng, 0, 4);
        p.alternating = k % 4 != 3;
        for (int i = 0; i <= p.degree; ++i) p.coeffs.push_back(Int(uniform(rng, -50, 50)));
        const std::int64_t start = uniform(rng, 0, 20);
        const LengthSequence seq = tabulate(p, start, p.degree + 1 + 3 + uniform(rng, 0, 6));
        ++r.cases;
        try {
            const FitReport fit = fit_binomial(seq, p.degree, 3, p.alternating);
            if (!(fit.poly == p)) r.fail("case " + std::to_string(k) + ": fitted coefficients differ");
        } catch (const Error& e) {
            r.fail("case " + std::to_string(k) + ": " + e.what());
        }
    }
    return r;
}

/// Minimal generators are a fixed point, and shuffled, duplicated or
/// redundant generator lists canonicalize to the same list.  Alternates
/// monomial ideals, semigroup ideals and reduced Groebner bases.
inline Result canonicalization_idempotent(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    Result r;
    for (int k = 0; k < cases; ++k) {
        ++r.cases;
        const std::string tag = "case " + std::to_string(k);
        switch (k % 3) {
            case 0: {
                const int d = uniform(rng, 1, 4);
                const MonomialIdeal i = random_monomial_ideal(rng, d, 8, uniform(rng, 0, 5));
                if (!(MonomialIdeal::minimalize(d, i.gens()) == i)) r.fail(tag + ": monomial gens not a fixed point");
                std::vector<ExponentVector> noisy = i.gens();
                for (const auto& g : i.gens()) {
                    ExponentVector m = g;
                    m[static_cast<std::size_t>(uniform(rng, 0, d - 1))] += static_cast<std::uint16_t>(uniform(rng, 0, 3));
                    noisy.push_back(m);
                    noisy.push_back(g);
                }
                std::shuffle(noisy.begin(), noisy.end(), rng);
                if (!(MonomialIdeal::minimalize(d, noisy) == i)) r.fail(tag + ": redundant monomial gens changed the ideal");
                break;
            }
            case 1: {
                const SemigroupPtr h = random_semigroup(rng);
                const SemigroupIdeal e = SemigroupIdeal::make(h, random_elements(rng, *h, uniform(rng, 1, 4)));
                if (!(SemigroupIdeal::make(h, e.gens()) == e)) r.fail(tag + ": semigroup gens not a fixed point");
                std::vector<std::int64_t> noisy = e.gens();
                for (auto g : e.gens()) noisy.push_back(g + h->generators()[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(h->generators().size()) - 1))]);
                std::shuffle(noisy.begin(), noisy.end(), rng);
                if (!(SemigroupIdeal::make(h, noisy) == e)) r.fail(tag + ": redundant semigroup gens changed the ideal");
                break;
            }
            default: {
                const PolyRing ring{2, kDefaultPrime, {}};
                std::vector<GfpPolynomial> gens;
                const int n = uniform(rng, 1, 3);
                for (int g = 0; g < n; ++g) {
                    std::vector<Term> terms;
                    const int t = uniform(rng, 1, 3);
                    for (int s = 0; s < t; ++s) {
                        Monomial m;
                        m.exp[0] = static_cast<std::uint16_t>(uniform(rng, 0, 4));
                        m.exp[1] = static_cast<std::uint16_t>(uniform(rng, 0, 4));
                        terms.push_back(Term{m, ring.reduce(uniform(rng, 1, 100))});
                    }
                    gens.push_back(GfpPolynomial::from_terms(ring, terms));
                }
                const GroebnerIdeal a(ring, gens);
                const auto& basis = a.basis();
                std::vector<GfpPolynomial> shuffled = gens;
                std::shuffle(shuffled.begin(), shuffled.end(), rng);
                if (GroebnerIdeal(ring, basis).basis() != basis) r.fail(tag + ": reduced basis not a fixed point");
                if (GroebnerIdeal(ring, shuffled).basis() != basis) r.fail(tag + ": basis depends on generator order");
                break;
            }
        }
    }
    return r;
}

/// closure(closure(I)) = closure(I) and I lies in closure(I), for monomial
/// ideals with d <= 3 and semigroup ideals.
inline Result closure_idempotent(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    Result r;
    for (int k = 0; k < cases; ++k) {
        ++r.cases;
        const std::string tag = "case " + std::to_string(k);
        Ideal i;
        if (k % 4 == 3) {
            const SemigroupPtr h = random_semigroup(rng);
            i = SemigroupIdeal::make(h, random_elements(rng, *h, uniform(rng, 1, 3)));
        } else {
            const int d = k % 4 + 1;
            i = random_monomial_ideal(rng, d, d == 3 ? 6 : 9, uniform(rng, 0, 4));
        }
        try {
            const Ideal once = integral_closure(i);
            const Ideal twice = integral_closure(once);
            if (!contains(once, i)) r.fail(tag + ": I not inside its closure");
            if (!local_equal(once, twice)) r.fail(tag + ": closure not idempotent");
        } catch (const Error& e) {
            r.fail(tag + ": " + e.what());
        }
    }
    return r;
}

/// Two runs of a checker with the same seed serialize to identical bytes,
/// and the report survives a parse/dump round trip unchanged.
inline Result report_determinism(std::uint64_t seed, int cases) {
    static const std::vector<std::string> ids = {"e0_variation",         "e1_single_extension", "e1_multi_extension",
                                                 "reduction_order_bound", "sally_bound",         "reduction_colength_bound",
                                                 "rossi_reduction",      "elias",               "normal_e1_nonnegative"};
    std::mt19937_64 rng(seed);
    Result r;
    const RingContext ctx = RingContext::poly(2);
    for (int k = 0; k < cases; ++k) {
        ++r.cases;
        const std::string& id = ids[static_cast<std::size_t>(k) % ids.size()];
        const std::string tag = "case " + std::to_string(k) + " (" + id + ")";
        const MonomialIdeal j = random_monomial_ideal(rng, 2, 7, uniform(rng, 0, 2));
        std::vector<ExponentVector> gens = j.gens();
        try {
            gens.push_back(sample_integral_element(j, rng()));
        } catch (const Exhausted&) {
        }
        const MonomialIdeal i = MonomialIdeal::minimalize(2, gens);
        const CheckerInfo& info = find_checker(id);
        Bindings b;
        for (const auto& role : info.required) b[role] = role == "J" ? Ideal(j) : Ideal(i);
        CheckOptions opt;
        opt.seed = rng();
        opt.samples = 2;
        try {
            const std::string first = dump(to_json(run_checker(id, ctx, b, opt)));
            const std::string second = dump(to_json(run_checker(id, ctx, b, opt)));
            if (first != second) r.fail(tag + ": reports differ");
            if (dump(Json::parse(first)) != first) r.fail(tag + ": report does not round-trip");
        } catch (const Error& e) {
            r.fail(tag + ": " + e.what());
        }
    }
    return r;
}

}  // namespace props
