#include "hvar/errors.hpp"
#include "hvar/fiber_cone.hpp"
#include "hvar/groebner.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hvar;

namespace {

struct T {
    std::int64_t c;
    ExponentVector e;
};

GfpPolynomial poly(const PolyRing& r, std::vector<T> ts) {
    std::vector<Term> terms;
    for (auto& t : ts) {
        Monomial m;
        for (std::size_t i = 0; i < t.e.size(); ++i) m.exp[i] = static_cast<std::uint16_t>(t.e[i]);
        terms.push_back(Term{m, r.reduce(t.c)});
    }
    return GfpPolynomial::from_terms(r, terms);
}

PolyRing ring(int n) { return PolyRing{n, kDefaultPrime, {}}; }

}  // namespace

TEST_CASE("field arithmetic") {
    const PolyRing r = ring(2);
    CHECK(r.mul(r.inv(12345), 12345) == 1);
    CHECK(r.reduce(-1) == kDefaultPrime - 1);
    CHECK(is_prime(32003));
    CHECK_FALSE(is_prime(32001));
}

TEST_CASE("polynomial arithmetic") {
    const PolyRing r = ring(2);
    const GfpPolynomial a = poly(r, {{1, {1, 0}}, {1, {0, 1}}});
    const GfpPolynomial b = poly(r, {{1, {1, 0}}, {-1, {0, 1}}});
    CHECK(PolyOps::mul(r, a, b) == poly(r, {{1, {2, 0}}, {-1, {0, 2}}}));
    CHECK(PolyOps::sub(r, a, a).is_zero());
    CHECK(PolyOps::divide_exact(r, PolyOps::mul(r, a, b), b) == a);
    CHECK_THROWS_AS(PolyOps::divide_exact(r, a, b), Error);
    // degrevlex: x^2 > x y > y^2 > x
    const GfpPolynomial f = poly(r, {{1, {1, 0}}, {1, {0, 2}}, {1, {1, 1}}, {1, {2, 0}}});
    CHECK(f.lead().mono.exp[0] == 2);
    CHECK(f.terms()[1].mono.exp[1] == 1);
    CHECK(f.terms()[3].mono.exp[0] == 1);
}

TEST_CASE("buchberger on two plane curves") {
    const PolyRing r = ring(2);
    const GroebnerIdeal a(r, {poly(r, {{1, {2, 0}}, {-1, {0, 1}}}), poly(r, {{1, {0, 2}}, {-1, {1, 0}}})});
    CHECK(global_colength(a) == 4);
    CHECK(local_colength(a) == 1);
    for (const auto& g : a.gens()) CHECK(a.contains(g));
    CHECK_FALSE(a.contains(poly(r, {{1, {1, 0}}})));
    CHECK(a.contains(poly(r, {{1, {4, 0}}, {-1, {1, 0}}})));
}

TEST_CASE("local colength") {
    const PolyRing r1 = ring(1);
    CHECK(local_colength(GroebnerIdeal(r1, {poly(r1, {{1, {2}}, {-1, {1}}})})) == 1);
    CHECK(local_colength(GroebnerIdeal(r1, {poly(r1, {{1, {5}}, {-1, {3}}})})) == 3);
    CHECK(local_colength(GroebnerIdeal(r1, {poly(r1, {{1, {1}}, {-1, {0}}})})) == 0);
    CHECK_THROWS_AS(global_colength(GroebnerIdeal(ring(2), {poly(ring(2), {{1, {1, 0}}})})), NotMPrimary);
    // the three-variable worked ideal in both engines
    const MonomialIdeal i = MonomialIdeal::minimalize(3, {{7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {2, 2, 2}});
    CHECK(local_colength(GroebnerIdeal::from_monomial(i)) == i.colength());
    CHECK(i.colength() == oracle::colength(i.gens(), 3));
    CHECK(i.colength() == 218);
}

TEST_CASE("colon and intersection") {
    const PolyRing r1 = ring(1);
    const GroebnerIdeal a(r1, {poly(r1, {{1, {2}}, {-1, {1}}})});
    const GroebnerIdeal c = colon(a, poly(r1, {{1, {1}}}));
    CHECK(c.basis() == std::vector<GfpPolynomial>{poly(r1, {{1, {1}}, {-1, {0}}})});

    const PolyRing r2 = ring(2);
    const MonomialIdeal j = MonomialIdeal::minimalize(2, {{3, 0}, {1, 2}});
    const MonomialIdeal k = MonomialIdeal::minimalize(2, {{2, 1}, {0, 4}});
    const GroebnerIdeal gi = intersect(GroebnerIdeal::from_monomial(j), GroebnerIdeal::from_monomial(k));
    CHECK(gi.contains(GroebnerIdeal::from_monomial(intersect(j, k))));
    CHECK(GroebnerIdeal::from_monomial(intersect(j, k)).contains(gi));

    const MonomialIdeal cube = MonomialIdeal::pure_powers({7, 7, 7});
    const MonomialIdeal ext = MonomialIdeal::minimalize(3, {{7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {2, 2, 2}});
    const GroebnerIdeal gc = colon(GroebnerIdeal::from_monomial(cube), GroebnerIdeal::from_monomial(ext));
    CHECK(local_colength(gc) == 125);
    (void)r2;
}

TEST_CASE("non-monomial colon in the worked example") {
    // Q = (x^7 - z^7, y^7 - z^7, x^2 y^2 z^2) is supported only at the origin.
    const PolyRing r = ring(3);
    const GroebnerIdeal q(r, {poly(r, {{1, {7, 0, 0}}, {-1, {0, 0, 7}}}), poly(r, {{1, {0, 7, 0}}, {-1, {0, 0, 7}}}),
                             poly(r, {{1, {2, 2, 2}}})});
    CHECK(global_colength(q) == local_colength(q));
    const MonomialIdeal i = MonomialIdeal::minimalize(3, {{7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {2, 2, 2}});
    const GroebnerIdeal gi = GroebnerIdeal::from_monomial(i);
    CHECK(gi.contains(q));
}

TEST_CASE("reduction numbers by both routes") {
    const MonomialIdeal m2 = power(MonomialIdeal::maximal(2), 2);
    const GroebnerIdeal gi = GroebnerIdeal::from_monomial(m2);
    const SampledReduction s = random_minimal_reduction(gi, 2, 7);
    CHECK(local_colength(s.q) == 4);
    CHECK(reduction_number(s.q, gi) == 1);
    CHECK(fiber_reduction_number(LinearReduction{m2, s.coeffs, kDefaultPrime}) == 1);

    const MonomialIdeal pp = MonomialIdeal::pure_powers({3, 5});
    const SampledReduction sp = random_minimal_reduction(GroebnerIdeal::from_monomial(pp), 2, 1);
    CHECK(fiber_reduction_number(LinearReduction{pp, sp.coeffs, kDefaultPrime}) == 0);

    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<ExponentVector> gens{{1 + static_cast<int>(rng() % 6), 0}, {0, 1 + static_cast<int>(rng() % 6)}};
        for (int k = 0; k < 2; ++k) gens.push_back({static_cast<int>(rng() % 5), static_cast<int>(rng() % 5)});
        const MonomialIdeal i = MonomialIdeal::minimalize(2, gens);
        const GroebnerIdeal g = GroebnerIdeal::from_monomial(i);
        const SampledReduction red = random_minimal_reduction(g, 2, 100 + static_cast<std::uint64_t>(trial));
        CHECK(reduction_number(red.q, g) == fiber_reduction_number(LinearReduction{i, red.coeffs, kDefaultPrime}));
    }
}

TEST_CASE("rank over GF(p)") {
    CHECK(rank_mod_p({{1, 2}, {2, 4}}, 32003) == 1);
    CHECK(rank_mod_p({{1, 0}, {0, 1}, {1, 1}}, 32003) == 2);
    CHECK(rank_mod_p({}, 32003) == 0);
}
