#include "hvar/errors.hpp"
#include "hvar/invariants.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hvar;

namespace {

std::vector<Int> ints(std::vector<long> vals) {
    std::vector<Int> out;
    for (auto v : vals) out.emplace_back(v);
    return out;
}

MonomialIdeal mono(int d, std::vector<ExponentVector> g) { return MonomialIdeal::minimalize(d, std::move(g)); }

MonomialIdeal worked_i() { return mono(3, {{7, 0, 0}, {0, 7, 0}, {0, 0, 7}, {2, 2, 2}}); }

GroebnerIdeal worked_q() {
    const PolyRing r{3, kDefaultPrime, {}};
    auto t = [&](int a, int b, int c, std::int64_t coef) {
        Monomial m;
        m.exp = {static_cast<std::uint16_t>(a), static_cast<std::uint16_t>(b), static_cast<std::uint16_t>(c), 0, 0, 0};
        return Term{m, r.reduce(coef)};
    };
    return GroebnerIdeal(r, {GfpPolynomial::from_terms(r, {t(7, 0, 0, 1), t(0, 0, 7, -1)}),
                             GfpPolynomial::from_terms(r, {t(0, 7, 0, 1), t(0, 0, 7, -1)}),
                             GfpPolynomial::from_terms(r, {t(2, 2, 2, 1)})});
}

}  // namespace

TEST_CASE("Hilbert coefficients") {
    const RingContext p2 = RingContext::poly(2);
    const MonomialIdeal m2 = power(MonomialIdeal::maximal(2), 2);
    HilbertData h = hilbert_coeffs(p2, m2);
    CHECK(h.poly.coeffs == ints({4, 1, 0}));
    CHECK(h.sequence.at(3) == oracle::colength(power(m2, 3).gens(), 2));

    const RingContext s = RingContext::numerical(NumericalSemigroup::make({4, 7, 9}));
    h = hilbert_coeffs(s, SemigroupIdeal::make(s.semigroup, {11}));
    CHECK(h.e(0) == 11);
    CHECK(h.e(1) == 0);

    const RingContext p3 = RingContext::poly(3);
    h = hilbert_coeffs(p3, MonomialIdeal::pure_powers({7, 7, 7}));
    CHECK(h.e(0) == 343);
    CHECK(h.e(1) == 0);
    CHECK(hilbert_coeffs(p3, worked_i()).e(0) == 294);
}

TEST_CASE("e_1 of powers of the maximal ideal in two variables") {
    const RingContext p2 = RingContext::poly(2);
    for (int n = 1; n <= 6; ++n) {
        const HilbertData h = hilbert_coeffs(p2, power(MonomialIdeal::maximal(2), n));
        CHECK(h.e(0) == n * n);
        CHECK(h.e(1) == n * (n - 1) / 2);
    }
}

TEST_CASE("parameter shortcut agrees with tabulation") {
    const RingContext p3 = RingContext::poly(3);
    const HilbertData h = hilbert_coeffs(p3, worked_q());
    CHECK(h.method == "parameter");
    CHECK(h.e(0) == 294);
    CHECK(h.e(1) == 0);
    const RingContext p2 = RingContext::poly(2);
    const GroebnerIdeal q = GroebnerIdeal::from_monomial(MonomialIdeal::pure_powers({2, 3}));
    CHECK(hilbert_coeffs(p2, q).poly == hilbert_coeffs(p2, MonomialIdeal::pure_powers({2, 3})).poly);
}

TEST_CASE("fiber coefficients") {
    const RingContext p2 = RingContext::poly(2);
    FiberData f = fiber_coeffs(p2, MonomialIdeal::pure_powers({3, 5}));
    CHECK(f.f(0) == 1);
    f = fiber_coeffs(p2, power(MonomialIdeal::maximal(2), 2));
    CHECK(f.f(0) == 2);
    CHECK(f.f0_iterated == 2);
    CHECK(f.poly.coeffs == ints({2, -1}));
    const RingContext s = RingContext::numerical(NumericalSemigroup::make({4, 7, 9}));
    f = fiber_coeffs(s, SemigroupIdeal::maximal(s.semigroup));
    // nu(m^n) is eventually the multiplicity in a one-dimensional CM ring
    CHECK(f.f(0) == 4);
    CHECK(fiber_coeffs(s, SemigroupIdeal::make(s.semigroup, {11})).f(0) == 1);
}

TEST_CASE("normal coefficients") {
    const RingContext p2 = RingContext::poly(2);
    const MonomialIdeal m2 = power(MonomialIdeal::maximal(2), 2);
    NormalData n = normal_coeffs(p2, m2);
    CHECK(n.hilbert.poly == hilbert_coeffs(p2, m2).poly);
    n = normal_coeffs(p2, mono(2, {{2, 0}, {0, 2}}));
    CHECK(n.hilbert.e(0) == 4);
    CHECK(n.hilbert.e(1) == 1);
    CHECK(n.fiber.f(0) == 2);
    const RingContext p3 = RingContext::poly(3);
    n = normal_coeffs(p3, MonomialIdeal::pure_powers({7, 7, 7}));
    CHECK(n.hilbert.e(0) == 343);
    CHECK(n.hilbert.e(1) >= 0);
    CHECK(n.hilbert.e(1) <= 343);
    CHECK_THROWS_AS(normal_coeffs(p2, Ideal(GroebnerIdeal::maximal(2))), InputError);
}

TEST_CASE("reduction numbers") {
    const RingContext p2 = RingContext::poly(2);
    const MonomialIdeal m2 = power(MonomialIdeal::maximal(2), 2);
    CHECK(reduction_number(p2, m2, m2).reduction_number == 0);
    CHECK(reduction_number(p2, mono(2, {{2, 0}, {0, 2}}), m2).reduction_number == 1);
    CHECK_THROWS_AS(reduction_number(p2, m2, mono(2, {{2, 0}, {0, 2}})), InputError);

    const RingContext s = RingContext::numerical(NumericalSemigroup::make({4, 7, 9}));
    const SemigroupIdeal i = SemigroupIdeal::make(s.semigroup, {11, 14});
    const ReductionReport r = reduction_number(s, SemigroupIdeal::make(s.semigroup, {11}), i);
    CHECK(r.found);
    CHECK(r.reduction_number >= 1);

    const RingContext p3 = RingContext::poly(3);
    CHECK(reduction_number(p3, worked_q(), worked_i()).reduction_number == 2);
}

TEST_CASE("minimal reductions") {
    const RingContext p2 = RingContext::poly(2);
    CHECK(minimal_reduction(p2, power(MonomialIdeal::maximal(2), 2), 8, 1).reduction_number == 1);
    const ReductionReport m = minimal_reduction(p2, MonomialIdeal::maximal(2), 8, 1);
    CHECK(m.reduction_number == 0);
    CHECK_FALSE(m.sampled);
    const RingContext s = RingContext::numerical(NumericalSemigroup::make({2, 3}));
    for (std::int64_t a = 2; a < 9; ++a) {
        const ReductionReport r = minimal_reduction(s, SemigroupIdeal::make(s.semigroup, {a, a + 1}), 1, 0);
        CHECK(r.reduction_number <= 1);
        CHECK(r.q.semigroup().gens() == std::vector<std::int64_t>{a});
    }
    // same seed, same answer
    const MonomialIdeal i = mono(2, {{5, 0}, {3, 1}, {1, 3}, {0, 6}});
    const ReductionReport x = minimal_reduction(p2, i, 8, 42);
    const ReductionReport y = minimal_reduction(p2, i, 8, 42);
    CHECK(x.coeffs == y.coeffs);
    CHECK(x.reduction_number == y.reduction_number);
    CHECK(x.reduction_number == reduction_number(p2, x.q, i).reduction_number);
}

TEST_CASE("Sally multiplicity") {
    const RingContext p2 = RingContext::poly(2);
    const MonomialIdeal m2 = power(MonomialIdeal::maximal(2), 2);
    const ReductionReport q = minimal_reduction(p2, m2, 8, 3);
    const SallyReport s = sally_multiplicity(p2, q.q, m2);
    CHECK(s.e1_i == 1);
    CHECK(s.e1_q == 0);
    CHECK(s.e0_i == 4);
    CHECK(s.colength_i == 3);
    CHECK(s.s0 == 0);
    const MonomialIdeal j = MonomialIdeal::pure_powers({3, 4});
    CHECK(sally_multiplicity(p2, j, j).s0 == 0);
}

TEST_CASE("socle extensions") {
    const RingContext p2 = RingContext::poly(2);
    const MonomialIdeal q = mono(2, {{2, 0}, {0, 2}});
    CHECK(socle_extension(p2, q, 1).monomial() == mono(2, {{2, 0}, {1, 1}, {0, 2}}));
    CHECK(socle_extension(p2, q, 0).monomial() == q);
    const RingContext s = RingContext::numerical(NumericalSemigroup::make({2, 3}));
    CHECK(socle_extension(s, SemigroupIdeal::make(s.semigroup, {4}), 1).semigroup().gens() == std::vector<std::int64_t>{4, 5});
}

TEST_CASE("generator-count criterion") {
    const RingContext p2 = RingContext::poly(2);
    CHECK(nu_power_criterion(p2, MonomialIdeal::maximal(2)) == 0);
    CHECK(nu_power_criterion(p2, power(MonomialIdeal::maximal(2), 2)) == 1);
}

TEST_CASE("dimension-one series oracle") {
    const RingContext s = RingContext::numerical(NumericalSemigroup::make({2, 3}));
    const SemigroupIdeal q = SemigroupIdeal::make(s.semigroup, {4});
    CHECK(e1_series_check(s, q, q) == 0);
    const SemigroupIdeal i = SemigroupIdeal::make(s.semigroup, {4, 5});
    CHECK(e1_series_check(s, q, i) == relative_length(i, q));
    const RingContext h = RingContext::numerical(NumericalSemigroup::make({4, 7, 9}));
    const SemigroupIdeal i4 = SemigroupIdeal::make(h.semigroup, {11, 14});
    CHECK(e1_series_check(h, SemigroupIdeal::make(h.semigroup, {11}), i4) == hilbert_coeffs(h, i4).e(1));
    CHECK_THROWS_AS(e1_series_check(RingContext::poly(2), MonomialIdeal::maximal(2), MonomialIdeal::maximal(2)),
                    DimensionUnsupported);
}

TEST_CASE("orders and generator counts") {
    const RingContext s = RingContext::numerical(NumericalSemigroup::make({4, 7, 9}));
    CHECK(order(SemigroupIdeal::make(s.semigroup, {11, 14})) == 2);
    CHECK(order(SemigroupIdeal::maximal(s.semigroup)) == 1);
    CHECK(order(worked_q()) == 6);
    CHECK(nu(worked_q()) == 3);
    CHECK(nu(Ideal(GroebnerIdeal::from_monomial(worked_i()))) == 4);
    CHECK(integral_closure(Ideal(SemigroupIdeal::make(s.semigroup, {11, 14}))).semigroup().gens() ==
          std::vector<std::int64_t>{11, 12, 13, 14});
}

TEST_CASE("cross-engine agreement on random monomial ideals") {
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        const int d = 2 + trial % 2;
        std::vector<ExponentVector> gens;
        for (int i = 0; i < d; ++i) {
            ExponentVector v(static_cast<std::size_t>(d), 0);
            v[static_cast<std::size_t>(i)] = 2 + static_cast<int>(rng() % 4);
            gens.push_back(v);
        }
        for (int k = 0; k < 2; ++k) {
            ExponentVector v(static_cast<std::size_t>(d));
            for (auto& e : v) e = static_cast<int>(rng() % 3);
            gens.push_back(v);
        }
        const MonomialIdeal i = mono(d, gens);
        const Ideal gi = GroebnerIdeal::from_monomial(i);
        CHECK(colength(gi) == i.colength());
        CHECK(nu(gi) == static_cast<std::int64_t>(i.nu()));
        const MonomialIdeal j = MonomialIdeal::pure_powers(oracle::pure_power_box(gens, d));
        CHECK(colength(colon(Ideal(GroebnerIdeal::from_monomial(j)), gi)) == colon(j, i).colength());
    }
}
