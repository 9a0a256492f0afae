#include "hvar/errors.hpp"
#include "hvar/monomial.hpp"
#include "hvar/sequence.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hvar;

namespace {

LengthSequence seq(std::int64_t start, std::vector<long> vals) {
    LengthSequence s;
    s.start_n = start;
    for (auto v : vals) s.values.emplace_back(v);
    return s;
}

std::vector<Int> ints(std::vector<long> vals) {
    std::vector<Int> out;
    for (auto v : vals) out.emplace_back(v);
    return out;
}

// lambda(R/(x,y)^{k n}) by direct staircase enumeration.
LengthSequence maximal_power_sequence(int k, int count) {
    LengthSequence s;
    s.start_n = 1;
    for (int n = 1; n <= count; ++n) {
        std::vector<ExponentVector> gens;
        for (int a = 0; a <= k * n; ++a) gens.push_back({a, k * n - a});
        s.values.emplace_back(oracle::colength(gens, 2));
    }
    return s;
}

}  // namespace

TEST_CASE("finite differences") {
    CHECK(finite_difference(seq(1, {1, 3, 6, 10})).values == ints({2, 3, 4}));
    CHECK(finite_difference(seq(0, {5, 5, 5})).values == ints({0, 0}));
    const LengthSequence squares = maximal_power_sequence(2, 4);
    CHECK(squares.values == ints({3, 10, 21, 36}));
    const LengthSequence diff = finite_difference(squares);
    CHECK(diff.values == ints({7, 11, 15}));
    CHECK(diff.start_n == 1);
    CHECK_THROWS_AS(finite_difference(seq(0, {4})), InputError);
}

TEST_CASE("fit of the maximal ideal and its square in two variables") {
    FitReport m = fit_binomial(seq(1, {1, 3, 6, 10, 15, 21}), 2, 3);
    CHECK(m.poly.coeffs == ints({1, 0, 0}));
    CHECK(m.postulation_index == 1);
    CHECK(m.samples_used == 6);

    FitReport m2 = fit_binomial(maximal_power_sequence(2, 6), 2, 3);
    CHECK(m2.poly.coeffs == ints({4, 1, 0}));
}

TEST_CASE("fiber convention fit of nu(m^n)") {
    FitReport f = fit_binomial(seq(1, {2, 3, 4, 5, 6}), 1, 3);
    CHECK(f.poly.coeffs.front() == 1);
    CHECK(f.poly.coeffs == ints({1, -1}));
}

TEST_CASE("fit errors") {
    CHECK_THROWS_AS(fit_binomial(seq(1, {1, 3, 6}), 2, 3), WindowTooShort);
    CHECK_THROWS_AS(fit_binomial(seq(1, {1, 2, 4, 8, 16, 32, 64}), 2, 3), NonPolynomial);
}

TEST_CASE("postulation index skips a non-polynomial head") {
    // 0 at n = 0, then C(n + 1, 2)
    FitReport r = fit_binomial(seq(0, {7, 1, 3, 6, 10, 15, 21, 28}), 2, 3);
    CHECK(r.poly.coeffs == ints({1, 0, 0}));
    CHECK(r.postulation_index == 1);
}

TEST_CASE("binomial evaluation") {
    BinomialPolynomial e{2, ints({1, 0, 0}), true};
    CHECK(eval_binomial(e, 4) == 10);
    BinomialPolynomial sq{2, ints({4, 1, 0}), true};
    CHECK(eval_binomial(sq, 3) == 21);
    CHECK(eval_binomial(sq, 3) == oracle::colength({{6, 0}, {5, 1}, {4, 2}, {3, 3}, {2, 4}, {1, 5}, {0, 6}}, 2));
    BinomialPolynomial fib{0, ints({1}), true};
    CHECK(eval_binomial(fib, 9) == 1);
}

TEST_CASE("generalized binomial") {
    CHECK(binomial(Int(-1), 0) == 1);
    CHECK(binomial(Int(-1), 2) == 1);
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(choose(3, 5) == 0);
    CHECK(choose(3, -1) == 0);
}

TEST_CASE("round trip and difference annihilation on random polynomials") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const int d = static_cast<int>(rng() % 5);
        BinomialPolynomial p{d, {}, trial % 2 == 0};
        for (int i = 0; i <= d; ++i) p.coeffs.emplace_back(static_cast<long>(rng() % 101) - 50);
        const LengthSequence s = tabulate(p, 1 + static_cast<std::int64_t>(rng() % 5), d + 10);
        FitReport r = fit_binomial(s, d, 3, p.alternating);
        CHECK(r.poly == p);
        // disjoint windows agree
        LengthSequence early = s;
        early.values.resize(static_cast<std::size_t>(d + 4));
        CHECK(fit_binomial(early, d, 3, p.alternating).poly == p);
        LengthSequence diff = s;
        for (int k = 0; k <= d; ++k) diff = finite_difference(diff);
        for (const auto& v : diff.values) CHECK(v == 0);
    }
}
