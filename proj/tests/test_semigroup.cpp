#include "hvar/errors.hpp"
#include "hvar/semigroup.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace hvar;

namespace {

std::vector<std::int64_t> brute_gaps(const std::vector<std::int64_t>& gens, std::int64_t limit) {
    std::vector<std::int64_t> out;
    for (std::int64_t x = 0; x < limit; ++x) {
        if (!oracle::representable(gens, x)) out.push_back(x);
    }
    return out;
}

// #(H \ E) with E = gens + H, over a window past every gap of E.
std::int64_t brute_colength(const std::vector<std::int64_t>& h, const std::vector<std::int64_t>& e, std::int64_t window) {
    std::int64_t n = 0;
    for (std::int64_t x = 0; x < window; ++x) {
        if (!oracle::representable(h, x)) continue;
        bool in_e = false;
        for (auto g : e) in_e = in_e || (x >= g && oracle::representable(h, x - g));
        if (!in_e) ++n;
    }
    return n;
}

}  // namespace

TEST_CASE("semigroup 4,7,9") {
    const SemigroupPtr h = NumericalSemigroup::make({4, 7, 9});
    CHECK(h->gaps() == std::vector<std::int64_t>{1, 2, 3, 5, 6, 10});
    CHECK(h->gaps() == brute_gaps({4, 7, 9}, 40));
    CHECK(h->conductor() == 11);
    CHECK(h->frobenius() == 10);
    CHECK(h->multiplicity() == 4);
    CHECK(h->pseudo_frobenius() == std::vector<std::int64_t>{5, 10});
    CHECK_FALSE(h->is_symmetric());
    CHECK(h->apery(4) == std::vector<std::int64_t>{0, 7, 9, 14});

    const SemigroupIdeal k = canonical_ideal(h);
    CHECK(k.gens() == std::vector<std::int64_t>{4, 9});
    CHECK(k.nu() == 2);
    CHECK(k.colength() == 3);
    CHECK(k.colength() == brute_colength({4, 7, 9}, {4, 9}, 60));
}

TEST_CASE("generators are minimalized") {
    const SemigroupPtr h = NumericalSemigroup::make({9, 4, 8, 7, 12});
    CHECK(h->generators() == std::vector<std::int64_t>{4, 7, 9});
    CHECK(NumericalSemigroup::make({1})->conductor() == 0);
    CHECK(NumericalSemigroup::make({2, 3})->is_symmetric());
    CHECK_THROWS_AS(NumericalSemigroup::make({4, 6}), NotCoprime);
    CHECK_THROWS_AS(NumericalSemigroup::make({0, 3}), InputError);
    CHECK_THROWS_AS(NumericalSemigroup::make({}), InputError);
}

TEST_CASE("semigroup ideals") {
    const SemigroupPtr h = NumericalSemigroup::make({4, 7, 9});
    const SemigroupIdeal m = SemigroupIdeal::maximal(h);
    CHECK(m.gens() == std::vector<std::int64_t>{4, 7, 9});
    CHECK(m.colength() == 1);
    const SemigroupIdeal i = SemigroupIdeal::make(h, {11, 14});
    CHECK(i.gens() == std::vector<std::int64_t>{11, 14});
    const SemigroupIdeal q = SemigroupIdeal::make(h, {11});
    CHECK(i.contains(q));
    CHECK(relative_length(i, q) == 2);
    CHECK(q.colength() == 11);
    // m I is not inside Q: 7 + 14 = 21 and 21 - 11 = 10 is a gap.
    CHECK_FALSE(q.contains(product(m, i)));
    CHECK(SemigroupIdeal::make(h, {4, 8, 12}).gens() == std::vector<std::int64_t>{4});
    CHECK_THROWS_AS(SemigroupIdeal::make(h, {5}), InputError);
    CHECK(SemigroupIdeal::unit(h).colength() == 0);
    CHECK(SemigroupIdeal::make(h, {4, 9}).conductor() == 15);
}

TEST_CASE("colon and powers") {
    const SemigroupPtr h = NumericalSemigroup::make({4, 7, 9});
    const SemigroupIdeal m = SemigroupIdeal::maximal(h);
    const SemigroupIdeal q = SemigroupIdeal::make(h, {4});
    // (t^4 : m) = {a : a + 4, a + 7, a + 9 all in 4 + H}
    std::vector<std::int64_t> members;
    for (std::int64_t a = 0; a < 40; ++a) {
        if (!oracle::representable({4, 7, 9}, a)) continue;
        bool ok = true;
        for (std::int64_t f : {4, 7, 9}) ok = ok && a + f >= 4 && oracle::representable({4, 7, 9}, a + f - 4);
        if (ok) members.push_back(a);
    }
    const SemigroupIdeal c = colon(q, m);
    for (std::int64_t a = 0; a < 40; ++a) {
        const bool expected = std::find(members.begin(), members.end(), a) != members.end();
        CHECK(c.contains(a) == expected);
    }
    CHECK(power(m, 2).gens() == std::vector<std::int64_t>{8, 11, 13, 14});
    CHECK(power(m, 0) == SemigroupIdeal::unit(h));
    CHECK(sum(q, SemigroupIdeal::make(h, {7})).gens() == std::vector<std::int64_t>{4, 7});
}

TEST_CASE("random semigroups agree with the representability oracle") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<std::int64_t> gens;
        const int k = 2 + static_cast<int>(rng() % 3);
        for (int i = 0; i < k; ++i) gens.push_back(3 + static_cast<std::int64_t>(rng() % 15));
        std::int64_t g = 0;
        for (auto x : gens) g = std::gcd(g, x);
        if (g != 1) {
            CHECK_THROWS_AS(NumericalSemigroup::make(gens), NotCoprime);
            continue;
        }
        const SemigroupPtr h = NumericalSemigroup::make(gens);
        const std::int64_t window = h->conductor() + 40;
        const auto gaps = brute_gaps(gens, window);
        CHECK(h->gaps() == gaps);
        CHECK(h->conductor() == (gaps.empty() ? 0 : gaps.back() + 1));
        const std::int64_t e = h->multiplicity();
        CHECK(oracle::apery_count(gens, e, window) == e);
        // canonical ideal is an ideal of H with lambda(K/mK) = type
        const SemigroupIdeal kk = canonical_ideal(h);
        CHECK(kk.nu() == h->pseudo_frobenius().size());
        CHECK(h->is_symmetric() == (kk.nu() == 1));
        const SemigroupIdeal m = SemigroupIdeal::maximal(h);
        CHECK(brute_colength(gens, kk.gens(), window + kk.min_value()) == kk.colength());
        CHECK(colon(kk, kk) == SemigroupIdeal::unit(h));
        CHECK(relative_length(m, power(m, 2)) == static_cast<std::int64_t>(m.nu()));
    }
}
