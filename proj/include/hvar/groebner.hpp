#pragma once

// Buchberger's algorithm over GF(p) and the local computations built on it:
// colengths in the localization at the origin, colon ideals by elimination,
// and reduction numbers of non-monomial reductions.

#include "hvar/gfp_polynomial.hpp"
#include "hvar/monomial.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

namespace hvar {

/// Reduced Groebner basis (monic, auto-reduced, sorted by leading term).
/// Pairs are processed by the normal strategy; the coprime-leading-term and
/// chain criteria discard pairs.
std::vector<GfpPolynomial> buchberger(const PolyRing& ring, std::vector<GfpPolynomial> gens);

/// Remainder of f modulo a Groebner basis; no term is divisible by a leading
/// term of the basis.
GfpPolynomial normal_form(const PolyRing& ring, const GfpPolynomial& f, const std::vector<GfpPolynomial>& basis);

class GroebnerIdeal {
public:
    GroebnerIdeal() = default;
    /// The ring must use degrevlex.
    GroebnerIdeal(PolyRing ring, std::vector<GfpPolynomial> gens);

    static GroebnerIdeal from_monomial(const MonomialIdeal& ideal, std::uint32_t prime = kDefaultPrime);
    static GroebnerIdeal maximal(int nvars, std::uint32_t prime = kDefaultPrime);

    const PolyRing& ring() const { return ring_; }
    int dim() const { return ring_.nvars; }
    const std::vector<GfpPolynomial>& gens() const { return gens_; }

    /// Cached reduced basis.  Safe to call from several threads.
    const std::vector<GfpPolynomial>& basis() const;

    bool contains(const GfpPolynomial& f) const;
    bool contains(const GroebnerIdeal& other) const;
    bool is_unit() const;
    bool all_monomial() const;

    /// Records an m-primary monomial ideal F already known to lie in the
    /// localization A R_m.  Local computations then work with A + F, which
    /// has no components away from the origin.  F is not checked.
    GroebnerIdeal with_local_floor(const MonomialIdeal& f) const;
    const std::optional<MonomialIdeal>& local_floor() const { return floor_; }
    /// A + F when a floor is recorded, otherwise A.
    GroebnerIdeal floored() const;

private:
    struct Cache {
        std::once_flag once;
        std::vector<GfpPolynomial> basis;
    };

    PolyRing ring_;
    std::vector<GfpPolynomial> gens_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
    std::optional<MonomialIdeal> floor_;
};

constexpr std::size_t kMaxProductGens = 5000;

/// Floors combine: F_A + F_B for sums, F_A F_B for products (an
/// all-monomial m-primary ideal serves as its own floor), F_A for colons.
GroebnerIdeal sum(const GroebnerIdeal& a, const GroebnerIdeal& b);
/// Generator list of all pairwise products, deduplicated.  Throws
/// CapExceeded above kMaxProductGens generators.
GroebnerIdeal product(const GroebnerIdeal& a, const GroebnerIdeal& b);
GroebnerIdeal power(const GroebnerIdeal& a, int n);

/// dim_k k[x]/A for a zero-dimensional A; throws NotMPrimary otherwise.
std::int64_t global_colength(const GroebnerIdeal& a);

/// Length of R/A R for R the localization at the origin.  When every
/// variable is nilpotent modulo A the global colength is returned; otherwise
/// lambda(R/(A + m^N)) is computed for N = 2, 4, 8, ... until two
/// consecutive values agree.  Throws NonStabilizing past N = cap.
std::int64_t local_colength(const GroebnerIdeal& a, int cap = 256);

/// For A inside B (checked), whether A R = B R.
bool local_ideal_equal(const GroebnerIdeal& a, const GroebnerIdeal& b);

/// A intersect B via one auxiliary elimination variable.
GroebnerIdeal intersect(const GroebnerIdeal& a, const GroebnerIdeal& b);
/// (A : h) = (A intersect (h)) / h.
GroebnerIdeal colon(const GroebnerIdeal& a, const GfpPolynomial& h);
/// (A : I), intersecting (A : g) over the generators g of I.
GroebnerIdeal colon(const GroebnerIdeal& a, const GroebnerIdeal& i);

/// `dim` random GF(p)-linear combinations of the generators of I.
/// Returns the coefficient rows alongside the ideal.
struct SampledReduction {
    GroebnerIdeal q;
    std::vector<std::vector<std::uint32_t>> coeffs;
};
SampledReduction random_minimal_reduction(const GroebnerIdeal& i, int dim, std::uint64_t seed);

/// Least s <= cap with I^{s+1} = Q I^s locally.  Throws CapExceeded.
int reduction_number(const GroebnerIdeal& q, const GroebnerIdeal& i, int cap = 30);

}  // namespace hvar
