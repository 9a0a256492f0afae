#pragma once

// Engine-independent computation of Hilbert and fiber coefficients,
// reduction numbers and the derived quantities the bound checkers consume.

#include "hvar/groebner.hpp"
#include "hvar/monomial.hpp"
#include "hvar/semigroup.hpp"
#include "hvar/sequence.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace hvar {

struct RingContext {
    enum class Kind { poly, semigroup };

    Kind kind = Kind::poly;
    int dim = 1;
    std::uint32_t prime = kDefaultPrime;
    SemigroupPtr semigroup;  // set for Kind::semigroup

    static RingContext poly(int d, std::uint32_t prime = kDefaultPrime);
    static RingContext numerical(SemigroupPtr h);

    /// Polynomial rings are regular; k[[t^H]] is Gorenstein iff H is symmetric.
    bool gorenstein() const;
    bool regular() const;
};

/// An ideal held by whichever engine represents it exactly.
class Ideal {
public:
    enum class Engine { monomial, semigroup, groebner };

    Ideal() = default;
    Ideal(MonomialIdeal i) : v_(std::move(i)) {}
    Ideal(SemigroupIdeal i) : v_(std::move(i)) {}
    Ideal(GroebnerIdeal i) : v_(std::move(i)) {}

    Engine engine() const { return static_cast<Engine>(v_.index()); }
    bool is_monomial() const { return engine() == Engine::monomial; }
    bool is_semigroup() const { return engine() == Engine::semigroup; }
    bool is_groebner() const { return engine() == Engine::groebner; }

    const MonomialIdeal& monomial() const;
    const SemigroupIdeal& semigroup() const;
    const GroebnerIdeal& groebner() const;

    /// Groebner view of a monomial or Groebner ideal.
    GroebnerIdeal to_groebner(std::uint32_t prime) const;

    /// Number of listed generators (minimal for monomial and semigroup ideals).
    std::size_t generator_count() const;

private:
    std::variant<MonomialIdeal, SemigroupIdeal, GroebnerIdeal> v_;
};

Ideal maximal_ideal(const RingContext& ctx);

/// lambda(R/I) in the local ring.
std::int64_t colength(const Ideal& i);
/// nu(I) = lambda(I/mI).
std::int64_t nu(const Ideal& i);
/// m-adic order: the largest s with I inside m^s.
int order(const Ideal& i);

Ideal sum(const Ideal& a, const Ideal& b);
Ideal product(const Ideal& a, const Ideal& b);
Ideal power(const Ideal& a, int n);
Ideal colon(const Ideal& a, const Ideal& b);
/// Containment b inside a (global containment for Groebner ideals, which
/// implies local containment).
bool contains(const Ideal& a, const Ideal& b);
/// Equality in the local ring.
bool local_equal(const Ideal& a, const Ideal& b);
/// Integral closure; monomial and semigroup engines only.
Ideal integral_closure(const Ideal& i);

constexpr int kDefaultMaxN = 200;
constexpr int kDefaultReductionCap = 30;

struct HilbertData {
    BinomialPolynomial poly;  // e_0..e_d
    std::int64_t postulation = 0;
    LengthSequence sequence;
    /// "tabulated", or "parameter" when a d-generated Groebner ideal used the
    /// Cohen-Macaulay formula lambda(R/Q^n) = lambda(R/Q) C(n+d-1, d).
    std::string method = "tabulated";

    const Int& e(int k) const { return poly.coeffs.at(static_cast<std::size_t>(k)); }
};

struct FiberData {
    BinomialPolynomial poly;  // f_0..f_{d-1}
    LengthSequence sequence;  // nu(I^n)
    Int f0_iterated;          // leading coefficient of sum_{r<n} nu(I^r)

    const Int& f(int k) const { return poly.coeffs.at(static_cast<std::size_t>(k)); }
};

struct NormalData {
    HilbertData hilbert;  // of n -> lambda(R / closure(I^n))
    FiberData fiber;      // of n -> nu(closure(I^n))
};

HilbertData hilbert_coeffs(const RingContext& ctx, const Ideal& i, int max_n = kDefaultMaxN);
/// Throws OracleMismatch when the two f_0 extractions disagree.
FiberData fiber_coeffs(const RingContext& ctx, const Ideal& j, int max_n = kDefaultMaxN);
NormalData normal_coeffs(const RingContext& ctx, const Ideal& i, int max_n = kDefaultMaxN);

struct ReductionReport {
    Ideal q;
    /// For sampled reductions: one coefficient row per generator of Q over
    /// the listed generators of I.
    std::vector<std::vector<std::uint32_t>> coeffs;
    std::uint32_t prime = kDefaultPrime;
    int reduction_number = -1;  // -1 when no sample was a reduction
    bool found = false;
    bool is_minimal = false;  // Q generated by d elements
    bool sampled = false;
    int samples_tried = 0;
};

/// Least s with I^{s+1} = Q I^s locally.  Throws CapExceeded.
ReductionReport reduction_number(const RingContext& ctx, const Ideal& q, const Ideal& i,
                                 int cap = kDefaultReductionCap);

/// Smallest reduction number over `samples` random minimal reductions (or
/// the principal reduction (t^e) in a semigroup ring, or I itself when I is
/// d-generated).
ReductionReport minimal_reduction(const RingContext& ctx, const Ideal& i, int samples = 8,
                                  std::uint64_t seed = 0, int cap = kDefaultReductionCap);

struct SallyReport {
    Int s0;
    Int e1_i;
    Int e1_q;
    Int e0_i;
    std::int64_t colength_i = 0;
    std::string hypotheses_note;
};

SallyReport sally_multiplicity(const RingContext& ctx, const Ideal& q, const Ideal& i);

/// Q : m^s.
Ideal socle_extension(const RingContext& ctx, const Ideal& q, int s);

/// n - 1 for the least n with nu(I^n) < C(n+d, d).  Throws CapExceeded.
int nu_power_criterion(const RingContext& ctx, const Ideal& i, int cap = kDefaultReductionCap);

/// sum_{n>=0} lambda(I^{n+1} / Q I^n) for a principal reduction Q in a
/// semigroup ring, compared against the fitted e_1.  Throws OracleMismatch
/// when they differ.
Int e1_series_check(const RingContext& ctx, const Ideal& q, const Ideal& i, int cap = kDefaultReductionCap);

/// 64-bit mixing used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace hvar
