#pragma once

// Sparse polynomials over GF(p) with a runtime term order.  Terms are kept
// sorted by decreasing monomial under the ring's order, with no zero
// coefficients.

#include "hvar/monomial.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace hvar {

constexpr int kMaxVars = 6;
constexpr std::uint32_t kDefaultPrime = 32003;

struct Monomial {
    std::array<std::uint16_t, kMaxVars> exp{};

    int degree(int lo, int hi) const {
        int d = 0;
        for (int i = lo; i < hi; ++i) d += exp[static_cast<std::size_t>(i)];
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

bool mono_divides(const Monomial& a, const Monomial& b, int nvars);
Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars);
Monomial mono_div(const Monomial& a, const Monomial& b, int nvars);  // a / b, b | a
Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars);
bool mono_coprime(const Monomial& a, const Monomial& b, int nvars);

/// degrevlex when elim_vars == 0; otherwise the block order that compares the
/// first elim_vars variables by degrevlex and breaks ties with degrevlex on
/// the rest.
struct TermOrder {
    int elim_vars = 0;
    bool operator==(const TermOrder&) const = default;
};

struct PolyRing {
    int nvars = 0;
    std::uint32_t prime = kDefaultPrime;
    TermOrder order;

    /// <0, 0, >0 as a is smaller, equal, larger than b.
    int compare(const Monomial& a, const Monomial& b) const;

    std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + b) % prime); }
    std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} + prime - b) % prime); }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return static_cast<std::uint32_t>((std::uint64_t{a} * b) % prime); }
    std::uint32_t inv(std::uint32_t a) const;
    std::uint32_t reduce(std::int64_t c) const;

    bool operator==(const PolyRing&) const = default;
};

bool is_prime(std::uint32_t p);

struct Term {
    Monomial mono;
    std::uint32_t coef = 0;
    bool operator==(const Term&) const = default;
};

class GfpPolynomial {
public:
    GfpPolynomial() = default;

    /// Sorts and merges arbitrary terms; coefficients are taken mod p.
    static GfpPolynomial from_terms(const PolyRing& ring, std::vector<Term> terms);
    static GfpPolynomial monomial(const PolyRing& ring, const ExponentVector& e, std::int64_t coef = 1);
    static GfpPolynomial constant(const PolyRing& ring, std::int64_t c);

    bool is_zero() const { return terms_.empty(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& lead() const { return terms_.front(); }
    bool is_monomial() const { return terms_.size() == 1; }

    bool operator==(const GfpPolynomial&) const = default;

private:
    friend struct PolyOps;
    std::vector<Term> terms_;
};

struct PolyOps {
    static GfpPolynomial add(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& g);
    static GfpPolynomial sub(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& g);
    static GfpPolynomial scale(const PolyRing& r, const GfpPolynomial& f, std::uint32_t c);
    static GfpPolynomial mul_term(const PolyRing& r, const GfpPolynomial& f, const Monomial& m, std::uint32_t c);
    static GfpPolynomial mul(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& g);
    static GfpPolynomial make_monic(const PolyRing& r, const GfpPolynomial& f);
    /// f - c * m * g without materializing the product.
    static GfpPolynomial sub_mul(const PolyRing& r, const GfpPolynomial& f, std::uint32_t c, const Monomial& m,
                                 const GfpPolynomial& g, std::size_t skip_f = 0);
    /// Re-sorts terms for a different order on the same variables.
    static GfpPolynomial reorder(const PolyRing& to, const GfpPolynomial& f);
    /// Exact quotient f / h; throws Error when h does not divide f.
    static GfpPolynomial divide_exact(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& h);
};

/// Moves variables i -> i + offset into a ring with more variables.
GfpPolynomial shift_variables(const PolyRing& to, const GfpPolynomial& f, int offset);

/// Drops variables [0, offset) which must be absent, moving i -> i - offset.
GfpPolynomial unshift_variables(const PolyRing& to, const GfpPolynomial& f, int offset);

}  // namespace hvar
