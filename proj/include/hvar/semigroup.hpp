#pragma once

// Numerical semigroups H and the monomial ideals of k[[t^H]], which are the
// semigroup ideals E = gens + H.

#include <cstdint>
#include <memory>
#include <vector>

namespace hvar {

class NumericalSemigroup {
public:
    /// Throws NotCoprime when gcd(gens) != 1 and InputError on a
    /// nonpositive generator.
    static std::shared_ptr<const NumericalSemigroup> make(std::vector<std::int64_t> gens);

    const std::vector<std::int64_t>& generators() const { return generators_; }  // minimal, sorted
    std::int64_t conductor() const { return conductor_; }
    std::int64_t frobenius() const { return conductor_ - 1; }
    std::int64_t multiplicity() const { return generators_.front(); }

    bool contains(std::int64_t x) const;
    std::vector<std::int64_t> gaps() const;
    std::vector<std::int64_t> apery(std::int64_t e) const;
    std::vector<std::int64_t> pseudo_frobenius() const;
    bool is_symmetric() const;

private:
    std::vector<std::int64_t> generators_;
    std::int64_t conductor_ = 0;
    std::vector<bool> member_;  // over [0, conductor)
};

using SemigroupPtr = std::shared_ptr<const NumericalSemigroup>;

class SemigroupIdeal {
public:
    SemigroupIdeal() = default;

    /// Ideal generated by t^g for g in gens; every g must lie in H.
    static SemigroupIdeal make(SemigroupPtr ambient, std::vector<std::int64_t> gens);
    static SemigroupIdeal maximal(SemigroupPtr ambient);
    static SemigroupIdeal unit(SemigroupPtr ambient);

    const SemigroupPtr& ambient() const { return ambient_; }
    const std::vector<std::int64_t>& gens() const { return gens_; }
    std::size_t nu() const { return gens_.size(); }
    std::int64_t min_value() const { return gens_.front(); }

    bool contains(std::int64_t x) const;
    bool contains(const SemigroupIdeal& other) const;

    /// Least w with [w, inf) inside the ideal.
    std::int64_t conductor() const;

    /// #(H \ E) = lambda(R/E).
    std::int64_t colength() const;

    bool operator==(const SemigroupIdeal& other) const { return gens_ == other.gens_; }

private:
    SemigroupPtr ambient_;
    std::vector<std::int64_t> gens_;
};

SemigroupIdeal sum(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal product(const SemigroupIdeal& a, const SemigroupIdeal& b);
SemigroupIdeal power(const SemigroupIdeal& a, int n);
/// (E : F) = {a in H : a + f in E for every generator f of F}
SemigroupIdeal colon(const SemigroupIdeal& e, const SemigroupIdeal& f);

/// #(A \ B) for B contained in A, i.e. lambda(A/B).
std::int64_t relative_length(const SemigroupIdeal& a, const SemigroupIdeal& b);

/// The canonical ideal {x : F - x not in H}, shifted by the least amount
/// that places it inside H.
SemigroupIdeal canonical_ideal(const SemigroupPtr& h);

}  // namespace hvar
