#pragma once

// m-primary monomial ideals of k[x_1..x_d] localized at the origin.  Ideals
// are stored by their minimal generators in lexicographic order, so two
// ideals are equal exactly when their generator lists are.

#include <cstdint>
#include <random>
#include <vector>

namespace hvar {

using ExponentVector = std::vector<int>;

bool divides(const ExponentVector& a, const ExponentVector& b);  // a <= b componentwise
int total_degree(const ExponentVector& v);

class MonomialIdeal {
public:
    MonomialIdeal() = default;

    /// Drops dominated vectors and sorts.  Throws InputError on an empty
    /// list or a dimension mismatch.
    static MonomialIdeal minimalize(int dim, std::vector<ExponentVector> raw);
    static MonomialIdeal unit(int dim);
    static MonomialIdeal maximal(int dim);
    static MonomialIdeal pure_powers(const std::vector<int>& exponents);

    int dim() const { return dim_; }
    const std::vector<ExponentVector>& gens() const { return gens_; }
    std::size_t nu() const { return gens_.size(); }

    bool is_unit() const;
    bool is_m_primary() const;
    bool contains(const ExponentVector& v) const;
    bool contains(const MonomialIdeal& other) const;

    /// Least exponent e with x_i^e in the ideal, or -1.
    int pure_power(int axis) const;

    /// lambda(R/I); throws NotMPrimary.
    std::int64_t colength() const;

    /// Minimum total degree of a generator, i.e. the m-adic order.
    int order() const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    MonomialIdeal(int dim, std::vector<ExponentVector> gens) : dim_(dim), gens_(std::move(gens)) {}

    int dim_ = 0;
    std::vector<ExponentVector> gens_;
};

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal power(const MonomialIdeal& a, int n);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);

/// (J : x^c)
MonomialIdeal colon(const MonomialIdeal& j, const ExponentVector& c);
/// (J : I), the intersection of (J : h) over the generators h of I.
MonomialIdeal colon(const MonomialIdeal& j, const MonomialIdeal& i);

/// Generators of `i` that do not lie in `j`; their count is nu(I/J) when J is
/// contained in I.
std::vector<ExponentVector> extra_generators(const MonomialIdeal& j, const MonomialIdeal& i);

/// Staircase count for an arbitrary (not necessarily minimal) generator list
/// of an m-primary ideal.
std::int64_t staircase_count(int dim, std::vector<ExponentVector> gens);

}  // namespace hvar
