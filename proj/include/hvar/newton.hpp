#pragma once

// Newton polyhedron conv(gens) + R^d_{>=0} of a monomial ideal and the
// integral closures of its powers, which are the lattice points of the
// scaled polyhedron.

#include "hvar/monomial.hpp"

#include <cstdint>
#include <vector>

namespace hvar {

/// <normal, v> >= offset.  Rational halfspaces are stored scaled to a
/// primitive integer normal; all normal entries are nonnegative.
struct Halfspace {
    std::vector<std::int64_t> normal;
    std::int64_t offset = 0;

    bool operator==(const Halfspace&) const = default;
    auto operator<=>(const Halfspace&) const = default;
};

struct NewtonPolyhedron {
    int dim = 0;
    std::vector<Halfspace> halfspaces;  // sorted, irredundant

    /// Membership of v in scale * P.
    bool contains(const ExponentVector& v, std::int64_t scale = 1) const;
};

constexpr int kMaxNewtonDim = 4;

/// Facets by exact Fourier-Motzkin elimination of the convex-combination
/// multipliers.  Throws DimensionUnsupported for d > 4.
NewtonPolyhedron newton(const MonomialIdeal& ideal);

bool np_contains(const NewtonPolyhedron& np, const ExponentVector& v);

/// The integral closure of I^n.  Throws NotMPrimary.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, int n);

/// Same, reusing a precomputed polyhedron.
MonomialIdeal integral_closure(const MonomialIdeal& ideal, const NewtonPolyhedron& np, int n);

/// A monomial integral over J that is not in J, drawn deterministically from
/// `seed`.  Throws Exhausted when J is integrally closed.
ExponentVector sample_integral_element(const MonomialIdeal& j, std::uint64_t seed);

}  // namespace hvar
