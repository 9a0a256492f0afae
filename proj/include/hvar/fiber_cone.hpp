#pragma once

// Reduction numbers of a reduction Q whose generators are GF(p)-linear
// combinations of the minimal generators of a monomial ideal I.  By
// Nakayama, I^{s+1} = Q I^s in the local ring exactly when the degree-one
// part of Q spans F_{s+1} over F_s in the fiber cone F = sum I^n / m I^n,
// whose degree-n basis is the set of minimal generators of I^n.

#include "hvar/gfp_polynomial.hpp"
#include "hvar/monomial.hpp"

#include <cstdint>
#include <vector>

namespace hvar {

struct LinearReduction {
    MonomialIdeal base;                               // I
    std::vector<std::vector<std::uint32_t>> coeffs;   // one row per generator of Q
    std::uint32_t prime = kDefaultPrime;
};

/// Least s <= cap with I^{s+1} = Q I^s.  Throws CapExceeded.
int fiber_reduction_number(const LinearReduction& q, int cap = 30);

/// Rank of a dense matrix over GF(p); rows are consumed.
std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t prime);

}  // namespace hvar
