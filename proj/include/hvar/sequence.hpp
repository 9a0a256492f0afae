#pragma once

// Integer sequences that become polynomial, and their coefficients in the
// binomial basis used for Hilbert-Samuel and fiber functions.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <vector>

namespace hvar {

using Int = boost::multiprecision::cpp_int;

/// Values of an integer-valued function at start_n, start_n + 1, ...
struct LengthSequence {
    std::int64_t start_n = 0;
    std::vector<Int> values;

    std::int64_t end_n() const { return start_n + static_cast<std::int64_t>(values.size()); }
    const Int& at(std::int64_t n) const { return values.at(static_cast<std::size_t>(n - start_n)); }

    bool operator==(const LengthSequence&) const = default;
};

/// P(n) = sum_i s_i c_i C(n + D - 1 - i, D - i), where s_i = (-1)^i when
/// `alternating` is set and 1 otherwise.  With D = d this is the
/// Hilbert-Samuel convention (c = e_0..e_d); with D = d - 1 it is the fiber
/// convention for n -> nu(I^n) (c = f_0..f_{d-1}).
struct BinomialPolynomial {
    int degree = 0;
    std::vector<Int> coeffs;
    bool alternating = true;

    bool operator==(const BinomialPolynomial&) const = default;
};

struct FitReport {
    BinomialPolynomial poly;
    std::int64_t postulation_index = 0;
    int samples_used = 0;
};

/// C(top, k) as a polynomial in `top`; defined for negative `top` as well.
Int binomial(Int top, int k);

/// C(n, k) for plain integers, 0 when k < 0 or k > n >= 0.
Int choose(std::int64_t n, std::int64_t k);

LengthSequence finite_difference(const LengthSequence& seq);

Int eval_binomial(const BinomialPolynomial& p, std::int64_t n);

/// Default guard used by adaptive callers.
inline int default_guard(int degree) { return degree + 2; }

/// Fits a degree-`degree` binomial polynomial on the trailing window of
/// degree + 1 + guard samples.  Throws WindowTooShort when the sequence is
/// shorter than the window and NonPolynomial when a guard sample disagrees.
FitReport fit_binomial(const LengthSequence& seq, int degree, int guard,
                       bool alternating = true);

/// Values of p on [start_n, start_n + count).
LengthSequence tabulate(const BinomialPolynomial& p, std::int64_t start_n, int count);

}  // namespace hvar
