#include "hvar/sequence.hpp"

#include "hvar/errors.hpp"

#include <string>

namespace hvar {

Int binomial(Int top, int k) {
    if (k < 0) return 0;
    Int num = 1;
    Int den = 1;
    for (int j = 0; j < k; ++j) {
        num *= top - j;
        den *= j + 1;
    }
    return num / den;
}

Int choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || (n >= 0 && k > n)) return 0;
    return binomial(Int(n), static_cast<int>(k));
}

LengthSequence finite_difference(const LengthSequence& seq) {
    if (seq.values.size() < 2) {
        throw InputError("finite_difference needs at least two values");
    }
    LengthSequence out;
    out.start_n = seq.start_n;
    out.values.reserve(seq.values.size() - 1);
    for (std::size_t i = 0; i + 1 < seq.values.size(); ++i) {
        out.values.push_back(seq.values[i + 1] - seq.values[i]);
    }
    return out;
}

Int eval_binomial(const BinomialPolynomial& p, std::int64_t n) {
    Int total = 0;
    const int dg = p.degree;
    for (int i = 0; i <= dg && i < static_cast<int>(p.coeffs.size()); ++i) {
        Int term = p.coeffs[static_cast<std::size_t>(i)] * binomial(Int(n + dg - 1 - i), dg - i);
        if (p.alternating && (i % 2 == 1)) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

namespace {

// Peels the leading coefficient off with the D-th difference, then recurses
// on the residual, which lives in the degree D-1 basis.
void peel(std::int64_t n0, std::vector<Int> vals, int degree, bool alternating,
          std::vector<Int>& out) {
    Int lead = 0;
    for (int k = 0; k <= degree; ++k) {
        Int term = choose(degree, k) * vals[static_cast<std::size_t>(k)];
        if ((degree - k) % 2 == 1) {
            lead -= term;
        } else {
            lead += term;
        }
    }
    out.push_back(lead);
    if (degree == 0) return;
    std::vector<Int> residual;
    residual.reserve(static_cast<std::size_t>(degree));
    for (int k = 0; k < degree; ++k) {
        Int r = vals[static_cast<std::size_t>(k)] -
                lead * binomial(Int(n0 + k + degree - 1), degree);
        residual.push_back(alternating ? Int(-r) : r);
    }
    peel(n0, std::move(residual), degree - 1, alternating, out);
}

}  // namespace

FitReport fit_binomial(const LengthSequence& seq, int degree, int guard, bool alternating) {
    if (degree < 0 || guard < 0) throw InputError("degree and guard must be nonnegative");
    const std::size_t window = static_cast<std::size_t>(degree + 1 + guard);
    if (seq.values.size() < window) {
        throw WindowTooShort("sequence has " + std::to_string(seq.values.size()) +
                             " values, window needs " + std::to_string(window));
    }
    const std::size_t first = seq.values.size() - window;
    const std::int64_t n0 = seq.start_n + static_cast<std::int64_t>(first);

    std::vector<Int> head(seq.values.begin() + static_cast<std::ptrdiff_t>(first),
                          seq.values.begin() + static_cast<std::ptrdiff_t>(first) + degree + 1);
    FitReport report;
    report.poly.degree = degree;
    report.poly.alternating = alternating;
    peel(n0, std::move(head), degree, alternating, report.poly.coeffs);

    for (std::size_t i = first; i < seq.values.size(); ++i) {
        const std::int64_t n = seq.start_n + static_cast<std::int64_t>(i);
        if (eval_binomial(report.poly, n) != seq.values[i]) {
            throw NonPolynomial("guard sample at n=" + std::to_string(n) +
                                " disagrees with the degree-" + std::to_string(degree) + " fit");
        }
    }
    std::int64_t post = n0;
    for (std::size_t i = first; i-- > 0;) {
        const std::int64_t n = seq.start_n + static_cast<std::int64_t>(i);
        if (eval_binomial(report.poly, n) != seq.values[i]) break;
        post = n;
    }
    report.postulation_index = post;
    report.samples_used = static_cast<int>(window);
    return report;
}

LengthSequence tabulate(const BinomialPolynomial& p, std::int64_t start_n, int count) {
    LengthSequence seq;
    seq.start_n = start_n;
    for (int i = 0; i < count; ++i) seq.values.push_back(eval_binomial(p, start_n + i));
    return seq;
}

}  // namespace hvar
