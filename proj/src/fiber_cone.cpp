#include "hvar/fiber_cone.hpp"

#include "hvar/errors.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace hvar {

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t prime) {
    if (rows.empty()) return 0;
    const PolyRing field{1, prime, {}};
    const std::size_t cols = rows.front().size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint32_t inv = field.inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = field.mul(x, inv);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            const std::uint32_t f = rows[r][c];
            if (f == 0) continue;
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] = field.sub(rows[r][k], field.mul(f, rows[rank][k]));
            }
        }
        ++rank;
    }
    return rank;
}

int fiber_reduction_number(const LinearReduction& q, int cap) {
    const MonomialIdeal& base = q.base;
    const auto& gens = base.gens();
    for (const auto& row : q.coeffs) {
        if (row.size() != gens.size()) throw InputError("reduction coefficients do not match the generators");
    }
    MonomialIdeal cur = MonomialIdeal::unit(base.dim());
    for (int s = 0; s <= cap; ++s) {
        const MonomialIdeal next = product(cur, base);
        std::map<ExponentVector, std::size_t> column;
        for (std::size_t k = 0; k < next.gens().size(); ++k) column.emplace(next.gens()[k], k);
        std::vector<std::vector<std::uint32_t>> rows;
        for (const auto& coeff : q.coeffs) {
            for (const auto& u : cur.gens()) {
                std::vector<std::uint32_t> row(next.gens().size(), 0);
                for (std::size_t k = 0; k < gens.size(); ++k) {
                    if (coeff[k] % q.prime == 0) continue;
                    ExponentVector w(u.size());
                    for (std::size_t i = 0; i < u.size(); ++i) w[i] = u[i] + gens[k][i];
                    auto it = column.find(w);
                    // Products that are not minimal generators vanish in the fiber cone.
                    if (it != column.end()) row[it->second] = (row[it->second] + coeff[k]) % q.prime;
                }
                rows.push_back(std::move(row));
            }
        }
        if (rank_mod_p(std::move(rows), q.prime) == next.gens().size()) return s;
        cur = next;
    }
    throw CapExceeded("no reduction number up to " + std::to_string(cap));
}

}  // namespace hvar
