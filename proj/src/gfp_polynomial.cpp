#include "hvar/gfp_polynomial.hpp"

#include "hvar/errors.hpp"

#include <algorithm>

namespace hvar {

bool mono_divides(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i) {
        if (a.exp[static_cast<std::size_t>(i)] > b.exp[static_cast<std::size_t>(i)]) return false;
    }
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b, int nvars) {
    Monomial out;
    for (int i = 0; i < nvars; ++i) {
        const auto s = static_cast<std::size_t>(i);
        const int e = a.exp[s] + b.exp[s];
        if (e > 0xFFFF) throw Error("exponent overflow");
        out.exp[s] = static_cast<std::uint16_t>(e);
    }
    return out;
}

Monomial mono_div(const Monomial& a, const Monomial& b, int nvars) {
    Monomial out;
    for (int i = 0; i < nvars; ++i) {
        const auto s = static_cast<std::size_t>(i);
        out.exp[s] = static_cast<std::uint16_t>(a.exp[s] - b.exp[s]);
    }
    return out;
}

Monomial mono_lcm(const Monomial& a, const Monomial& b, int nvars) {
    Monomial out;
    for (int i = 0; i < nvars; ++i) {
        const auto s = static_cast<std::size_t>(i);
        out.exp[s] = std::max(a.exp[s], b.exp[s]);
    }
    return out;
}

bool mono_coprime(const Monomial& a, const Monomial& b, int nvars) {
    for (int i = 0; i < nvars; ++i) {
        const auto s = static_cast<std::size_t>(i);
        if (a.exp[s] != 0 && b.exp[s] != 0) return false;
    }
    return true;
}

namespace {

int degrevlex(const Monomial& a, const Monomial& b, int lo, int hi) {
    const int da = a.degree(lo, hi);
    const int db = b.degree(lo, hi);
    if (da != db) return da < db ? -1 : 1;
    for (int i = hi - 1; i >= lo; --i) {
        const auto s = static_cast<std::size_t>(i);
        if (a.exp[s] != b.exp[s]) return a.exp[s] > b.exp[s] ? -1 : 1;
    }
    return 0;
}

}  // namespace

int PolyRing::compare(const Monomial& a, const Monomial& b) const {
    if (order.elim_vars > 0) {
        const int c = degrevlex(a, b, 0, order.elim_vars);
        if (c != 0) return c;
        return degrevlex(a, b, order.elim_vars, nvars);
    }
    return degrevlex(a, b, 0, nvars);
}

std::uint32_t PolyRing::inv(std::uint32_t a) const {
    if (a == 0) throw Error("inverse of zero");
    // Fermat: a^(p-2).
    std::uint64_t result = 1;
    std::uint64_t base = a % prime;
    std::uint64_t e = prime - 2;
    while (e > 0) {
        if (e & 1) result = result * base % prime;
        base = base * base % prime;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

std::uint32_t PolyRing::reduce(std::int64_t c) const {
    const std::int64_t p = prime;
    std::int64_t r = c % p;
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

GfpPolynomial GfpPolynomial::from_terms(const PolyRing& ring, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [&](const Term& a, const Term& b) { return ring.compare(a.mono, b.mono) > 0; });
    GfpPolynomial out;
    for (auto& t : terms) {
        t.coef %= ring.prime;
        if (!out.terms_.empty() && out.terms_.back().mono == t.mono) {
            out.terms_.back().coef = ring.add(out.terms_.back().coef, t.coef);
            if (out.terms_.back().coef == 0) out.terms_.pop_back();
        } else if (t.coef != 0) {
            out.terms_.push_back(t);
        }
    }
    return out;
}

GfpPolynomial GfpPolynomial::monomial(const PolyRing& ring, const ExponentVector& e, std::int64_t coef) {
    if (static_cast<int>(e.size()) > ring.nvars) throw InputError("too many exponents for the ring");
    Term t;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > 0xFFFF) throw InputError("exponent out of range");
        t.mono.exp[i] = static_cast<std::uint16_t>(e[i]);
    }
    t.coef = ring.reduce(coef);
    return from_terms(ring, {t});
}

GfpPolynomial GfpPolynomial::constant(const PolyRing& ring, std::int64_t c) {
    Term t;
    t.coef = ring.reduce(c);
    return from_terms(ring, {t});
}

GfpPolynomial PolyOps::sub_mul(const PolyRing& r, const GfpPolynomial& f, std::uint32_t c, const Monomial& m,
                               const GfpPolynomial& g, std::size_t skip_f) {
    GfpPolynomial out;
    const auto& a = f.terms_;
    const auto& b = g.terms_;
    out.terms_.reserve(a.size() - skip_f + b.size());
    std::size_t i = skip_f;
    std::size_t j = 0;
    const std::uint32_t neg = c == 0 ? 0 : r.prime - c;
    Term bj;
    auto load = [&](std::size_t k) {
        bj.mono = mono_mul(b[k].mono, m, r.nvars);
        bj.coef = r.mul(b[k].coef, neg);
    };
    if (j < b.size()) load(j);
    while (i < a.size() || j < b.size()) {
        if (j >= b.size()) {
            out.terms_.push_back(a[i++]);
            continue;
        }
        if (i >= a.size()) {
            if (bj.coef != 0) out.terms_.push_back(bj);
            if (++j < b.size()) load(j);
            continue;
        }
        const int cmp = r.compare(a[i].mono, bj.mono);
        if (cmp > 0) {
            out.terms_.push_back(a[i++]);
        } else if (cmp < 0) {
            if (bj.coef != 0) out.terms_.push_back(bj);
            if (++j < b.size()) load(j);
        } else {
            const std::uint32_t s = r.add(a[i].coef, bj.coef);
            if (s != 0) out.terms_.push_back(Term{a[i].mono, s});
            ++i;
            if (++j < b.size()) load(j);
        }
    }
    return out;
}

GfpPolynomial PolyOps::add(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& g) {
    return sub_mul(r, f, r.prime - 1, Monomial{}, g);
}

GfpPolynomial PolyOps::sub(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& g) {
    return sub_mul(r, f, 1, Monomial{}, g);
}

GfpPolynomial PolyOps::scale(const PolyRing& r, const GfpPolynomial& f, std::uint32_t c) {
    return mul_term(r, f, Monomial{}, c);
}

GfpPolynomial PolyOps::mul_term(const PolyRing& r, const GfpPolynomial& f, const Monomial& m, std::uint32_t c) {
    GfpPolynomial out;
    c %= r.prime;
    if (c == 0) return out;
    out.terms_.reserve(f.terms_.size());
    for (const auto& t : f.terms_) out.terms_.push_back(Term{mono_mul(t.mono, m, r.nvars), r.mul(t.coef, c)});
    return out;
}

GfpPolynomial PolyOps::mul(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& g) {
    std::vector<Term> terms;
    terms.reserve(f.terms_.size() * g.terms_.size());
    for (const auto& a : f.terms_) {
        for (const auto& b : g.terms_) terms.push_back(Term{mono_mul(a.mono, b.mono, r.nvars), r.mul(a.coef, b.coef)});
    }
    return GfpPolynomial::from_terms(r, std::move(terms));
}

GfpPolynomial PolyOps::make_monic(const PolyRing& r, const GfpPolynomial& f) {
    if (f.is_zero() || f.lead().coef == 1) return f;
    return scale(r, f, r.inv(f.lead().coef));
}

GfpPolynomial PolyOps::reorder(const PolyRing& to, const GfpPolynomial& f) {
    return GfpPolynomial::from_terms(to, f.terms_);
}

GfpPolynomial PolyOps::divide_exact(const PolyRing& r, const GfpPolynomial& f, const GfpPolynomial& h) {
    if (h.is_zero()) throw Error("division by zero polynomial");
    std::vector<Term> quotient;
    GfpPolynomial rem = f;
    const std::uint32_t lead_inv = r.inv(h.lead().coef);
    while (!rem.is_zero()) {
        const Term& lt = rem.lead();
        if (!mono_divides(h.lead().mono, lt.mono, r.nvars)) throw Error("polynomial division is not exact");
        Term q{mono_div(lt.mono, h.lead().mono, r.nvars), r.mul(lt.coef, lead_inv)};
        quotient.push_back(q);
        rem = sub_mul(r, rem, q.coef, q.mono, h);
    }
    return GfpPolynomial::from_terms(r, std::move(quotient));
}

GfpPolynomial shift_variables(const PolyRing& to, const GfpPolynomial& f, int offset) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Term u;
        u.coef = t.coef;
        for (int i = 0; i + offset < to.nvars; ++i) {
            u.mono.exp[static_cast<std::size_t>(i + offset)] = t.mono.exp[static_cast<std::size_t>(i)];
        }
        terms.push_back(u);
    }
    return GfpPolynomial::from_terms(to, std::move(terms));
}

GfpPolynomial unshift_variables(const PolyRing& to, const GfpPolynomial& f, int offset) {
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
        Term u;
        u.coef = t.coef;
        for (int i = 0; i < offset; ++i) {
            if (t.mono.exp[static_cast<std::size_t>(i)] != 0) throw Error("eliminated variable still present");
        }
        for (int i = 0; i < to.nvars; ++i) {
            u.mono.exp[static_cast<std::size_t>(i)] = t.mono.exp[static_cast<std::size_t>(i + offset)];
        }
        terms.push_back(u);
    }
    return GfpPolynomial::from_terms(to, std::move(terms));
}

}  // namespace hvar
