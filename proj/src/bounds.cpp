#include "hvar/bounds.hpp"

#include "hvar/errors.hpp"
#include "hvar/newton.hpp"
#include "hvar/report.hpp"

#include <algorithm>
#include <set>

namespace hvar {

std::string to_string(BoundStatus s) {
    switch (s) {
        case BoundStatus::verified: return "verified";
        case BoundStatus::violated: return "violated";
        case BoundStatus::unresolved: return "unresolved";
        case BoundStatus::skipped: return "skipped";
    }
    return "skipped";
}

bool BoundReport::hypotheses_ok() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.ok; });
}

std::optional<Int> BoundReport::slack() const {
    if (!lhs || !rhs) return std::nullopt;
    return *rhs - *lhs;
}

namespace {

BoundReport start(const std::string& id, const RingContext& ctx) {
    BoundReport r;
    r.theorem_id = id;
    r.witness["ring"] = to_json(ctx);
    return r;
}

void require(BoundReport& r, const std::string& name, bool ok, const std::string& detail = "") {
    r.hypotheses.push_back(Hypothesis{name, ok, detail});
}

SideCheck at_most(const std::string& relation, const Int& lhs, const Int& rhs) { return SideCheck{relation, lhs, rhs, lhs <= rhs}; }

SideCheck equal(const std::string& relation, const Int& lhs, const Int& rhs) { return SideCheck{relation, lhs, rhs, lhs == rhs}; }

BoundReport finish(BoundReport r, const Int& lhs, const Int& rhs) {
    r.lhs = lhs;
    r.rhs = rhs;
    r.holds = lhs <= rhs;
    const bool sides = std::all_of(r.side_checks.begin(), r.side_checks.end(), [](const SideCheck& s) { return s.holds; });
    r.status = r.holds && sides ? BoundStatus::verified : BoundStatus::violated;
    return r;
}

BoundReport skip(BoundReport r) {
    r.lhs.reset();
    r.rhs.reset();
    r.holds = false;
    r.status = BoundStatus::skipped;
    return r;
}

bool m_primary(const Ideal& i) {
    if (i.is_monomial()) return i.monomial().is_m_primary();
    if (i.is_semigroup()) return true;
    // the origin must be an isolated zero; other components do not matter
    try {
        return local_colength(i.groebner()) > 0;
    } catch (const NonStabilizing&) {
        return false;
    }
}

// nu(I / J) for J inside I: the number of generators of I needed beyond J.
std::int64_t extra_count(const RingContext& ctx, const Ideal& j, const Ideal& i) {
    if (i.is_monomial() && j.is_monomial()) return static_cast<std::int64_t>(extra_generators(j.monomial(), i.monomial()).size());
    if (i.is_semigroup()) {
        std::int64_t n = 0;
        for (auto g : i.semigroup().gens()) n += j.semigroup().contains(g) ? 0 : 1;
        return n;
    }
    return colength(sum(product(maximal_ideal(ctx), i), j)) - colength(i);
}

// Whether every generator of I is integral over J.
bool integral_over(const RingContext& ctx, const Ideal& j, const Ideal& i, int cap) {
    if (j.is_monomial() && i.is_monomial()) {
        const NewtonPolyhedron np = newton(j.monomial());
        return std::all_of(i.monomial().gens().begin(), i.monomial().gens().end(),
                           [&](const ExponentVector& g) { return np.contains(g); });
    }
    if (j.is_semigroup()) return i.semigroup().min_value() >= j.semigroup().min_value();
    try {
        reduction_number(ctx, j, i, cap);
        return true;
    } catch (const CapExceeded&) {
        return false;
    }
}

// Hypotheses shared by the checkers that enlarge J by integral elements.
bool extension_hypotheses(BoundReport& r, const RingContext& ctx, const Ideal& j, const Ideal& i, bool need_integral,
                          const CheckOptions& opt) {
    const bool primary = m_primary(j) && m_primary(i);
    require(r, "J and I are m-primary", primary);
    if (!primary) return false;
    const bool inside = contains(i, j);
    require(r, "J is contained in I", inside);
    if (!inside) return false;
    if (need_integral) {
        const bool integral = integral_over(ctx, j, i, opt.reduction_cap);
        require(r, "I is integral over J", integral);
        if (!integral) return false;
    }
    return true;
}

struct ExtensionData {
    HilbertData hj, hi;
    FiberData fj;
    std::int64_t colon_colength = 0;
    std::int64_t extra = 0;
};

ExtensionData extension_data(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt, BoundReport& r) {
    ExtensionData d;
    d.hj = hilbert_coeffs(ctx, j, opt.max_n);
    d.hi = hilbert_coeffs(ctx, i, opt.max_n);
    d.fj = fiber_coeffs(ctx, j, opt.max_n);
    const Ideal c = colon(j, i);
    d.colon_colength = colength(c);
    d.extra = extra_count(ctx, j, i);
    r.witness["J"] = to_json(j);
    r.witness["I"] = to_json(i);
    r.witness["e_J"] = to_json(d.hj.poly);
    r.witness["e_I"] = to_json(d.hi.poly);
    r.witness["f_J"] = to_json(d.fj.poly);
    r.witness["colon"] = to_json(c);
    r.witness["colon_colength"] = d.colon_colength;
    r.witness["extra_generators"] = d.extra;
    return d;
}

// Reruns a sampled check with fresh seeds, then with a second prime, before
// accepting a failure; a sampled failure is never reported as a violation.
template <class Run>
BoundReport with_resampling(const RingContext& ctx, const CheckOptions& opt, Run run) {
    BoundReport first = run(ctx, opt.seed);
    if (first.status != BoundStatus::violated || !first.sampled) return first;
    int attempts = 1;
    auto accept = [&](BoundReport r) {
        r.witness["attempts"] = attempts;
        return r;
    };
    for (int k = 1; k <= opt.resamples; ++k) {
        ++attempts;
        BoundReport r = run(ctx, mix_seed(opt.seed, 1000 + static_cast<std::uint64_t>(k)));
        if (r.status != BoundStatus::violated) return accept(std::move(r));
    }
    if (ctx.kind == RingContext::Kind::poly && opt.second_prime != ctx.prime) {
        RingContext other = ctx;
        other.prime = opt.second_prime;
        ++attempts;
        BoundReport r = run(other, opt.seed);
        if (r.status != BoundStatus::violated) return accept(std::move(r));
    }
    first.status = BoundStatus::unresolved;
    first.witness["attempts"] = attempts;
    return first;
}

// Minimal reduction of I used by the sampled checkers: the supplied one when
// given, otherwise the best of opt.samples draws.
ReductionReport choose_reduction(const RingContext& ctx, const std::optional<Ideal>& q, const Ideal& i,
                                 std::uint64_t seed, const CheckOptions& opt) {
    if (q) return reduction_number(ctx, *q, i, opt.reduction_cap);
    return minimal_reduction(ctx, i, opt.samples, seed, opt.reduction_cap);
}

Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) q -= 1;
    return q;
}

}  // namespace

BoundReport check_e0_variation(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("e0_variation", ctx);
    if (!extension_hypotheses(r, ctx, j, i, false, opt)) return skip(std::move(r));
    const std::int64_t extra = extra_count(ctx, j, i);
    require(r, "I = (J, h) with at most one h", extra <= 1, "nu(I/J) = " + std::to_string(extra));
    if (extra > 1) return skip(std::move(r));
    const ExtensionData d = extension_data(ctx, j, i, opt, r);
    return finish(std::move(r), d.hj.e(0) - d.hi.e(0), Int(d.colon_colength) * d.fj.f(0));
}

BoundReport check_e1_single_extension(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("e1_single_extension", ctx);
    if (!extension_hypotheses(r, ctx, j, i, true, opt)) return skip(std::move(r));
    const std::int64_t extra = extra_count(ctx, j, i);
    require(r, "I = (J, h) with at most one h", extra <= 1, "nu(I/J) = " + std::to_string(extra));
    if (extra > 1) return skip(std::move(r));
    const ExtensionData d = extension_data(ctx, j, i, opt, r);
    const int s = reduction_number(ctx, j, i, opt.reduction_cap).reduction_number;
    r.witness["reduction_number"] = s;
    return finish(std::move(r), d.hi.e(1) - d.hj.e(1), Int(s) * d.colon_colength * d.fj.f(0));
}

BoundReport check_e1_parameter_extension(const RingContext& ctx, const Ideal& q, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("e1_parameter_extension", ctx);
    if (!extension_hypotheses(r, ctx, q, i, false, opt)) return skip(std::move(r));
    const bool d_generated = static_cast<int>(q.generator_count()) == ctx.dim;
    require(r, "Q is generated by d elements", d_generated);
    if (!d_generated) return skip(std::move(r));
    std::optional<ReductionReport> red;
    try {
        red = reduction_number(ctx, q, i, opt.reduction_cap);
    } catch (const CapExceeded&) {
    }
    require(r, "Q is a reduction of I", red.has_value());
    if (!red) return skip(std::move(r));
    const std::int64_t extra = extra_count(ctx, q, i);
    require(r, "I = (Q, h) for a single h", extra <= 1, "nu(I/Q) = " + std::to_string(extra));
    if (extra > 1) return skip(std::move(r));

    const HilbertData hi = hilbert_coeffs(ctx, i, opt.max_n);
    const HilbertData hq = hilbert_coeffs(ctx, red->q, opt.max_n);
    const Ideal c = colon(red->q, i);
    const std::int64_t colon_len = colength(c);
    const std::int64_t len_i = colength(i);
    const int s = red->reduction_number;
    r.witness["Q"] = to_json(q);
    r.witness["I"] = to_json(i);
    r.witness["e_I"] = to_json(hi.poly);
    r.witness["e_Q"] = to_json(hq.poly);
    r.witness["colon_colength"] = colon_len;
    r.witness["colength_I"] = len_i;
    r.witness["reduction_number"] = s;
    r.witness["gorenstein"] = ctx.gorenstein();
    r.side_checks.push_back(at_most("e_1(Q) <= 0", hq.e(1), 0));
    if (ctx.gorenstein()) {
        const Int canonical = hi.e(0) - len_i;
        r.side_checks.push_back(equal("lambda(R/(Q:I)) = e_0(I) - lambda(R/I)", colon_len, canonical));
        r.side_checks.push_back(at_most("e_1(I) <= red_Q(I) (e_0(I) - lambda(R/I))", hi.e(1), Int(s) * canonical));
    }
    return finish(std::move(r), hi.e(1), Int(s) * colon_len);
}

BoundReport check_e1_multi_extension(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("e1_multi_extension", ctx);
    if (!extension_hypotheses(r, ctx, j, i, true, opt)) return skip(std::move(r));
    const ExtensionData d = extension_data(ctx, j, i, opt, r);
    const int s = reduction_number(ctx, j, i, opt.reduction_cap).reduction_number;
    r.witness["reduction_number"] = s;
    const Int factor = choose(d.extra + s, s) - 1;
    r.witness["binomial_factor"] = int_json(factor);
    return finish(std::move(r), d.hi.e(1) - d.hj.e(1), Int(d.colon_colength) * factor * d.fj.f(0));
}

BoundReport check_fiber_multiplicity_variation(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("fiber_multiplicity_variation", ctx);
    if (!extension_hypotheses(r, ctx, j, i, true, opt)) return skip(std::move(r));
    const ExtensionData d = extension_data(ctx, j, i, opt, r);
    const FiberData fi = fiber_coeffs(ctx, i, opt.max_n);
    const int s = reduction_number(ctx, j, i, opt.reduction_cap).reduction_number;
    r.witness["reduction_number"] = s;
    r.witness["f_I"] = to_json(fi.poly);
    const Int factor = choose(d.extra + s, s) - 1;
    r.side_checks.push_back(at_most("f_0(I) - f_0(J) <= e_1(I) - e_1(J)", fi.f(0) - d.fj.f(0), d.hi.e(1) - d.hj.e(1)));
    return finish(std::move(r), fi.f(0), (1 + Int(d.colon_colength) * factor) * d.fj.f(0));
}

BoundReport check_sally_bound(const RingContext& ctx, const std::optional<Ideal>& q_in, const Ideal& i, const CheckOptions& opt) {
    return with_resampling(ctx, opt, [&](const RingContext& c, std::uint64_t seed) {
        BoundReport r = start("sally_bound", c);
        require(r, "I is m-primary", m_primary(i));
        if (!r.hypotheses_ok()) return skip(std::move(r));
        const ReductionReport red = choose_reduction(c, q_in, i, seed, opt);
        r.sampled = red.sampled;
        require(r, "Q is a minimal reduction of I", red.found && red.is_minimal);
        require(r, "dim S_Q(I) = d", true, "assumed, not computed");
        require(r, "H^0_m(R) is inside I", true, "R is a domain");
        if (!red.found) {
            r.witness["samples_tried"] = red.samples_tried;
            r.status = BoundStatus::violated;
            return r;
        }
        if (!red.is_minimal) return skip(std::move(r));
        const SallyReport sally = sally_multiplicity(c, red.q, i);
        const std::int64_t colon_len = colength(colon(red.q, i));
        const int s = red.reduction_number;
        const std::int64_t nu_i = nu(i);
        r.witness["I"] = to_json(i);
        r.witness["reduction"] = to_json(red);
        r.witness["sally"] = to_json(sally);
        r.witness["colon_colength"] = colon_len;
        r.witness["nu_I"] = nu_i;
        const Int rhs = -sally.e0_i + sally.colength_i + Int(colon_len) * (choose(nu_i - c.dim + s, s) - 1);
        return finish(std::move(r), sally.s0, rhs);
    });
}

BoundReport check_reduction_order_bound(const RingContext& ctx, const Ideal& i, const CheckOptions& opt) {
    return with_resampling(ctx, opt, [&](const RingContext& c, std::uint64_t seed) {
        BoundReport r = start("reduction_order_bound", c);
        require(r, "I is m-primary", m_primary(i));
        require(r, "R is Cohen-Macaulay", true, "polynomial and numerical semigroup rings");
        if (!r.hypotheses_ok()) return skip(std::move(r));
        const HilbertData h = hilbert_coeffs(c, i, opt.max_n);
        const int o = order(i);
        const ReductionReport red = minimal_reduction(c, i, opt.samples, seed, opt.reduction_cap);
        r.sampled = red.sampled;
        r.witness["I"] = to_json(i);
        r.witness["e_I"] = to_json(h.poly);
        r.witness["order"] = o;
        r.witness["reduction"] = to_json(red);
        const Int num = Int(c.dim) * h.e(0) - Int(2 * c.dim - 1) * o;
        const Int rhs = num <= 0 ? Int(0) : floor_div(num, o);
        if (!red.found) {
            r.rhs = rhs;
            r.status = BoundStatus::violated;
            return r;
        }
        return finish(std::move(r), red.reduction_number, rhs);
    });
}

BoundReport check_generator_count_dim1(const RingContext& ctx, const Ideal& x, const Ideal& i, const CheckOptions&) {
    BoundReport r = start("generator_count_dim1", ctx);
    require(r, "dim R = 1", ctx.dim == 1);
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const bool principal = x.generator_count() == 1 && m_primary(x);
    require(r, "x is a parameter", principal);
    if (!principal) return skip(std::move(r));
    const std::int64_t len = colength(x);
    const int s = order(x);
    const std::int64_t nu_i = nu(i);
    r.witness["x"] = to_json(x);
    r.witness["I"] = to_json(i);
    r.witness["colength_x"] = len;
    r.witness["order_x"] = s;
    r.witness["nu_I"] = nu_i;
    r.side_checks.push_back(at_most("nu(I) <= lambda(R/(x))", nu_i, len));
    return finish(std::move(r), nu_i, len / s);
}

BoundReport check_reduction_colength_bound(const RingContext& ctx, const Ideal& i, const std::optional<Ideal>& j,
                                           const CheckOptions& opt) {
    return with_resampling(ctx, opt, [&](const RingContext& c, std::uint64_t seed) {
        BoundReport r = start("reduction_colength_bound", c);
        require(r, "I is m-primary", m_primary(i));
        if (!r.hypotheses_ok()) return skip(std::move(r));
        std::optional<ReductionReport> given;
        if (j) {
            const bool shape = static_cast<int>(j->generator_count()) == c.dim && contains(i, *j);
            if (shape) {
                try {
                    given = reduction_number(c, *j, i, opt.reduction_cap);
                } catch (const CapExceeded&) {
                }
            }
            require(r, "J is a minimal reduction of I", given.has_value());
            if (!given) return skip(std::move(r));
        }
        const ReductionReport sampled = minimal_reduction(c, i, opt.samples, seed, opt.reduction_cap);
        r.sampled = sampled.sampled;
        const HilbertData h = hilbert_coeffs(c, i, opt.max_n);
        r.witness["I"] = to_json(i);
        r.witness["e_I"] = to_json(h.poly);
        r.witness["reduction"] = to_json(sampled);

        // lambda(R/J) for the minimal reduction J the bound is stated with.
        Int len_j;
        if (given) {
            len_j = colength(given->q);
            r.witness["J"] = to_json(*j);
            r.witness["colength_J_method"] = "exact";
        } else if (!sampled.found) {
            r.status = BoundStatus::violated;
            return r;
        } else if (!sampled.q.is_groebner() || c.dim <= 2) {
            len_j = colength(sampled.q);
            r.witness["colength_J_method"] = "exact";
            r.side_checks.push_back(equal("lambda(R/J) = e_0(I)", len_j, h.e(0)));
        } else {
            len_j = h.e(0);
            r.witness["colength_J_method"] = "e_0(I) for a parameter reduction of a Cohen-Macaulay ring";
        }
        r.witness["colength_J"] = int_json(len_j);
        Int bound = Int(c.dim) * len_j - 2 * c.dim + 1;
        if (bound < 0) bound = 0;

        std::optional<int> best;
        if (sampled.found) best = sampled.reduction_number;
        if (given && (!best || given->reduction_number < *best)) best = given->reduction_number;
        if (given && (!sampled.found || given->reduction_number <= sampled.reduction_number)) r.sampled = false;

        try {
            const int criterion = nu_power_criterion(c, i, opt.reduction_cap);
            r.witness["criterion_bound"] = criterion;
            r.side_checks.push_back(at_most("generator-count criterion <= bound", criterion, bound));
        } catch (const CapExceeded&) {
            r.witness["criterion_bound"] = nullptr;
        }
        if (!best) {
            r.rhs = bound;
            r.status = BoundStatus::violated;
            return r;
        }
        return finish(std::move(r), *best, bound);
    });
}

BoundReport check_e1_maximal_ideal(const RingContext& ctx, const CheckOptions& opt) {
    return with_resampling(ctx, opt, [&](const RingContext& c, std::uint64_t seed) {
        BoundReport r = start("e1_maximal_ideal", c);
        const Ideal m = maximal_ideal(c);
        const ReductionReport red = minimal_reduction(c, m, opt.samples, seed, opt.reduction_cap);
        r.sampled = red.sampled;
        require(r, "Q is a minimal reduction of m", red.found && red.is_minimal);
        if (!red.found) {
            r.status = BoundStatus::violated;
            return r;
        }
        if (!red.is_minimal) return skip(std::move(r));
        const HilbertData hm = hilbert_coeffs(c, m, opt.max_n);
        const HilbertData hq = hilbert_coeffs(c, red.q, opt.max_n);
        const std::int64_t len_q = colength(red.q);
        const std::int64_t colon_len = colength(colon(red.q, m));
        const std::int64_t nu_m = nu(m);
        const std::int64_t top = nu_m + len_q * c.dim - 3 * c.dim + 1;
        r.witness["reduction"] = to_json(red);
        r.witness["e_m"] = to_json(hm.poly);
        r.witness["colength_Q"] = len_q;
        r.witness["colon_colength"] = colon_len;
        r.witness["nu_m"] = nu_m;
        r.side_checks.push_back(at_most("e_1(m) <= e_1(m) - e_1(Q)", hm.e(1), hm.e(1) - hq.e(1)));
        return finish(std::move(r), hm.e(1), Int(colon_len) * (choose(top, nu_m - c.dim) - 1));
    });
}

BoundReport check_rossi_reduction(const RingContext& ctx, const std::optional<Ideal>& q, const Ideal& i, const CheckOptions& opt) {
    return with_resampling(ctx, opt, [&](const RingContext& c, std::uint64_t seed) {
        BoundReport r = start("rossi_reduction", c);
        require(r, "dim R <= 2", c.dim <= 2);
        require(r, "R is Cohen-Macaulay", true, "polynomial and numerical semigroup rings");
        require(r, "I is m-primary", m_primary(i));
        if (!r.hypotheses_ok()) return skip(std::move(r));
        const ReductionReport red = choose_reduction(c, q, i, seed, opt);
        r.sampled = red.sampled;
        require(r, "Q is a minimal reduction of I", red.found && red.is_minimal);
        if (!red.found) {
            r.status = BoundStatus::violated;
            return r;
        }
        if (!red.is_minimal) return skip(std::move(r));
        const HilbertData h = hilbert_coeffs(c, i, opt.max_n);
        const std::int64_t len = colength(i);
        r.witness["I"] = to_json(i);
        r.witness["e_I"] = to_json(h.poly);
        r.witness["colength_I"] = len;
        r.witness["reduction"] = to_json(red);
        return finish(std::move(r), red.reduction_number, h.e(1) - h.e(0) + len + 1);
    });
}

BoundReport check_normalization_multiplicity(const RingContext& ctx, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("normalization_multiplicity", ctx);
    require(r, "normalization computable (monomial ideal)", i.is_monomial());
    if (!r.hypotheses_ok()) return skip(std::move(r));
    require(r, "I is m-primary", m_primary(i));
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const HilbertData h = hilbert_coeffs(ctx, i, opt.max_n);
    const FiberData f = fiber_coeffs(ctx, i, opt.max_n);
    const NormalData n = normal_coeffs(ctx, i, opt.max_n);
    const Ideal closure = integral_closure(i);
    const std::int64_t len = colength(i);
    const std::int64_t len_bar = colength(closure);
    const Int adic = f.f(0) * len;
    const Int normal = n.fiber.f(0) * len_bar;
    r.witness["I"] = to_json(i);
    r.witness["e_I"] = to_json(h.poly);
    r.witness["f_I"] = to_json(f.poly);
    r.witness["normal"] = to_json(n);
    r.witness["colength_I"] = len;
    r.witness["colength_closure"] = len_bar;
    r.witness["adic_branch"] = int_json(adic);
    r.witness["normal_branch"] = int_json(normal);
    r.side_checks.push_back(equal("normal e_0 = e_0", n.hilbert.e(0), h.e(0)));
    return finish(std::move(r), h.e(0), std::min(adic, normal));
}

BoundReport check_kirby(const RingContext& ctx, const CheckOptions& opt) {
    BoundReport r = start("kirby", ctx);
    require(r, "dim R = 1", ctx.dim == 1);
    require(r, "R is Cohen-Macaulay", true, "polynomial and numerical semigroup rings");
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const HilbertData h = hilbert_coeffs(ctx, maximal_ideal(ctx), opt.max_n);
    r.witness["e_m"] = to_json(h.poly);
    return finish(std::move(r), h.e(1), binomial(h.e(0), 2));
}

BoundReport check_elias(const RingContext& ctx, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("elias", ctx);
    require(r, "R is Cohen-Macaulay", true, "polynomial and numerical semigroup rings");
    require(r, "I is m-primary", m_primary(i));
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const HilbertData h = hilbert_coeffs(ctx, i, opt.max_n);
    const std::int64_t nu_i = nu(i);
    const std::int64_t len = colength(i);
    r.witness["I"] = to_json(i);
    r.witness["e_I"] = to_json(h.poly);
    r.witness["nu_I"] = nu_i;
    r.witness["colength_I"] = len;
    const Int rhs = binomial(h.e(0), 2) - choose(nu_i - ctx.dim, 2) - len + 1;
    return finish(std::move(r), h.e(1), rhs);
}

BoundReport check_rossi_valla(const RingContext& ctx, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("rossi_valla", ctx);
    require(r, "R is Cohen-Macaulay", true, "polynomial and numerical semigroup rings");
    require(r, "integral closures computable", !i.is_groebner());
    if (!r.hypotheses_ok()) return skip(std::move(r));
    require(r, "I is m-primary", m_primary(i));
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const int s = order(i);
    const Ideal closure = integral_closure(i);
    const Ideal closure_ms = integral_closure(power(maximal_ideal(ctx), s));
    const bool differ = !local_equal(closure, closure_ms);
    require(r, "closure(I) != closure(m^s) with s = o(I)", differ);
    r.witness["order"] = s;
    if (!differ) return skip(std::move(r));
    const HilbertData h = hilbert_coeffs(ctx, i, opt.max_n);
    r.witness["I"] = to_json(i);
    r.witness["e_I"] = to_json(h.poly);
    return finish(std::move(r), h.e(1), binomial(h.e(0) - s, 2));
}

BoundReport check_normal_e1_nonnegative(const RingContext& ctx, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("normal_e1_nonnegative", ctx);
    require(r, "normal filtration computable (monomial ideal)", i.is_monomial());
    if (!r.hypotheses_ok()) return skip(std::move(r));
    require(r, "I is m-primary", m_primary(i));
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const NormalData n = normal_coeffs(ctx, i, opt.max_n);
    r.witness["I"] = to_json(i);
    r.witness["normal"] = to_json(n);
    return finish(std::move(r), 0, n.hilbert.e(1));
}

BoundReport check_normal_e1_regular(const RingContext& ctx, const Ideal& i, const CheckOptions& opt) {
    BoundReport r = start("normal_e1_regular", ctx);
    require(r, "R is regular", ctx.regular());
    require(r, "normal filtration computable (monomial ideal)", i.is_monomial());
    if (!r.hypotheses_ok()) return skip(std::move(r));
    require(r, "I is m-primary", m_primary(i));
    if (!r.hypotheses_ok()) return skip(std::move(r));
    const NormalData n = normal_coeffs(ctx, i, opt.max_n);
    r.witness["I"] = to_json(i);
    r.witness["normal"] = to_json(n);
    return finish(std::move(r), n.hilbert.e(1), floor_div(Int(ctx.dim - 1) * n.hilbert.e(0), 2));
}

// ---------------------------------------------------------------------------
// Registry

namespace {

const Ideal& need(const Bindings& b, const std::string& k) { return b.at(k); }

std::optional<Ideal> maybe(const Bindings& b, const std::string& k) {
    auto it = b.find(k);
    if (it == b.end()) return std::nullopt;
    return it->second;
}

}  // namespace

const std::vector<CheckerInfo>& checker_registry() {
    static const std::vector<CheckerInfo> registry = {
        {"e0_variation", {"J", "I"}, {}, "e_0(J) - e_0(I) <= lambda(R/(J:I)) f_0(J)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_e0_variation(c, need(b, "J"), need(b, "I"), o); }},
        {"e1_single_extension", {"J", "I"}, {}, "e_1(I) - e_1(J) <= red_J(I) lambda(R/(J:I)) f_0(J)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) {
             return check_e1_single_extension(c, need(b, "J"), need(b, "I"), o);
         }},
        {"e1_parameter_extension", {"Q", "I"}, {}, "e_1(I) <= red_Q(I) lambda(R/(Q:I))",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) {
             return check_e1_parameter_extension(c, need(b, "Q"), need(b, "I"), o);
         }},
        {"e1_multi_extension", {"J", "I"}, {}, "e_1(I) - e_1(J) <= lambda(R/(J:I)) [C(m+s, s) - 1] f_0(J)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) {
             return check_e1_multi_extension(c, need(b, "J"), need(b, "I"), o);
         }},
        {"fiber_multiplicity_variation", {"J", "I"}, {}, "f_0(I) <= (1 + lambda(R/(J:I)) [C(m+s, s) - 1]) f_0(J)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) {
             return check_fiber_multiplicity_variation(c, need(b, "J"), need(b, "I"), o);
         }},
        {"sally_bound", {"I"}, {"Q"}, "s_0(Q,I) <= -e_0(I) + lambda(R/I) + lambda(R/(Q:I)) [C(nu(I)-d+s, s) - 1]",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_sally_bound(c, maybe(b, "Q"), need(b, "I"), o); }},
        {"reduction_order_bound", {"I"}, {}, "red(I) <= max(d e_0(I)/o(I) - 2d + 1, 0)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_reduction_order_bound(c, need(b, "I"), o); }},
        {"generator_count_dim1", {"x", "I"}, {}, "nu(I) <= lambda(R/(x)) / s for x in m^s",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) {
             return check_generator_count_dim1(c, need(b, "x"), need(b, "I"), o);
         }},
        {"reduction_colength_bound", {"I"}, {"J"}, "red_Q(I) <= max(d lambda(R/J) - 2d + 1, 0) for some Q",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) {
             return check_reduction_colength_bound(c, need(b, "I"), maybe(b, "J"), o);
         }},
        {"e1_maximal_ideal", {}, {}, "e_1(m) <= lambda(R/(Q:m)) [C(nu(m) + lambda(R/Q) d - 3d + 1, nu(m) - d) - 1]",
         [](const RingContext& c, const Bindings&, const CheckOptions& o) { return check_e1_maximal_ideal(c, o); }},
        {"rossi_reduction", {"I"}, {"Q"}, "red_Q(I) <= e_1(I) - e_0(I) + lambda(R/I) + 1",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_rossi_reduction(c, maybe(b, "Q"), need(b, "I"), o); }},
        {"normalization_multiplicity", {"I"}, {}, "e_0(I) <= min(f_0(I) lambda(R/I), normal f_0(I) lambda(R/closure(I)))",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_normalization_multiplicity(c, need(b, "I"), o); }},
        {"kirby", {}, {}, "e_1(m) <= C(e_0(m), 2)",
         [](const RingContext& c, const Bindings&, const CheckOptions& o) { return check_kirby(c, o); }},
        {"elias", {"I"}, {}, "e_1(I) <= C(e_0(I), 2) - C(nu(I) - d, 2) - lambda(R/I) + 1",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_elias(c, need(b, "I"), o); }},
        {"rossi_valla", {"I"}, {}, "e_1(I) <= C(e_0(I) - s, 2) when I in m^s, closure(I) != closure(m^s)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_rossi_valla(c, need(b, "I"), o); }},
        {"normal_e1_nonnegative", {"I"}, {}, "0 <= normal e_1(I)",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_normal_e1_nonnegative(c, need(b, "I"), o); }},
        {"normal_e1_regular", {"I"}, {}, "normal e_1(I) <= (d - 1) e_0(I) / 2",
         [](const RingContext& c, const Bindings& b, const CheckOptions& o) { return check_normal_e1_regular(c, need(b, "I"), o); }},
    };
    return registry;
}

const CheckerInfo& find_checker(const std::string& id) {
    for (const auto& c : checker_registry()) {
        if (c.id == id) return c;
    }
    throw InputError("unknown check '" + id + "'");
}

BoundReport run_checker(const std::string& id, const RingContext& ctx, const Bindings& bindings, const CheckOptions& opt) {
    const CheckerInfo& info = find_checker(id);
    std::set<std::string> allowed(info.required.begin(), info.required.end());
    allowed.insert(info.optional.begin(), info.optional.end());
    for (const auto& name : info.required) {
        if (!bindings.count(name)) throw InputError("check '" + id + "' needs a binding for " + name);
    }
    for (const auto& [name, ideal] : bindings) {
        (void)ideal;
        if (!allowed.count(name)) throw InputError("check '" + id + "' takes no binding named " + name);
    }
    return info.run(ctx, bindings, opt);
}

}  // namespace hvar
