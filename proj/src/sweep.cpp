#include "hvar/sweep.hpp"

#include "hvar/errors.hpp"
#include "hvar/newton.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace hvar {

const char* const kToolVersion = "0.3.0";

namespace {

struct Check {
    std::string id;
    Bindings bindings;
};

// One generated instance before its checks run.
struct Planned {
    explicit Planned(RingContext c) : ctx(std::move(c)) {}

    RingContext ctx;
    Json description = Json::object();
    std::map<std::string, Ideal> ideals;
    std::vector<Check> checks;
    std::function<Json()> extra;  // family-specific details, may be empty
    // When set, a minimal reduction of this ideal is sampled at run time and
    // the single-ideal battery runs against it.
    std::optional<Ideal> reduce;
};

using Generator = std::function<std::vector<Planned>(const SweepParams&, int count, std::uint64_t seed)>;

const std::vector<int>& param(const SweepParams& p, const std::string& key) { return p.at(key); }

std::vector<int> range(int lo, int hi) {
    std::vector<int> v(static_cast<std::size_t>(hi - lo + 1));
    std::iota(v.begin(), v.end(), lo);
    return v;
}

int pick(std::mt19937_64& rng, const std::vector<int>& values) {
    return values[std::uniform_int_distribution<std::size_t>(0, values.size() - 1)(rng)];
}

Bindings bind(std::initializer_list<std::pair<const std::string, Ideal>> b) { return Bindings(b); }

// The battery for J inside I; I also gets the single-ideal checks.
void pair_battery(Planned& p, const Ideal& j, const Ideal& i) {
    for (const char* id : {"e0_variation", "e1_single_extension", "e1_multi_extension", "fiber_multiplicity_variation"}) {
        p.checks.push_back({id, bind({{"J", j}, {"I", i}})});
    }
}

void single_battery(Planned& p, const Ideal& i, const std::optional<Ideal>& q) {
    std::vector<const char*> ids = {"reduction_order_bound", "reduction_colength_bound", "rossi_reduction",
                                    "sally_bound",           "elias",                    "rossi_valla"};
    if (i.is_monomial()) {
        for (const char* id : {"normalization_multiplicity", "normal_e1_nonnegative", "normal_e1_regular"}) ids.push_back(id);
    }
    for (const char* id : ids) {
        Bindings b = bind({{"I", i}});
        const std::string id_s = id;
        if (q && (id_s == "sally_bound" || id_s == "rossi_reduction")) b.emplace("Q", *q);
        if (q && id_s == "reduction_colength_bound") b.emplace("J", *q);
        p.checks.push_back({id, std::move(b)});
    }
    if (q) p.checks.push_back({"e1_parameter_extension", bind({{"Q", *q}, {"I", i}})});
}

std::vector<Planned> pure_power_extension(const SweepParams& params, int count, std::uint64_t) {
    std::vector<Planned> out;
    const RingContext ctx = RingContext::poly(3);
    const PolyRing ring{3, ctx.prime, {}};
    for (int a : param(params, "a")) {
        for (int b : param(params, "b")) {
            for (int c : param(params, "c")) {
                for (int al : param(params, "alpha")) {
                    for (int be : param(params, "beta")) {
                        for (int ga : param(params, "gamma")) {
                            if (count >= 0 && static_cast<int>(out.size()) >= count) return out;
                            // alpha/a + beta/b + gamma/c < 1
                            if (al * b * c + be * a * c + ga * a * b >= a * b * c) continue;
                            Planned p{ctx};
                            const MonomialIdeal j = MonomialIdeal::pure_powers({a, b, c});
                            const MonomialIdeal i = sum(j, MonomialIdeal::minimalize(3, {{al, be, ga}}));
                            p.description = {{"a", a}, {"b", b}, {"c", c}, {"alpha", al}, {"beta", be}, {"gamma", ga}};
                            p.ideals = {{"J", j}, {"I", i}};
                            pair_battery(p, j, i);
                            std::optional<Ideal> q;
                            if (a > 3 * al && b > 3 * be && c > 3 * ga) {
                                auto mono = [&](int x, int y, int z) { return GfpPolynomial::monomial(ring, {x, y, z}); };
                                q = GroebnerIdeal(ring, {PolyOps::sub(ring, mono(a, 0, 0), mono(0, 0, c)),
                                                         PolyOps::sub(ring, mono(0, b, 0), mono(0, 0, c)), mono(al, be, ga)});
                                p.ideals.emplace("Q", *q);
                            }
                            single_battery(p, i, q);
                            out.push_back(std::move(p));
                        }
                    }
                }
            }
        }
    }
    return out;
}

// J: random pure powers, sometimes with a few mixed monomials added; I: J
// plus monomials integral over J.
Planned random_monomial(int d, const SweepParams& params, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0;; ++attempt) {
        std::vector<int> pure;
        for (int k = 0; k < d; ++k) pure.push_back(pick(rng, param(params, "exp")));
        MonomialIdeal j = MonomialIdeal::pure_powers(pure);
        if (std::uniform_int_distribution<int>(0, 1)(rng) == 1) {
            ExponentVector v(static_cast<std::size_t>(d));
            for (int k = 0; k < d; ++k) v[static_cast<std::size_t>(k)] = std::uniform_int_distribution<int>(0, pure[static_cast<std::size_t>(k)] - 1)(rng);
            if (total_degree(v) > 0) j = sum(j, MonomialIdeal::minimalize(d, {v}));
        }
        const int extras = pick(rng, param(params, "extras"));
        MonomialIdeal i = j;
        try {
            for (int k = 0; k < extras; ++k) {
                const ExponentVector h = sample_integral_element(j, rng());
                if (!i.contains(h)) i = sum(i, MonomialIdeal::minimalize(d, {h}));
            }
        } catch (const Exhausted&) {
            if (attempt > 100) throw;
            continue;
        }
        Planned p{RingContext::poly(d)};
        p.ideals = {{"J", j}, {"I", i}};
        p.description = {{"attempts", attempt + 1}};
        pair_battery(p, j, i);
        p.reduce = i;
        return p;
    }
}

std::vector<Planned> random_monomial_family(int d, const SweepParams& params, int count, std::uint64_t seed) {
    std::vector<Planned> out;
    for (int k = 0; k < count; ++k) out.push_back(random_monomial(d, params, mix_seed(seed, static_cast<std::uint64_t>(k))));
    return out;
}

std::vector<Planned> semigroup_small(const SweepParams& params, int count, std::uint64_t seed) {
    std::vector<Planned> out;
    for (int k = 0; k < count; ++k) {
        std::mt19937_64 rng(mix_seed(seed, static_cast<std::uint64_t>(k)));
        SemigroupPtr h;
        while (!h) {
            std::vector<std::int64_t> gens;
            const int n = pick(rng, param(params, "gens"));
            for (int g = 0; g < n; ++g) gens.push_back(pick(rng, param(params, "gen")));
            try {
                h = NumericalSemigroup::make(gens);
            } catch (const NotCoprime&) {
            }
        }
        const RingContext ctx = RingContext::numerical(h);
        // ideal generators among the elements of H below c + 2e
        std::vector<std::int64_t> pool;
        for (std::int64_t x = 1; x < h->conductor() + 2 * h->multiplicity(); ++x) {
            if (h->contains(x)) pool.push_back(x);
        }
        std::shuffle(pool.begin(), pool.end(), rng);
        const auto n = std::min<std::size_t>(pool.size(), static_cast<std::size_t>(pick(rng, param(params, "ideal_gens"))));
        std::vector<std::int64_t> gens(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(n));
        const SemigroupIdeal i = SemigroupIdeal::make(h, gens);
        const SemigroupIdeal q = SemigroupIdeal::make(h, {i.min_value()});
        Planned p{ctx};
        p.ideals = {{"I", i}, {"Q", q}};
        if (i.nu() >= 2) {
            std::vector<std::int64_t> rest(i.gens().begin(), i.gens().end() - 1);
            const SemigroupIdeal j = SemigroupIdeal::make(h, rest);
            p.ideals.emplace("J", j);
            pair_battery(p, j, i);
        }
        p.checks.push_back({"generator_count_dim1", bind({{"x", q}, {"I", i}})});
        single_battery(p, i, Ideal(q));
        p.checks.push_back({"e1_maximal_ideal", {}});
        p.checks.push_back({"kirby", {}});
        p.extra = [ctx, q, i] { return Json{{"e1_series", int_json(e1_series_check(ctx, q, i))}}; };
        out.push_back(std::move(p));
    }
    return out;
}

Json claim(const std::string& name, const Json& paper, const Json& engine) {
    return Json{{"claim", name}, {"paper", paper}, {"engine", engine}, {"agree", paper == engine}};
}

// The claims made for the ideal I with principal reduction Q in
// <a, al-1, al+1, ..., al+a-3>, evaluated by the engines.
Json canonical_claims(int a, const RingContext& ctx, const SemigroupIdeal& q, const SemigroupIdeal& i) {
    const Ideal iq(q), ii(i);
    const Ideal m = maximal_ideal(ctx);
    const HilbertData h = hilbert_coeffs(ctx, ii);
    const ReductionReport red = reduction_number(ctx, iq, ii);
    const std::int64_t len_i = colength(ii);
    const std::int64_t len_iq = colength(iq) - len_i;
    const Int e1_series = e1_series_check(ctx, iq, ii);

    // I is canonical when it is a translate of the canonical ideal
    const SemigroupIdeal omega = canonical_ideal(ctx.semigroup);
    const std::int64_t shift = i.min_value() - omega.min_value();
    bool translate = true;
    for (std::int64_t x = 0; x < std::max(i.conductor(), omega.conductor() + shift) + 1; ++x) {
        if (i.contains(x) != (x >= shift && omega.contains(x - shift))) translate = false;
    }

    const BoundReport multi = check_e1_multi_extension(ctx, iq, ii);
    Json rows = Json::array();
    rows.push_back(claim("I is a canonical ideal", true, translate));
    rows.push_back(claim("mI in Q", true, contains(iq, product(m, ii))));
    rows.push_back(claim("lambda(I/Q) = a-3", a - 3, len_iq));
    rows.push_back(claim("e_1(I) = a-2", a - 2, int_json(h.e(1))));
    rows.push_back(claim("I^3 = QI^2", true, local_equal(power(ii, 3), product(iq, power(ii, 2)))));
    rows.push_back(claim("red_Q(I) = 2", 2, red.reduction_number));
    rows.push_back(claim("e_1(I) = e_0(I) - lambda(R/I) + 1", true, h.e(1) == h.e(0) - len_i + 1));
    const Json engine_equal = multi.lhs && multi.rhs ? Json(*multi.lhs == *multi.rhs) : Json(nullptr);
    rows.push_back(claim("e_1(I) = lambda(R/(Q:I)) [C(m+s,s)-1] exactly when a = 4", a == 4, engine_equal));
    return Json{{"I", i.gens()},
                {"claims", std::move(rows)},
                {"values",
                 {{"e", to_json(h.poly)},
                  {"e1_series", int_json(e1_series)},
                  {"colength_I", len_i},
                  {"length_I_mod_Q", len_iq},
                  {"reduction_number", red.reduction_number},
                  {"multi_extension_lhs", multi.lhs ? int_json(*multi.lhs) : Json(nullptr)},
                  {"multi_extension_rhs", multi.rhs ? int_json(*multi.rhs) : Json(nullptr)}}}};
}

// The stated generators, and the canonical ideal translated to the same
// least value, side by side.
Json canonical_table(int a, int l, const RingContext& ctx, const SemigroupIdeal& q, const SemigroupIdeal& stated) {
    const SemigroupIdeal omega = canonical_ideal(ctx.semigroup);
    std::vector<std::int64_t> shifted;
    for (std::int64_t g : omega.gens()) shifted.push_back(g - omega.min_value() + q.min_value());
    const SemigroupIdeal translate = SemigroupIdeal::make(ctx.semigroup, shifted);
    return Json{{"a", a},
                {"l", l},
                {"canonical_ideal", omega.gens()},
                {"stated", canonical_claims(a, ctx, q, stated)},
                {"canonical_translate", canonical_claims(a, ctx, q, translate)}};
}

std::vector<Planned> canonical_semigroup(const SweepParams& params, int count, std::uint64_t) {
    std::vector<Planned> out;
    for (int a : param(params, "a")) {
        for (int l : param(params, "l")) {
            if (count >= 0 && static_cast<int>(out.size()) >= count) return out;
            if (a < 4 || l < 2) throw InputError("canonical_semigroup needs a >= 4 and l >= 2");
            std::vector<std::int64_t> gens = {a, a * l - 1};
            std::vector<std::int64_t> igens = {2 * a * l - a - 1};
            for (int k = 1; k <= a - 3; ++k) {
                gens.push_back(a * l + k);
                igens.push_back(3 * a * l - 2 * a - 1 - k);
            }
            const RingContext ctx = RingContext::numerical(NumericalSemigroup::make(gens));
            const SemigroupIdeal i = SemigroupIdeal::make(ctx.semigroup, igens);
            const SemigroupIdeal q = SemigroupIdeal::make(ctx.semigroup, {igens.front()});
            Planned p{ctx};
            p.description = {{"a", a}, {"l", l}, {"listed_generators", igens}};
            p.ideals = {{"I", i}, {"Q", q}};
            p.checks.push_back({"e1_multi_extension", bind({{"J", q}, {"I", i}})});
            p.checks.push_back({"generator_count_dim1", bind({{"x", q}, {"I", i}})});
            single_battery(p, i, Ideal(q));
            p.extra = [a, l, ctx, q, i] { return canonical_table(a, l, ctx, q, i); };
            out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<Planned> maximal_power(const SweepParams& params, int count, std::uint64_t) {
    std::vector<Planned> out;
    for (int d : param(params, "d")) {
        for (int n : param(params, "n")) {
            if (count >= 0 && static_cast<int>(out.size()) >= count) return out;
            const RingContext ctx = RingContext::poly(d);
            const MonomialIdeal i = power(MonomialIdeal::maximal(d), n);
            Planned p{ctx};
            p.description = {{"d", d}, {"n", n}};
            p.ideals = {{"I", i}};
            p.reduce = i;
            p.checks.push_back({"e1_maximal_ideal", {}});
            p.extra = [ctx, i] {
                const HilbertData h = hilbert_coeffs(ctx, i);
                return Json{{"e", to_json(h.poly)}};
            };
            out.push_back(std::move(p));
        }
    }
    return out;
}

struct Family {
    Generator generate;
    SweepParams defaults;
    int default_count;
};

const std::map<std::string, Family>& families() {
    static const std::map<std::string, Family> f = {
        {"pure_power_extension",
         {pure_power_extension,
          {{"a", range(5, 8)}, {"b", range(5, 8)}, {"c", range(5, 8)}, {"alpha", range(1, 2)}, {"beta", range(1, 2)}, {"gamma", range(1, 2)}},
          -1}},
        {"random_monomial_d2",
         {[](const SweepParams& p, int n, std::uint64_t s) { return random_monomial_family(2, p, n, s); },
          {{"exp", range(2, 9)}, {"extras", range(1, 3)}},
          100}},
        {"random_monomial_d3",
         {[](const SweepParams& p, int n, std::uint64_t s) { return random_monomial_family(3, p, n, s); },
          {{"exp", range(2, 5)}, {"extras", range(2, 3)}},
          100}},
        {"semigroup_small", {semigroup_small, {{"gens", range(2, 3)}, {"gen", range(2, 11)}, {"ideal_gens", range(1, 3)}}, 50}},
        {"canonical_semigroup", {canonical_semigroup, {{"a", range(4, 5)}, {"l", range(2, 3)}}, -1}},
        {"maximal_power", {maximal_power, {{"d", {2}}, {"n", range(2, 5)}}, -1}},
    };
    return f;
}

Json run_planned(const Planned& p, const std::string& id, const CheckOptions& opt) {
    Json ideals = Json::object();
    for (const auto& [name, ideal] : p.ideals) ideals[name] = to_json(ideal);
    Json reports = Json::array();
    Json errors = Json::array();
    std::vector<Check> checks = p.checks;
    if (p.reduce) {
        Planned late(p.ctx);
        try {
            const ReductionReport q = minimal_reduction(p.ctx, *p.reduce, opt.samples, opt.seed, opt.reduction_cap);
            ideals["Q"] = q.found ? to_json(q.q) : Json(nullptr);
            single_battery(late, *p.reduce, q.found ? std::optional<Ideal>(q.q) : std::nullopt);
        } catch (const Error& e) {
            errors.push_back(Json{{"theorem_id", "minimal_reduction"}, {"error", e.what()}});
            single_battery(late, *p.reduce, std::nullopt);
        }
        checks.insert(checks.end(), late.checks.begin(), late.checks.end());
    }
    for (const auto& c : checks) {
        try {
            reports.push_back(to_json(run_checker(c.id, p.ctx, c.bindings, opt)));
        } catch (const Error& e) {
            errors.push_back(Json{{"theorem_id", c.id}, {"error", e.what()}});
        }
    }
    Json j{{"id", id}, {"ring", to_json(p.ctx)}, {"params", p.description}, {"ideals", std::move(ideals)},
           {"reports", std::move(reports)}, {"errors", std::move(errors)}};
    if (p.extra) {
        try {
            j["details"] = p.extra();
        } catch (const Error& e) {
            j["errors"].push_back(Json{{"theorem_id", "details"}, {"error", e.what()}});
        }
    }
    return j;
}

}  // namespace

SweepParams parse_params(const std::string& text) {
    SweepParams out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw InputError("parameter '" + item + "' is not key=range");
        const std::string key = item.substr(0, eq);
        const std::string value = item.substr(eq + 1);
        std::vector<int> values;
        try {
            if (const auto dots = value.find(".."); dots != std::string::npos) {
                const int lo = std::stoi(value.substr(0, dots));
                const int hi = std::stoi(value.substr(dots + 2));
                if (hi < lo) throw InputError("empty range for '" + key + "'");
                values = range(lo, hi);
            } else {
                std::stringstream vs(value);
                std::string v;
                while (std::getline(vs, v, '|')) values.push_back(std::stoi(v));
            }
        } catch (const std::logic_error&) {
            throw InputError("bad range '" + value + "' for '" + key + "'");
        }
        if (values.empty()) throw InputError("empty range for '" + key + "'");
        out[key] = std::move(values);
    }
    return out;
}

const std::vector<std::string>& sweep_families() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [name, _] : families()) v.push_back(name);
        return v;
    }();
    return names;
}

Json run_sweep(const SweepOptions& opt) {
    auto it = families().find(opt.family);
    if (it == families().end()) throw InputError("unknown family '" + opt.family + "'");
    SweepParams params = it->second.defaults;
    for (const auto& [key, values] : opt.params) {
        if (!params.contains(key)) throw InputError("family '" + opt.family + "' has no parameter '" + key + "'");
        params[key] = values;
    }
    if (opt.count < -1) throw InputError("count must be nonnegative");
    // -1 leaves an enumerative family uncapped
    const int count = opt.count >= 0 ? opt.count : it->second.default_count;
    const std::vector<Planned> planned = count == 0 ? std::vector<Planned>{} : it->second.generate(params, count, opt.seed);

    std::vector<Json> results(planned.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < planned.size(); k = next++) {
            CheckOptions check = opt.check;
            check.seed = mix_seed(opt.seed, k);
            char id[32];
            std::snprintf(id, sizeof id, "%04zu", k);
            results[k] = run_planned(planned[k], opt.family + "-" + id, check);
        }
    };
    const int jobs = std::max(1, opt.jobs);
    std::vector<std::thread> threads;
    for (int t = 1; t < jobs; ++t) threads.emplace_back(worker);
    worker();
    for (auto& t : threads) t.join();

    Json aggregate = Json::object();
    for (const auto& r : results) {
        for (const auto& b : r["reports"]) {
            Json& a = aggregate[b["theorem_id"].get<std::string>()];
            if (a.is_null()) a = Json{{"verified", 0}, {"violated", 0}, {"unresolved", 0}, {"skipped", 0}, {"error", 0}};
            a[b["status"].get<std::string>()] = a[b["status"].get<std::string>()].get<int>() + 1;
        }
        for (const auto& e : r["errors"]) {
            Json& a = aggregate[e["theorem_id"].get<std::string>()];
            if (a.is_null()) a = Json{{"verified", 0}, {"violated", 0}, {"unresolved", 0}, {"skipped", 0}, {"error", 0}};
            a["error"] = a["error"].get<int>() + 1;
        }
    }
    Json jparams = Json::object();
    for (const auto& [k, v] : params) jparams[k] = v;
    return Json{{"tool_version", kToolVersion}, {"family", opt.family}, {"seed", opt.seed},     {"params", std::move(jparams)},
                {"count", results.size()},      {"instances", results},  {"aggregate", std::move(aggregate)}};
}

bool any_violated(const Json& sweep_report) {
    for (const auto& [_, counts] : sweep_report.at("aggregate").items()) {
        if (counts.value("violated", 0) > 0) return true;
    }
    return false;
}

}  // namespace hvar
