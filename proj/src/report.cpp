#include "hvar/report.hpp"

#include "hvar/errors.hpp"

#include <limits>

namespace hvar {

Json int_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
        return static_cast<std::int64_t>(v);
    }
    return v.str();
}

Int json_int(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InputError("expected an integer, got " + j.dump());
}

Json to_json(const RingContext& ctx) {
    Json j;
    if (ctx.kind == RingContext::Kind::semigroup) {
        j["kind"] = "semigroup";
        j["gens"] = ctx.semigroup->generators();
    } else {
        j["kind"] = "poly";
        j["vars"] = ctx.dim;
        j["char"] = ctx.prime;
    }
    return j;
}

Json to_json(const Ideal& i) {
    Json j;
    switch (i.engine()) {
        case Ideal::Engine::monomial:
            j["engine"] = "monomial";
            j["gens"] = i.monomial().gens();
            break;
        case Ideal::Engine::semigroup:
            j["engine"] = "semigroup";
            j["gens"] = i.semigroup().gens();
            break;
        case Ideal::Engine::groebner: {
            j["engine"] = "polynomials";
            const GroebnerIdeal& g = i.groebner();
            Json polys = Json::array();
            for (const auto& f : g.gens()) {
                Json terms = Json::array();
                for (const auto& t : f.terms()) {
                    std::vector<int> exp(t.mono.exp.begin(), t.mono.exp.begin() + g.dim());
                    // symmetric representative, so -1 reads as -1
                    const std::int64_t c = t.coef > g.ring().prime / 2 ? static_cast<std::int64_t>(t.coef) - g.ring().prime
                                                                       : static_cast<std::int64_t>(t.coef);
                    terms.push_back(Json{{"exp", exp}, {"coef", c}});
                }
                polys.push_back(std::move(terms));
            }
            j["gens"] = std::move(polys);
            break;
        }
    }
    return j;
}

Json to_json(const BinomialPolynomial& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs) out.push_back(int_json(c));
    return out;
}

Json to_json(const LengthSequence& s) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(int_json(v));
    return Json{{"start_n", s.start_n}, {"values", std::move(values)}};
}

Json to_json(const HilbertData& h) {
    return Json{{"e", to_json(h.poly)}, {"postulation", h.postulation}, {"sequence", to_json(h.sequence)}, {"method", h.method}};
}

Json to_json(const FiberData& f) {
    return Json{{"f", to_json(f.poly)}, {"sequence", to_json(f.sequence)}, {"f0_iterated", int_json(f.f0_iterated)}};
}

Json to_json(const NormalData& n) {
    return Json{{"e", to_json(n.hilbert.poly)},
                {"f", to_json(n.fiber.poly)},
                {"postulation", n.hilbert.postulation},
                {"sequence", to_json(n.hilbert.sequence)},
                {"fiber_sequence", to_json(n.fiber.sequence)}};
}

Json to_json(const ReductionReport& r) {
    Json j;
    j["found"] = r.found;
    j["reduction_number"] = r.found ? Json(r.reduction_number) : Json(nullptr);
    j["is_minimal"] = r.is_minimal;
    j["sampled"] = r.sampled;
    j["samples_tried"] = r.samples_tried;
    j["Q"] = r.found ? to_json(r.q) : Json(nullptr);
    if (r.sampled) {
        j["prime"] = r.prime;
        j["coefficients"] = r.coeffs;
    }
    return j;
}

Json to_json(const SallyReport& s) {
    return Json{{"s0", int_json(s.s0)},
                {"e1_I", int_json(s.e1_i)},
                {"e1_Q", int_json(s.e1_q)},
                {"e0_I", int_json(s.e0_i)},
                {"colength_I", s.colength_i},
                {"hypotheses_note", s.hypotheses_note}};
}

Json to_json(const BoundReport& b) {
    Json hyps = Json::array();
    for (const auto& h : b.hypotheses) hyps.push_back(Json{{"name", h.name}, {"ok", h.ok}, {"detail", h.detail}});
    Json sides = Json::array();
    for (const auto& s : b.side_checks) {
        sides.push_back(Json{{"relation", s.relation}, {"lhs", int_json(s.lhs)}, {"rhs", int_json(s.rhs)}, {"holds", s.holds}});
    }
    const auto slack = b.slack();
    return Json{{"theorem_id", b.theorem_id},
                {"hypotheses_ok", b.hypotheses_ok()},
                {"hypotheses", std::move(hyps)},
                {"lhs", b.lhs ? int_json(*b.lhs) : Json(nullptr)},
                {"rhs", b.rhs ? int_json(*b.rhs) : Json(nullptr)},
                {"holds", b.holds},
                {"slack", slack ? int_json(*slack) : Json(nullptr)},
                {"side_checks", std::move(sides)},
                {"witness", b.witness},
                {"status", to_string(b.status)},
                {"sampled", b.sampled}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hvar
