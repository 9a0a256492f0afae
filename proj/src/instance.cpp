#include "hvar/instance.hpp"

#include "hvar/errors.hpp"

#include <cctype>
#include <fstream>
#include <functional>

namespace hvar {

namespace {

const char* const kLetters = "xyzwv";

int variable_index(const std::string& name, int dim) {
    int idx = -1;
    if (name.size() == 1) {
        const char* p = std::char_traits<char>::find(kLetters, 5, name[0]);
        if (p != nullptr) idx = static_cast<int>(p - kLetters);
    } else if (name.size() == 2 && name[0] == 'x' && name[1] >= '1' && name[1] <= '5') {
        idx = name[1] - '1';
    }
    if (idx < 0 || idx >= dim) throw InputError("unknown variable '" + name + "' in a ring with " + std::to_string(dim) + " variables");
    return idx;
}

// Reads one "name" or "name^k" factor starting at pos.
std::pair<std::string, int> read_factor(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(start, pos - start);
    if (name.empty()) throw InputError("expected a variable in '" + s + "'");
    int power = 1;
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw InputError("expected an exponent in '" + s + "'");
        power = std::stoi(s.substr(start, pos - start));
    }
    return {name, power};
}

std::string strip(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

ExponentVector parse_monomial_stripped(const std::string& s, int dim) {
    ExponentVector e(static_cast<std::size_t>(dim), 0);
    if (s == "1") return e;
    std::size_t pos = 0;
    while (true) {
        auto [name, power] = read_factor(s, pos);
        e[static_cast<std::size_t>(variable_index(name, dim))] += power;
        if (pos == s.size()) break;
        if (s[pos] != '*') throw InputError("unexpected '" + std::string(1, s[pos]) + "' in monomial '" + s + "'");
        ++pos;
    }
    return e;
}

RingContext parse_ring(const std::string& name, const Json& j) {
    if (!j.is_object() || !j.contains("kind")) throw InputError("ring '" + name + "' needs a kind");
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "poly") {
        if (!j.contains("vars") || !j.at("vars").is_number_integer()) throw InputError("ring '" + name + "' needs integer vars");
        const std::uint32_t p = j.contains("char") ? j.at("char").get<std::uint32_t>() : kDefaultPrime;
        return RingContext::poly(j.at("vars").get<int>(), p);
    }
    if (kind == "semigroup") {
        if (!j.contains("gens") || !j.at("gens").is_array()) throw InputError("ring '" + name + "' needs a gens list");
        return RingContext::numerical(NumericalSemigroup::make(j.at("gens").get<std::vector<std::int64_t>>()));
    }
    throw InputError("ring '" + name + "': unknown kind '" + kind + "'");
}

PolyRing poly_ring(const RingContext& ctx) { return PolyRing{ctx.dim, ctx.prime, {}}; }

std::vector<ExponentVector> exponent_rows(const Json& data, int dim) {
    if (!data.is_array()) throw InputError("expected a list of exponent vectors");
    std::vector<ExponentVector> rows;
    for (const auto& row : data) {
        auto v = row.get<ExponentVector>();
        if (static_cast<int>(v.size()) != dim) throw InputError("exponent vector " + row.dump() + " has the wrong length");
        for (int x : v) {
            if (x < 0) throw InputError("negative exponent in " + row.dump());
        }
        rows.push_back(std::move(v));
    }
    return rows;
}

GfpPolynomial polynomial_from_json(const PolyRing& ring, const Json& j) {
    if (j.is_string()) return parse_polynomial(ring, j.get<std::string>());
    if (!j.is_array()) throw InputError("a polynomial is a string or a list of {exp, coef} terms");
    GfpPolynomial f;
    for (const auto& t : j) {
        if (!t.contains("exp")) throw InputError("term " + t.dump() + " has no exp");
        const ExponentVector e = exponent_rows(Json::array({t.at("exp")}), ring.nvars).front();
        const std::int64_t c = t.contains("coef") ? t.at("coef").get<std::int64_t>() : 1;
        f = PolyOps::add(ring, f, GfpPolynomial::monomial(ring, e, c));
    }
    return f;
}

// A generator list in one of the basic forms, as an ideal of ctx.
Ideal basic_ideal(const RingContext& ctx, const std::string& form, const Json& data) {
    if (!data.is_array() || data.empty()) throw InputError("ideal data must be a nonempty list");
    if (ctx.kind == RingContext::Kind::semigroup) {
        std::vector<std::int64_t> values;
        if (form == "monomial") {
            for (const auto& g : data) values.push_back(parse_semigroup_element(g.get<std::string>()));
        } else if (form == "exponents") {
            for (const auto& g : data) values.push_back(g.is_array() ? g.at(0).get<std::int64_t>() : g.get<std::int64_t>());
        } else {
            throw InputError("form '" + form + "' is not available in a semigroup ring");
        }
        return SemigroupIdeal::make(ctx.semigroup, std::move(values));
    }
    if (form == "monomial") {
        std::vector<ExponentVector> rows;
        for (const auto& g : data) rows.push_back(parse_monomial(g.get<std::string>(), ctx.dim));
        return MonomialIdeal::minimalize(ctx.dim, std::move(rows));
    }
    if (form == "exponents") return MonomialIdeal::minimalize(ctx.dim, exponent_rows(data, ctx.dim));
    if (form == "polynomials") {
        const PolyRing ring = poly_ring(ctx);
        std::vector<GfpPolynomial> gens;
        for (const auto& g : data) gens.push_back(polynomial_from_json(ring, g));
        return GroebnerIdeal(ring, std::move(gens));
    }
    throw InputError("unknown ideal form '" + form + "'");
}

}  // namespace

ExponentVector parse_monomial(const std::string& text, int dim) { return parse_monomial_stripped(strip(text), dim); }

std::int64_t parse_semigroup_element(const std::string& text) {
    const std::string s = strip(text);
    if (s == "1") return 0;
    std::size_t pos = 0;
    auto [name, power] = read_factor(s, pos);
    if (name != "t" || pos != s.size()) throw InputError("semigroup ring elements are written t^k, got '" + text + "'");
    return power;
}

GfpPolynomial parse_polynomial(const PolyRing& ring, const std::string& text) {
    const std::string s = strip(text);
    if (s.empty()) throw InputError("empty polynomial");
    GfpPolynomial f;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::int64_t sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw InputError("expected + or - in '" + text + "'");
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
        std::string term = s.substr(pos, end - pos);
        if (term.empty()) throw InputError("empty term in '" + text + "'");
        std::int64_t coef = 1;
        std::size_t digits = 0;
        while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
        if (digits > 0) {
            coef = std::stoll(term.substr(0, digits));
            term = term.substr(digits);
            if (!term.empty()) {
                if (term[0] != '*') throw InputError("expected * after a coefficient in '" + text + "'");
                term = term.substr(1);
            }
        }
        const ExponentVector e = term.empty() ? ExponentVector(static_cast<std::size_t>(ring.nvars), 0) : parse_monomial_stripped(term, ring.nvars);
        f = PolyOps::add(ring, f, GfpPolynomial::monomial(ring, e, sign * (coef % static_cast<std::int64_t>(ring.prime))));
        pos = end;
    }
    return f;
}

Instance Instance::parse(const Json& j) {
    if (!j.is_object()) throw InputError("an instance file is a JSON object");
    Instance inst;
    if (!j.contains("rings") || !j.at("rings").is_object()) throw InputError("instance has no rings object");
    for (const auto& [name, r] : j.at("rings").items()) inst.rings_.emplace(name, parse_ring(name, r));

    // ideals may extend ideals listed later, so resolve them on demand
    const Json ideals = j.value("ideals", Json::object());
    if (!ideals.is_object()) throw InputError("ideals must be an object");
    std::map<std::string, int> state;  // 1 = in progress, 2 = done
    std::function<void(const std::string&)> build = [&](const std::string& name) {
        if (state[name] == 2) return;
        if (state[name] == 1) throw InputError("ideal '" + name + "' extends itself");
        if (!ideals.contains(name)) throw InputError("unknown ideal '" + name + "'");
        state[name] = 1;
        const Json& e = ideals.at(name);
        if (!e.is_object() || !e.contains("form") || !e.contains("data")) throw InputError("ideal '" + name + "' needs form and data");
        const std::string form = e.at("form").get<std::string>();
        const Json& data = e.at("data");
        try {
            if (form == "extend") {
                if (!data.is_object() || !data.contains("base") || !data.contains("gens")) {
                    throw InputError("extend data is {base, gens, form}");
                }
                const std::string base = data.at("base").get<std::string>();
                build(base);
                const std::string ring_name = inst.ideal_ring_.at(base);
                if (e.contains("ring") && e.at("ring").get<std::string>() != ring_name) {
                    throw InputError("ring differs from the ring of base '" + base + "'");
                }
                const RingContext& ctx = inst.rings_.at(ring_name);
                const Ideal added = basic_ideal(ctx, data.value("form", std::string("exponents")), data.at("gens"));
                inst.ideals_.emplace(name, hvar::sum(inst.ideals_.at(base), added));
                inst.ideal_ring_.emplace(name, ring_name);
            } else {
                if (!e.contains("ring")) throw InputError("no ring given");
                const std::string ring_name = e.at("ring").get<std::string>();
                if (!inst.rings_.contains(ring_name)) throw InputError("unknown ring '" + ring_name + "'");
                inst.ideals_.emplace(name, basic_ideal(inst.rings_.at(ring_name), form, data));
                inst.ideal_ring_.emplace(name, ring_name);
            }
        } catch (const Json::exception& ex) {
            throw InputError("ideal '" + name + "': " + ex.what());
        } catch (const InputError& ex) {
            throw InputError("ideal '" + name + "': " + ex.what());
        }
        state[name] = 2;
    };
    for (const auto& [name, _] : ideals.items()) build(name);

    const Json bindings = j.value("bindings", Json::object());
    if (!bindings.is_object()) throw InputError("bindings must be an object");
    for (const auto& [name, b] : bindings.items()) {
        if (!b.is_object()) throw InputError("binding '" + name + "' must map roles to ideal names");
        std::map<std::string, std::string> roles;
        for (const auto& [role, ideal] : b.items()) {
            const std::string target = ideal.get<std::string>();
            if (!inst.ideals_.contains(target)) throw InputError("binding '" + name + "' names unknown ideal '" + target + "'");
            roles.emplace(role, target);
        }
        inst.bindings_.emplace(name, std::move(roles));
    }
    return inst;
}

Instance Instance::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path + ": " + e.what());
    }
    return parse(j);
}

const RingContext& Instance::ring(const std::string& name) const {
    auto it = rings_.find(name);
    if (it == rings_.end()) throw InputError("unknown ring '" + name + "'");
    return it->second;
}

const Ideal& Instance::ideal(const std::string& name) const {
    auto it = ideals_.find(name);
    if (it == ideals_.end()) throw InputError("unknown ideal '" + name + "'");
    return it->second;
}

const std::string& Instance::ring_of(const std::string& ideal) const {
    auto it = ideal_ring_.find(ideal);
    if (it == ideal_ring_.end()) throw InputError("unknown ideal '" + ideal + "'");
    return it->second;
}

const std::map<std::string, std::string>& Instance::binding(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end()) throw InputError("unknown binding '" + name + "'");
    return it->second;
}

std::pair<RingContext, Bindings> Instance::resolve(const std::map<std::string, std::string>& roles) const {
    std::string ring_name;
    Bindings out;
    for (const auto& [role, name] : roles) {
        const std::string& r = ring_of(name);
        if (!ring_name.empty() && r != ring_name) throw InputError("bound ideals live in different rings");
        ring_name = r;
        out.emplace(role, ideal(name));
    }
    if (ring_name.empty()) {
        if (rings_.size() != 1) throw InputError("no ideals bound and the file has " + std::to_string(rings_.size()) + " rings");
        ring_name = rings_.begin()->first;
    }
    return {ring(ring_name), std::move(out)};
}

}  // namespace hvar
