#pragma once

// JSON instance files: named rings, ideals over them, and named role
// bindings for the bound checkers.  The schema is documented in README.md.

#include "hvar/bounds.hpp"
#include "hvar/report.hpp"

#include <map>
#include <string>

namespace hvar {

class Instance {
public:
    /// Throws InputError on any malformed entry or dangling reference.
    static Instance parse(const Json& j);
    static Instance load(const std::string& path);

    const RingContext& ring(const std::string& name) const;
    const Ideal& ideal(const std::string& name) const;
    /// Name of the ring an ideal lives in.
    const std::string& ring_of(const std::string& ideal) const;

    /// Roles from a named binding entry of the file.
    const std::map<std::string, std::string>& binding(const std::string& name) const;

    /// Resolves role -> ideal name; every ideal must live in the same ring.
    /// An empty role map resolves to the file's only ring.
    std::pair<RingContext, Bindings> resolve(const std::map<std::string, std::string>& roles) const;

private:
    std::map<std::string, RingContext> rings_;
    std::map<std::string, Ideal> ideals_;
    std::map<std::string, std::string> ideal_ring_;
    std::map<std::string, std::map<std::string, std::string>> bindings_;
};

/// Parses "x^2*y*z^3" (variables x, y, z, w, v or x1..x5) into an exponent
/// vector of length d, and "t^11" or "t" in a semigroup ring into a value.
ExponentVector parse_monomial(const std::string& text, int dim);
std::int64_t parse_semigroup_element(const std::string& text);

/// Parses "x^7 - z^7 + 3*x*y" over GF(p).
GfpPolynomial parse_polynomial(const PolyRing& ring, const std::string& text);

}  // namespace hvar
