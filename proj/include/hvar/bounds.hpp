#pragma once

// One checker per inequality.  Each computes its invariants through the
// engines, records which hypotheses were verified, and returns lhs <= rhs as
// a report.

#include "hvar/invariants.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hvar {

enum class BoundStatus { verified, violated, unresolved, skipped };

std::string to_string(BoundStatus s);

struct Hypothesis {
    std::string name;
    bool ok = false;
    std::string detail;
};

/// A relation checked alongside the main one, such as an intermediate
/// inequality from a proof or an identity the statement relies on.
struct SideCheck {
    std::string relation;
    Int lhs;
    Int rhs;
    bool holds = false;  // lhs <= rhs, or lhs == rhs for identities
};

struct BoundReport {
    std::string theorem_id;
    std::vector<Hypothesis> hypotheses;
    std::optional<Int> lhs;  // unset when a hypothesis failed
    std::optional<Int> rhs;
    bool holds = false;  // lhs <= rhs
    std::vector<SideCheck> side_checks;
    nlohmann::json witness = nlohmann::json::object();
    BoundStatus status = BoundStatus::skipped;
    bool sampled = false;  // depends on a randomly drawn minimal reduction

    bool hypotheses_ok() const;
    std::optional<Int> slack() const;
};

struct CheckOptions {
    std::uint64_t seed = 0;
    int samples = 8;
    int resamples = 4;
    std::uint32_t second_prime = 65521;
    int max_n = kDefaultMaxN;
    int reduction_cap = kDefaultReductionCap;
};

/// Named ideals a checker reads: J, I, Q, x.
using Bindings = std::map<std::string, Ideal>;

BoundReport check_e0_variation(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_e1_single_extension(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_e1_parameter_extension(const RingContext& ctx, const Ideal& q, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_e1_multi_extension(const RingContext& ctx, const Ideal& j, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_fiber_multiplicity_variation(const RingContext& ctx, const Ideal& j, const Ideal& i,
                                               const CheckOptions& opt = {});
/// Q is sampled when not supplied.
BoundReport check_sally_bound(const RingContext& ctx, const std::optional<Ideal>& q, const Ideal& i,
                              const CheckOptions& opt = {});
BoundReport check_reduction_order_bound(const RingContext& ctx, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_generator_count_dim1(const RingContext& ctx, const Ideal& x, const Ideal& i, const CheckOptions& opt = {});
/// J, when supplied, must be a d-generated reduction of I; otherwise a
/// sampled minimal reduction stands in for it.
BoundReport check_reduction_colength_bound(const RingContext& ctx, const Ideal& i, const std::optional<Ideal>& j,
                                           const CheckOptions& opt = {});
BoundReport check_e1_maximal_ideal(const RingContext& ctx, const CheckOptions& opt = {});
BoundReport check_rossi_reduction(const RingContext& ctx, const std::optional<Ideal>& q, const Ideal& i,
                                  const CheckOptions& opt = {});
BoundReport check_normalization_multiplicity(const RingContext& ctx, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_kirby(const RingContext& ctx, const CheckOptions& opt = {});
BoundReport check_elias(const RingContext& ctx, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_rossi_valla(const RingContext& ctx, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_normal_e1_nonnegative(const RingContext& ctx, const Ideal& i, const CheckOptions& opt = {});
BoundReport check_normal_e1_regular(const RingContext& ctx, const Ideal& i, const CheckOptions& opt = {});

struct CheckerInfo {
    std::string id;
    std::vector<std::string> required;  // binding names
    std::vector<std::string> optional;
    std::string relation;
    std::function<BoundReport(const RingContext&, const Bindings&, const CheckOptions&)> run;
};

const std::vector<CheckerInfo>& checker_registry();
/// Throws InputError for an unknown id.
const CheckerInfo& find_checker(const std::string& id);
/// Validates the bindings against the signature, then runs.
BoundReport run_checker(const std::string& id, const RingContext& ctx, const Bindings& bindings, const CheckOptions& opt = {});

}  // namespace hvar
