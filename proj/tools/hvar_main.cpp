// hvar: Hilbert coefficients, reductions and bound checks from JSON
// instance files.  Exit codes: 0 ok (checks verified, unresolved or skipped),
// 1 a check was violated, 2 input or binding error, 3 non-stabilizing
// computation, 4 any other computation failure.

#include "hvar/errors.hpp"
#include "hvar/instance.hpp"
#include "hvar/sweep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace hvar;

namespace {

void emit(const Json& j, const std::string& out) {
    if (out.empty()) {
        std::cout << dump(j);
        return;
    }
    std::ofstream f(out);
    if (!f) throw InputError("cannot write " + out);
    f << dump(j);
}

// "J=J,I=I" or the name of a binding entry in the file.
std::map<std::string, std::string> roles(const Instance& inst, const std::string& text) {
    if (text.find('=') == std::string::npos) return text.empty() ? std::map<std::string, std::string>{} : inst.binding(text);
    std::map<std::string, std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) throw InputError("binding '" + item + "' is not role=ideal");
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

const RingContext& ring_for(const Instance& inst, const std::string& ring, const std::string& ideal) {
    const std::string& actual = inst.ring_of(ideal);
    if (!ring.empty() && ring != actual) throw InputError("ideal '" + ideal + "' lives in ring '" + actual + "', not '" + ring + "'");
    return inst.ring(actual);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert coefficients, reduction numbers and bound checks for m-primary ideals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string file, ring, ideal, out, theorem, bindings, family, params;
    bool fiber = false, normal = false;
    int max_n = kDefaultMaxN, samples = 8, count = -1, jobs = 1;
    std::uint64_t seed = 0;

    auto* coeffs = app.add_subcommand("coeffs", "Hilbert coefficients of an ideal");
    coeffs->add_option("--file", file, "instance file")->required();
    coeffs->add_option("--ring", ring, "ring name (checked against the ideal's ring)");
    coeffs->add_option("--ideal", ideal, "ideal name")->required();
    coeffs->add_flag("--fiber", fiber, "also fit the fiber cone multiplicities");
    coeffs->add_flag("--normal", normal, "also fit the normal Hilbert and fiber coefficients");
    coeffs->add_option("--max-n", max_n, "largest power tabulated")->check(CLI::Range(4, 2000));
    coeffs->add_option("--json", out, "write JSON here instead of stdout");

    auto* check = app.add_subcommand("check", "run one bound checker");
    check->add_option("--file", file, "instance file")->required();
    check->add_option("--theorem", theorem, "checker id")->required();
    check->add_option("--bind", bindings, "role=ideal pairs, or a binding name from the file");
    check->add_option("--seed", seed, "seed for sampled reductions");
    check->add_option("--samples", samples, "candidate reductions per sample")->check(CLI::Range(1, 1000));
    check->add_option("--json", out, "write JSON here instead of stdout");

    auto* sweep = app.add_subcommand("sweep", "run a seeded instance family through the checkers");
    sweep->add_option("--family", family, "family name")->required();
    sweep->add_option("--params", params, "ranges such as a=5..8,alpha=1|2");
    sweep->add_option("--count", count, "number of instances (enumerative families: cap)")->check(CLI::NonNegativeNumber);
    sweep->add_option("--seed", seed, "sweep seed");
    sweep->add_option("--jobs", jobs, "worker threads")->check(CLI::Range(1, 256));
    sweep->add_option("--samples", samples, "candidate reductions per sample")->check(CLI::Range(1, 1000));
    sweep->add_option("--json", out, "write the full report here; stdout then gets the aggregate only");

    auto* minreduce = app.add_subcommand("minreduce", "sample minimal reductions and report the best");
    minreduce->add_option("--file", file, "instance file")->required();
    minreduce->add_option("--ring", ring, "ring name (checked against the ideal's ring)");
    minreduce->add_option("--ideal", ideal, "ideal name")->required();
    minreduce->add_option("--samples", samples, "candidates to try")->check(CLI::Range(1, 1000));
    minreduce->add_option("--seed", seed, "sampling seed");
    minreduce->add_option("--json", out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (coeffs->parsed()) {
            const Instance inst = Instance::load(file);
            const RingContext& ctx = ring_for(inst, ring, ideal);
            const Ideal& i = inst.ideal(ideal);
            Json j = to_json(hilbert_coeffs(ctx, i, max_n));
            if (fiber) j["fiber"] = to_json(fiber_coeffs(ctx, i, max_n));
            if (normal) j["normal"] = to_json(normal_coeffs(ctx, i, max_n));
            emit(j, out);
            return 0;
        }
        if (check->parsed()) {
            const Instance inst = Instance::load(file);
            const auto [ctx, b] = inst.resolve(roles(inst, bindings));
            CheckOptions opt;
            opt.seed = seed;
            opt.samples = samples;
            const BoundReport r = run_checker(theorem, ctx, b, opt);
            emit(to_json(r), out);
            return r.status == BoundStatus::violated ? 1 : 0;
        }
        if (sweep->parsed()) {
            SweepOptions opt;
            opt.family = family;
            opt.params = parse_params(params);
            opt.count = count;
            opt.seed = seed;
            opt.jobs = jobs;
            opt.check.samples = samples;
            const Json report = run_sweep(opt);
            if (out.empty()) {
                emit(report, "");
            } else {
                emit(report, out);
                std::cout << dump(Json{{"aggregate", report["aggregate"]}, {"count", report["count"]}});
            }
            return any_violated(report) ? 1 : 0;
        }
        if (minreduce->parsed()) {
            const Instance inst = Instance::load(file);
            const RingContext& ctx = ring_for(inst, ring, ideal);
            emit(to_json(minimal_reduction(ctx, inst.ideal(ideal), samples, seed)), out);
            return 0;
        }
    } catch (const InputError& e) {
        std::cerr << "hvar: " << e.what() << "\n";
        return 2;
    } catch (const NotMPrimary& e) {
        std::cerr << "hvar: " << e.what() << "\n";
        return 2;
    } catch (const NotCoprime& e) {
        std::cerr << "hvar: " << e.what() << "\n";
        return 2;
    } catch (const DimensionUnsupported& e) {
        std::cerr << "hvar: " << e.what() << "\n";
        return 2;
    } catch (const NonStabilizing& e) {
        std::cerr << "hvar: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "hvar: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
