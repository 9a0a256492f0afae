// Runs the built hvar binary against the files in instances/ and checks
// exit codes and the JSON it prints.

#include <json.hpp>

#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
    int code = -1;
    std::string out;

    nlohmann::json json() const { return nlohmann::json::parse(out); }
};

Run hvar(const std::string& args) {
    const std::string cmd = std::string(HVAR_BIN) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string instance(const std::string& name) { return std::string(INSTANCE_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& body) {
    const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << body;
    return path;
}

}  // namespace

TEST_CASE("coeffs of m^2 in the plane") {
    const Run r = hvar("coeffs --file " + instance("plane.json") + " --ideal m2 --fiber");
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["e"] == nlohmann::json({4, 1, 0}));
    CHECK(j["fiber"]["f"] == nlohmann::json({2, -1}));
}

TEST_CASE("coeffs of a principal ideal in a semigroup ring") {
    const Run r = hvar("coeffs --file " + instance("semigroup_479.json") + " --ideal Q --fiber");
    REQUIRE(r.code == 0);
    const auto j = r.json();
    CHECK(j["e"] == nlohmann::json({11, 0}));
    CHECK(j["fiber"]["f"] == nlohmann::json({1}));
}

TEST_CASE("coeffs with a ring that does not own the ideal") {
    CHECK(hvar("coeffs --file " + instance("plane.json") + " --ring S --ideal m2").code == 2);
}

TEST_CASE("check on the worked extension") {
    const Run e0 = hvar("check --file " + instance("pure_power_extension.json") + " --theorem e0_variation --bind extension");
    REQUIRE(e0.code == 0);
    CHECK(e0.json()["lhs"] == 49);
    CHECK(e0.json()["rhs"] == 125);
    CHECK(e0.json()["slack"] == 76);
    CHECK(e0.json()["status"] == "verified");

    const Run e1 = hvar("check --file " + instance("pure_power_extension.json") +
                        " --theorem e1_parameter_extension --bind Q=Q,I=I");
    REQUIRE(e1.code == 0);
    CHECK(e1.json()["status"] == "verified");
    CHECK(e1.json()["rhs"] == 152);
}

TEST_CASE("check in a semigroup ring") {
    const Run r = hvar("check --file " + instance("semigroup_479.json") + " --theorem generator_count_dim1 --bind generators");
    REQUIRE(r.code == 0);
    CHECK(r.json()["status"] == "verified");
    CHECK(r.json()["lhs"] == 3);
    CHECK(r.json()["rhs"] == 4);
}

TEST_CASE("minreduce") {
    const Run m2 = hvar("minreduce --file " + instance("plane.json") + " --ideal m2");
    REQUIRE(m2.code == 0);
    CHECK(m2.json()["reduction_number"] == 1);
    CHECK(m2.json()["is_minimal"] == true);

    const Run m = hvar("minreduce --file " + instance("plane.json") + " --ideal m");
    REQUIRE(m.code == 0);
    CHECK(m.json()["reduction_number"] == 0);

    const Run s = hvar("minreduce --file " + instance("semigroup_479.json") + " --ideal I");
    REQUIRE(s.code == 0);
    CHECK(s.json()["Q"]["gens"] == nlohmann::json({11}));
    CHECK(s.json()["sampled"] == false);
}

TEST_CASE("sweep with no instances") {
    const Run r = hvar("sweep --family maximal_power --count 0");
    REQUIRE(r.code == 0);
    CHECK(r.json()["aggregate"].empty());
    CHECK(r.json()["instances"].empty());
}

TEST_CASE("sweep writes the full report to --json") {
    const std::string path = std::string(TEST_TMP_DIR) + "/sweep_report.json";
    const Run r = hvar("sweep --family maximal_power --params n=2..3 --json " + path);
    REQUIRE(r.code == 0);
    CHECK(r.json().contains("aggregate"));
    CHECK_FALSE(r.json().contains("instances"));
    std::ifstream f(path);
    const auto full = nlohmann::json::parse(f);
    CHECK(full["instances"].size() == 2);
    CHECK(full["family"] == "maximal_power");
}

TEST_CASE("output is deterministic") {
    const std::string args = "sweep --family random_monomial_d2 --count 5 --seed 11";
    const Run a = hvar(args);
    const Run b = hvar(args + " --jobs 3");
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const std::string mr = "minreduce --file " + instance("plane.json") + " --ideal m2 --seed 5";
    CHECK(hvar(mr).out == hvar(mr).out);
}

TEST_CASE("input errors exit with 2") {
    const std::string plane = instance("plane.json");
    CHECK(hvar("check --file " + plane + " --theorem no_such_check --bind closure").code == 2);
    CHECK(hvar("check --file " + plane + " --theorem e0_variation --bind J=J,I=missing").code == 2);
    CHECK(hvar("check --file " + plane + " --theorem e0_variation --bind J=").code == 2);
    CHECK(hvar("check --file " + plane + " --theorem e0_variation --bind no_such_binding").code == 2);
    CHECK(hvar("coeffs --file /nonexistent/instance.json --ideal m").code == 2);
    CHECK(hvar("coeffs --file " + plane + " --ideal m --max-n 1").code == 2);
    CHECK(hvar("sweep --family no_such_family").code == 2);
    CHECK(hvar("sweep --family maximal_power --params q=1..2").code == 2);
    CHECK(hvar("").code == 2);

    const std::string bad = temp_file("bad.json", "{\"rings\": {\"R\": {\"kind\": \"poly\", \"vars\": 2}},"
                                                  " \"ideals\": {\"I\": {\"ring\": \"R\", \"form\": \"monomial\","
                                                  " \"data\": [\"x^2\"]}}}");
    CHECK(hvar("coeffs --file " + bad + " --ideal I").code == 2);
    CHECK(hvar("coeffs --file " + temp_file("garbage.json", "{not json") + " --ideal I").code == 2);
}

TEST_CASE("an ideal that is not m-primary locally exits with 3") {
    const std::string path = temp_file("line.json", "{\"rings\": {\"R\": {\"kind\": \"poly\", \"vars\": 2}},"
                                                    " \"ideals\": {\"L\": {\"ring\": \"R\", \"form\": \"polynomials\","
                                                    " \"data\": [\"x + x^2\"]}}}");
    CHECK(hvar("coeffs --file " + path + " --ideal L").code == 3);
}

TEST_CASE("version") {
    const Run r = hvar("--version");
    CHECK(r.code == 0);
    CHECK(r.out.find("0.3.0") != std::string::npos);
}
