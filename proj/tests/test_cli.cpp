#include "common.hpp"

#include <sstream>

#include "hgc/cli.hpp"
#include "hgc/errors.hpp"

using namespace hgc;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json js(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("eval example") {
    Run r = run({"eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5"});
    REQUIRE(r.code == 0);
    nlohmann::json j = js(r);
    CHECK(j["command"] == "eval");
    CHECK(std::abs(test::cx(j["value"]) - 2.0 * std::log(2.0)) < 1e-13);
}

TEST_CASE("eval with an integral cross check") {
    Run r = run({"eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5", "--cross-check", "integral"});
    REQUIRE(r.code == 0);
    nlohmann::json j = js(r);
    CHECK(j["cross_check"]["discrepancy"].get<double>() < 1e-8);
}

TEST_CASE("classify example") {
    Run r = run({"classify", "--sigma", "0,1,-1", "--tau", "1.5,-3", "--eta", "-2"});
    REQUIRE(r.code == 0);
    CHECK(js(r)["type_tag"] == "Gauss2F1");
}

TEST_CASE("verify example") {
    Run r = run({"verify", "--suite", "lie", "--sigma", "1", "--kappa", "0,-2"});
    CHECK(r.code == 0);
    CHECK(js(r)["pass"] == true);
}

TEST_CASE("exit codes") {
    CHECK(run({"eval", "--bogus"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"verify", "--suite", "nosuch"}).code == 2);
    CHECK(run({"eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "0.5", "--sigma", "1"}).code == 2);
    Run d = run({"eval", "--type", "2F1", "--a", "1", "--b", "1", "--c", "2", "--z", "1.5"});
    CHECK(d.code == 1);
    CHECK(nlohmann::json::parse(d.err)["error"] == "DomainError");
}

TEST_CASE("determinism") {
    std::vector<std::string> a = {"eval", "--type", "1F1", "--a", "0.7", "--c", "1.9", "--z", "0.5+0.2j"};
    CHECK(run(a).out == run(a).out);
    std::vector<std::string> b = {"plot-data", "--type", "0F1", "--c", "1.5", "--from", "0", "--to", "2", "--points", "5"};
    CHECK(run(b).out == run(b).out);
}

TEST_CASE("complex and polynomial flags") {
    CHECK(parse_complex("1") == cd(1.0, 0.0));
    CHECK(parse_complex("1+2j") == cd(1.0, 2.0));
    CHECK(parse_complex("-0.5-1.5j") == cd(-0.5, -1.5));
    CHECK(parse_complex("2j") == cd(0.0, 2.0));
    CHECK_THROWS(parse_complex("x"));
    CHECK(rel_diff(parse_poly("0,1,-1"), PolyC{0.0, 1.0, -1.0}) == 0.0);
    CHECK(rel_diff(parse_poly("1+1j,2"), PolyC{cd(1.0, 1.0), 2.0}) == 0.0);
}

TEST_CASE("tables") {
    Run p = run({"poly", "--family", "hermite", "--n-max", "2"});
    REQUIRE(p.code == 0);
    CHECK(p.out.rfind("n,degree", 0) == 0);
    Run pj = run({"poly", "--family", "laguerre", "--alpha", "1", "--n-max", "1", "--format", "json"});
    REQUIRE(pj.code == 0);
    CHECK(js(pj)["polynomials"].size() == 2);

    Run l = run({"ladder", "--sigma", "0,1,-1", "--kappa", "1,-2", "--omega", "0.3", "--n-min", "0", "--n-max", "2", "--n-step", "1"});
    REQUIRE(l.code == 0);
    nlohmann::json lj = js(l);
    REQUIRE(lj["ladder"].size() == 3);
    CHECK(std::abs(test::cx(lj["ladder"][1]["omega"]) - cd(-2.7)) < 1e-14);

    Run d = run({"plot-data", "--type", "1F1", "--a", "1", "--c", "1", "--from", "0", "--to", "1", "--points", "3"});
    REQUIRE(d.code == 0);
    CHECK(d.out.rfind("z_re,z_im,value_re,value_im\n", 0) == 0);
    CHECK(std::count(d.out.begin(), d.out.end(), '\n') == 4);
    CHECK(d.out.find("2.718281828459046e+00") != std::string::npos);
}
