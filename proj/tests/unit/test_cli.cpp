#include <fstream>
#include <sstream>

#include "doctest.h"

#include "a4diff/cli.hpp"
#include "a4diff/report.hpp"

using namespace a4diff;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "a4diff");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = run_cli(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

const json* find_point(const json& ram, const std::string& place) {
    for (const auto& p : ram["special"])
        if (p["place"] == place) return &p;
    for (const auto& o : ram["orbits"])
        for (const auto& p : o["points"])
            if (p["place"] == place) return &p;
    return nullptr;
}

long multiplicity(const json& decomposition, const std::string& label) {
    for (const auto& e : decomposition)
        if (e["label"] == label) return e["mult"].get<long>();
    return 0;
}

}  // namespace

TEST_CASE("exit codes") {
    CHECK(run({"analyze", "--alpha", R"({"terms": [[5, 1]]})"}).code == 0);
    CHECK(run({"analyze", "--alpha", R"({"terms": [[5, 1]]})", "--verify"}).code == 0);
    Run trivial = run({"analyze", "--alpha", R"({"terms": [[2, 1], [1, 1]]})"});
    CHECK(trivial.code == 2);
    CHECK(trivial.err.find("alpha != xi^2 - xi") != std::string::npos);
    Run trace = run({"analyze", "--alpha", R"({"terms": [[3, 1]]})"});
    CHECK(trace.code == 2);
    CHECK(trace.err.find("trace nonzero") != std::string::npos);
    CHECK(run({"analyze", "--alpha", "{oops"}).code == 1);
    CHECK(run({"analyze"}).code == 1);
    CHECK(run({"nonsense"}).code == 1);
    CHECK(run({"--help"}).code == 0);
    CHECK(run({"zoo", "--label", "Q[1]"}).code == 1);
    CHECK(run({"hkg", "--alpha", R"({"terms": [[5, 1], [-5, 1]]})"}).code == 2);
    CHECK(run({"examples", "--which", "3", "--n", "1", "--psi", "1"}).code == 2);
}

TEST_CASE("reports are deterministic") {
    std::vector<std::string> args = {"examples", "--which", "2", "--n", "1", "--verify", "--rep", "--json"};
    Run a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    json j = json::parse(a.out);
    CHECK(j["schema"] == 1);
    CHECK(j["verification"]["status"] == "PASS");
    CHECK(j["global_rep"]["dim"] == j["ram"]["genus"]);
}

TEST_CASE("analyze report for s^5") {
    Run r = run({"analyze", "--alpha", R"({"num": [0, 0, 0, 0, 0, 1]})", "--json", "--trunc", "3"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    CHECK(j["ram"]["genus"] == 6);
    const json& inf = j["ram"]["special"][0];
    CHECK(inf["place"] == "inf");
    CHECK(inf["p"] == json({5, 5, 5}));
    CHECK(inf["laurent"]["ord"] == -5);
    CHECK(inf["laurent"]["coeffs"].size() == 3);
    CHECK(multiplicity(j["kG"], "N[2n=2,*=0,i=2]") == 1);
    CHECK(multiplicity(j["kH"], "k") == 1);
}

TEST_CASE("examples match the closed forms") {
    std::ifstream in(A4DIFF_GOLDEN_DIR "/examples.json");
    REQUIRE(in.good());
    json golden = json::parse(in);
    for (const auto& c : golden["cases"]) {
        std::vector<std::string> args = {"examples", "--json"};
        for (const auto& a : c["args"]) args.push_back(a.get<std::string>());
        CAPTURE(c["args"].dump());
        Run r = run(args);
        REQUIRE(r.code == 0);
        json j = json::parse(r.out);
        CHECK(j["field"]["m"] == golden["field"]["m"]);
        if (c.contains("special_inf")) {
            const json& g = c["special_inf"];
            const json* p = find_point(j["ram"], "inf");
            REQUIRE(p);
            CHECK((*p)["p"][0] == g["p"]);
            CHECK((*p)["delta"] == g["delta"]);
            CHECK((*p)["lambda"] == g["lambda"]);
            CHECK((*p)["l"] == g["l"]);
            CHECK((*p)["a1"] == g["a1"]);
            CHECK((*p)["a2"] == g["a2"]);
            CHECK((*p)["mu"] == g["mu"]);
        }
        if (c.contains("orbit_point")) {
            const json& g = c["orbit_point"];
            const json* p = find_point(j["ram"], std::to_string(g["at"].get<int>()));
            REQUIRE(p);
            for (const char* key : {"m", "M", "delta", "lambda"})
                if (g.contains(key)) CHECK((*p)[key] == g[key]);
            if (g.contains("phi")) {
                const Field& F = Field::get(8);
                CHECK(phi_of_lambda(F, Proj::at((*p)["lambda"].get<Elem>())) == Proj::at(g["phi"].get<Elem>()));
            }
        }
        if (c.contains("kG_contains")) {
            const json& g = c["kG_contains"];
            CHECK(multiplicity(j["kG"], g["label"].get<std::string>()) == g["mult"].get<long>());
        }
    }
}

TEST_CASE("example 3 from mu enlarges the field") {
    // x^3 = 2 has no root in GF(2^8) (cubes form an index-3 subgroup); the search moves on.
    Run r = run({"examples", "--which", "3", "--n", "1", "--mu", "2", "--json"});
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    int m = j["example"]["m"].get<int>();
    CHECK(m > 8);
    const Field& F = Field::get(m);
    CHECK(F.pow(j["example"]["psi"].get<Elem>(), 3) == 2);
}

TEST_CASE("batch verification keeps job order") {
    std::string path = "a4diff_batch_test.json";
    {
        std::ofstream f(path);
        f << R"([{"terms": [[5, 1]]}, {"alpha": {"terms": [[7, 1]]}, "m": 4}, {"terms": [[3, 1]]}])";
    }
    Run r = run({"verify", "--batch", path, "--json"});
    std::remove(path.c_str());
    CHECK(r.code == 2);
    json j = json::parse(r.out);
    REQUIRE(j["jobs"].size() == 3);
    CHECK(j["jobs"][0]["exit"] == 0);
    CHECK(j["jobs"][0]["ram"]["genus"] == 6);
    CHECK(j["jobs"][1]["field"]["m"] == 4);
    CHECK(j["jobs"][2]["exit"] == 2);
}

TEST_CASE("label names round-trip") {
    const Field& F = Field::get(8);
    std::vector<Label> labels = {Label::k(), Label::h_odd(3, 2), Label::h_even(2, Proj::at(7)),
                                 Label::h_even(1, Proj::infinity()), Label::g_simple(2), Label::g_odd(1, 1, 0),
                                 Label::g_even(4, Proj::infinity(), 1), Label::g_band(2, 9)};
    for (const Label& l : labels) {
        CHECK(parse_label(l.name()) == l);
        Run r = run({"zoo", "--label", l.name()});
        CHECK(r.code == 0);
        CHECK(r.out.find(l.pretty(F)) != std::string::npos);
    }
    CHECK_THROWS(parse_label("N[2n=3,lambda=1]"));
}
