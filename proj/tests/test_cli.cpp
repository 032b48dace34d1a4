#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "ptcoulomb/cli.hpp"

using namespace ptc;
using json = nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        if (!line.empty() && line.back() == ',') cells.emplace_back();
        rows.push_back(cells);
    }
    return rows;
}

} // namespace

TEST_CASE("spectrum json") {
    const auto r = run({"spectrum", "--alpha", "0.25", "--beta", "-1", "--c", "1", "--n-max", "1",
                        "--format", "json"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["schema_version"] == kSchemaVersion);
    CHECK(doc["command"] == "spectrum");
    CHECK(doc["params"]["alpha"] == 0.25);
    bool found = false;
    for (const auto& row : doc["rows"]) {
        if (row["q"] == 1 && row["n"] == 0) {
            found = true;
            CHECK(row["energy"].get<double>() == -4.0);
        }
    }
    CHECK(found);
}

TEST_CASE("spectrum lists excluded states with null energy") {
    const auto r = run({"spectrum", "--alpha", "0.5", "--n-max", "0"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][1]["admissibility"] == "flown_away");
    CHECK(doc["rows"][1]["energy"].is_null());
}

TEST_CASE("csv and json carry identical numbers") {
    for (const std::string cmd : {"spectrum", "norm"}) {
        std::vector<std::string> base = {cmd};
        if (cmd == "norm") base.insert(base.end(), {"--q", "-1", "--n", "1"});
        auto json_args = base;
        json_args.insert(json_args.end(), {"--format", "json"});
        auto csv_args = base;
        csv_args.insert(csv_args.end(), {"--format", "csv"});
        const auto j = run(json_args);
        const auto c = run(csv_args);
        REQUIRE(j.code == 0);
        REQUIRE(c.code == 0);
        const auto doc = json::parse(j.out);
        const auto table = parse_csv(c.out);
        REQUIRE(table.size() == doc["rows"].size() + 1);
        for (std::size_t i = 0; i < doc["rows"].size(); ++i) {
            for (std::size_t k = 0; k < table[0].size(); ++k) {
                const auto& v = doc["rows"][i][table[0][k]];
                const std::string& cell = table[i + 1][k];
                if (v.is_number_float()) {
                    CHECK(std::stod(cell) == v.get<double>());
                } else if (v.is_null()) {
                    CHECK(cell.empty());
                }
            }
        }
    }
}

TEST_CASE("norm methods agree with the reference") {
    const auto r = run({"norm", "--q", "-1", "--n", "0", "--alpha", "0.25", "--beta", "-1",
                        "--method", "all"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][0]["method"] == "closed");
    CHECK(doc["rows"][0]["value"].get<double>() == doctest::Approx(1.9940106).epsilon(1e-7));
    CHECK(std::abs(doc["rows"][1]["rel_delta"].get<double>()) < 1e-9);
    // The real-line row reports the contour segment it picks up.
    CHECK(doc["rows"][2]["method"] == "real-line");
    CHECK(doc["rows"][2]["segment_term"].is_number());
}

TEST_CASE("wavefunc rows") {
    const auto r = run({"wavefunc", "--q", "-1", "--n", "0", "--x-min", "-2", "--x-max", "2",
                        "--points", "5", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto table = parse_csv(r.out);
    REQUIRE(table.size() == 6);
    CHECK(table[0] == std::vector<std::string>{"x", "re_psi", "im_psi", "abs_psi"});
    // PT: psi(-2) = conj(psi(2)).
    CHECK(std::stod(table[1][1]) == doctest::Approx(std::stod(table[5][1])).epsilon(1e-13));
    CHECK(std::stod(table[1][2]) == doctest::Approx(-std::stod(table[5][2])).epsilon(1e-13));
}

TEST_CASE("sweep table") {
    const auto r = run({"sweep", "--q", "1", "--n", "0", "--alpha-grid", "0.4:0.6:0.1", "--beta", "-1"});
    REQUIRE(r.code == 0);
    const auto doc = json::parse(r.out);
    REQUIRE(doc["rows"].size() == 3);
    CHECK(doc["rows"][1]["admissibility"] == "flown_away");
    CHECK(doc["rows"][2]["admissibility"] == "not_normalizable");
}

TEST_CASE("argument errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"spectrum", "--alpha", "1.5"}).code == 2);
    CHECK(run({"spectrum", "--format", "xml"}).code == 2);
    CHECK(run({"norm", "--q", "1", "--n", "0", "--alpha", "0.75"}).code == 2);
    CHECK(run({"wavefunc", "--q", "2", "--n", "0"}).code == 2);
    CHECK(run({"sweep", "--q", "1", "--n", "0", "--alpha-grid", "0.1:x"}).code == 2);
    const auto r = run({"spectrum", "--alpha", "1.5"});
    CHECK(r.err.find("alpha") != std::string::npos);
    CHECK(r.out.empty());
}

TEST_CASE("verify exit code follows the pass flags") {
    for (const std::string suite : {"pt", "limit"}) {
        const auto r = run({"verify", "--suite", suite});
        const auto doc = json::parse(r.out);
        bool all = true;
        for (const auto& row : doc["rows"]) all = all && row["pass"].get<bool>();
        CHECK(doc["all_pass"] == all);
        CHECK((r.code == 0) == all);
        CHECK(all);
    }
}

TEST_CASE("repeat runs are bit-identical") {
    const std::vector<std::string> args = {"norm", "--q", "1", "--n", "2", "--alpha", "0.4",
                                           "--method", "all", "--format", "csv"};
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("csv cells never contain the separator") {
    const auto r = run({"verify", "--suite", "limit", "--format", "csv"});
    const auto table = parse_csv(r.out);
    REQUIRE(table.size() > 1);
    for (const auto& row : table) CHECK(row.size() == table[0].size());
}

TEST_CASE("norm falls back to quadrature where the closed form is undefined") {
    const auto r = run({"norm", "--q", "1", "--n", "1", "--alpha", "0.5", "--method", "half-line"});
    REQUIRE(r.code == 0);
    const auto all = run({"norm", "--q", "1", "--n", "1", "--alpha", "0.5"});
    REQUIRE(all.code == 0);
    CHECK(json::parse(all.out)["rows"].size() == 2);
    CHECK(run({"norm", "--q", "1", "--n", "1", "--alpha", "0.5", "--method", "closed"}).code == 1);
}
