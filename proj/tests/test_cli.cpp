#include "cli.hpp"
#include "hspin/output.hpp"

#include <doctest.h>

#include <sstream>

using namespace hspin;

namespace {

struct Run {
    int code = 0;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    Run r;
    r.code = run_cli(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

}  // namespace

TEST_CASE("spectrum examples") {
    auto csv = run({"spectrum", "--space", "spinor", "--n", "3", "--j", "0", "--k-max", "1", "--op", "D2", "--format", "csv"});
    CHECK(csv.code == 0);
    auto rows = parse_csv(csv.out);
    REQUIRE(rows.size() == 2);
    std::vector<std::string> header;
    for (const auto& [col, cell] : rows[0]) header.push_back(col);
    CHECK(header == std::vector<std::string>{"family", "n", "j", "k", "s", "weight", "dim", "mult", "op", "eig_num", "eig_den"});
    auto cell = [&](std::size_t r, const std::string& col) {
        for (const auto& [c, v] : rows[r])
            if (c == col) return v;
        return std::string();
    };
    CHECK(cell(0, "eig_num") == "9");
    CHECK(cell(0, "eig_den") == "4");
    CHECK(cell(1, "eig_num") == "25");
    CHECK(cell(0, "dim") == "4");

    auto form = run({"spectrum", "--space", "form", "--n", "4", "--j", "1", "--k-max", "0", "--op", "lap", "--format", "json"});
    CHECK(form.code == 0);
    auto doc = Json::parse(form.out);
    REQUIRE(doc["lines"].size() == 2);
    CHECK(rational_from_json(doc["lines"][0]["eig"]) == 6);
    CHECK(rational_from_json(doc["lines"][1]["eig"]) == 4);
    CHECK(doc["lines"][0]["s"].is_null());
    CHECK(doc["status"] == "ok");

    auto sym = run({"spectrum", "--space", "sym", "--n", "4", "--j", "0", "--k-max", "2", "--op", "Tplus", "--format", "json"});
    auto sdoc = Json::parse(sym.out);
    REQUIRE(sdoc["lines"].size() == 3);
    CHECK(rational_from_json(sdoc["lines"][0]["eig"]) == 0);
    CHECK(rational_from_json(sdoc["lines"][1]["eig"]) == 4);
    CHECK(rational_from_json(sdoc["lines"][2]["eig"]) == 10);

    auto table = run({"spectrum", "--space", "spinor", "--n", "5", "--j", "1", "--k-max", "1", "--op", "Tplus", "--format", "table"});
    CHECK(table.out.find("320/49") != std::string::npos);
    CHECK(table.out.find('.') == std::string::npos);
}

TEST_CASE("dim, branch and killing") {
    auto d = run({"dim", "--n", "5", "--weight", "3/2,1/2", "--format", "json"});
    CHECK(d.code == 0);
    CHECK(Json::parse(d.out)["lines"][0]["dim"] == 16);

    auto b = run({"branch", "--n", "5", "--weight", "1/2,1/2", "--format", "json"});
    auto bl = Json::parse(b.out)["lines"];
    REQUIRE(bl.size() == 2);
    CHECK(bl[0]["dim"] == 2);
    CHECK(bl[1]["dim"] == 2);

    auto k = run({"killing", "--n", "4", "--degree", "2", "--format", "json"});
    std::vector<std::int64_t> prim;
    std::int64_t total = 0;
    const auto kdoc = Json::parse(k.out);
    for (const auto& line : kdoc["lines"]) {
        if (line["kind"] == "primitive") prim.push_back(line["dim"].get<std::int64_t>());
        if (line["kind"] == "total") total = line["dim"].get<std::int64_t>();
    }
    CHECK(prim == std::vector<std::int64_t>{35, 14});
    CHECK(total == 50);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"verify", "--suite", "all", "--n-min", "5", "--n-max", "4"}).code == 2);
    CHECK(run({"spectrum", "--space", "form", "--n", "4", "--j", "1", "--k-max", "0", "--s", "1"}).code == 2);
    CHECK(run({"spectrum", "--space", "spinor-form", "--n", "4", "--j", "3", "--k-max", "0"}).code == 2);
    CHECK(run({"spectrum", "--space", "sym", "--n", "4", "--j", "1", "--k-max", "0", "--op", "D2"}).code == 2);
    CHECK(run({"verify", "--suite", "nothing"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    auto bad = run({"dim", "--n", "5", "--weight", "1/2,x"});
    CHECK(bad.code == 2);
    CHECK(bad.err.find("'x'") != std::string::npos);
    auto nd = run({"dim", "--n", "5", "--weight", "1/2,3/2"});
    CHECK(nd.code == 2);
    CHECK(nd.err.find("1/2,3/2") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify reports check counts") {
    auto v = run({"verify", "--suite", "killing", "--n-min", "3", "--n-max", "6", "--format", "json"});
    CHECK(v.code == 0);
    auto doc = Json::parse(v.out);
    CHECK(doc["status"] == "ok");
    CHECK(doc["checks"].get<std::int64_t>() > 0);
}

TEST_CASE("json and csv carry the same exact values") {
    for (const std::string op : {"lap", "D2", "Tplus", "Tminus", "U"}) {
        std::vector<std::string> base{"spectrum", "--space", "spinor", "--n", "7", "--j", "2", "--k-max", "4", "--op", op};
        auto j = base;
        j.insert(j.end(), {"--format", "json"});
        auto c = base;
        c.insert(c.end(), {"--format", "csv"});
        auto doc = Json::parse(run(j).out);
        auto rows = parse_csv(run(c).out);
        REQUIRE(rows.size() == doc["lines"].size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            Rational num, den;
            std::string weight;
            for (const auto& [col, cell] : rows[i]) {
                if (col == "eig_num") num = parse_rational(cell);
                if (col == "eig_den") den = parse_rational(cell);
                if (col == "weight") weight = cell;
            }
            const Rational from_json = rational_from_json(doc["lines"][i]["eig"]);
            CHECK(num / den == from_json);
            CHECK(weight_to_string(weight_from_json(doc["lines"][i]["weight"]), ';') == weight);
            // re-serialized values are unchanged
            CHECK(rational_json(from_json) == doc["lines"][i]["eig"]);
        }
    }
}

TEST_CASE("identical invocations give identical bytes") {
    const std::vector<std::string> args{"verify", "--suite", "branching", "--n-min", "3", "--n-max", "6", "--seed", "11", "--format", "json"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> table{"spectrum", "--space", "sym", "--n", "6", "--j", "3", "--k-max", "5", "--format", "csv"};
    CHECK(run(table).out == run(table).out);
}
