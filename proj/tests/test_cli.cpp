#include <doctest.h>

#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "edgebetti/betti.hpp"
#include "edgebetti/generators.hpp"
#include "edgebetti/io.hpp"

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::initializer_list<std::string> args) {
    std::vector<std::string> storage{"edgebetti"};
    storage.insert(storage.end(), args);
    std::vector<const char*> argv;
    for (const auto& s : storage) argv.push_back(s.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = edgebetti::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(EDGEBETTI_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("betti verb") {
    const auto k4 = run({"betti", "--complete", "4"});
    CHECK(k4.code == 0);
    CHECK(k4.out.find("6") != std::string::npos);
    CHECK(k4.out.find("8") != std::string::npos);
    CHECK(k4.out.find("3") != std::string::npos);

    const auto c4 = run({"betti", "--cycle", "4", "--format", "json"});
    REQUIRE(c4.code == 0);
    const auto doc = nlohmann::json::parse(c4.out);
    CHECK(doc["entries"].size() == 3);
    CHECK(doc["entries"][2] == nlohmann::json::parse(R"({"i":2,"j":4,"beta":1})"));

    const auto empty = run({"betti", "--edges", data("empty.txt"), "--format", "json"});
    REQUIRE(empty.code == 0);
    CHECK(nlohmann::json::parse(empty.out)["entries"].empty());

    const auto csv = run({"betti", "--complete", "3", "--format", "csv"});
    CHECK(csv.out == "i,j,beta\n0,2,3\n1,3,2\n");
}

TEST_CASE("json output round trips through the library") {
    const auto res = run({"betti", "--random", "9", "0.5", "21", "--format", "json"});
    REQUIRE(res.code == 0);
    const auto table = edgebetti::betti_table_from_json(nlohmann::json::parse(res.out));
    CHECK(table == edgebetti::betti_table_hochster(edgebetti::random_graph(9, 0.5, 21)));
}

TEST_CASE("strand verb") {
    const auto k23 = run({"strand", "--complete-bipartite", "2", "3", "--format", "json"});
    REQUIRE(k23.code == 0);
    const auto doc = nlohmann::json::parse(k23.out);
    const int expected[] = {6, 9, 5, 1};
    REQUIRE(doc["rows"].size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(doc["rows"][i]["oracle"] == expected[i]);
        if (i <= 2) CHECK(doc["rows"][i]["lower_tight"] == true);
    }
    const auto p4 = run({"strand", "--path", "4", "--format", "json"});
    const auto row = nlohmann::json::parse(p4.out)["rows"][1];
    CHECK(row["oracle"] == 2);
    CHECK(row["formula_no_c4"]["value"] == 2);
    CHECK(row["formula_no_c4"]["applicable"] == true);

    const auto rnd = run({"strand", "--random", "8", "0.4", "12345"});
    CHECK(rnd.code == 0);
    const auto csv = run({"strand", "--cycle", "4", "--format", "csv"});
    CHECK(csv.out.rfind("i,oracle,formula_no_c4,beta24,beta35,lower,upper\n", 0) == 0);
    CHECK(csv.out.find("\n2,1,,1,,1,") != std::string::npos);
    CHECK(run({"strand", "--cycle", "6", "--max-i", "1", "--format", "csv"}).out == "i,oracle,formula_no_c4,beta24,beta35,lower,upper\n0,6,6,,,6,6\n1,6,6,,,6,"
                                                                                   + std::to_string(edgebetti::lex_upper_bound(6, 6, 1)) + "\n");
}

TEST_CASE("other verbs") {
    const auto census = run({"census", "--cycle", "4", "--format", "json"});
    CHECK(nlohmann::json::parse(census.out)["k_bipartite"]["2,2"] == 1);
    CHECK(run({"bounds", "--complete", "4"}).out.find("1,8,9") != std::string::npos);
    CHECK(run({"triangles", "--complete", "4"}).out.find("3") != std::string::npos);
    const auto res = run({"resolution", "--cycle", "5", "--format", "json"});
    CHECK(nlohmann::json::parse(res.out)["linear"] == false);
    CHECK(nlohmann::json::parse(run({"resolution", "--complete", "5", "--format", "json"}).out)["linear"] == true);
    CHECK(run({"check", "--wheel", "4"}).code == 0);
    const auto verify = run({"verify", "--max-n", "4", "--threads", "1"});
    CHECK(verify.code == 0);
    CHECK(verify.out.find("64") != std::string::npos);
}

TEST_CASE("exit codes") {
    CHECK(run({"betti", "--edges", data("duplicate.txt")}).code == edgebetti::cli::kInputError);
    const auto bad = run({"betti", "--edges", data("malformed.txt")});
    CHECK(bad.code == edgebetti::cli::kInputError);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"betti"}).code == edgebetti::cli::kInputError);
    CHECK(run({"betti", "--complete", "3", "--cycle", "4"}).code == edgebetti::cli::kInputError);
    CHECK(run({"frobnicate", "--complete", "3"}).code == edgebetti::cli::kInputError);
    CHECK(run({"betti", "--complete", "3", "--field", "4"}).code == edgebetti::cli::kInputError);
    CHECK(run({"betti", "--random", "5", "2.0", "1"}).code == edgebetti::cli::kInputError);
    CHECK(run({"betti", "--complete", "15"}).code == edgebetti::cli::kResourceError);
    CHECK(run({"betti", "--complete", "100"}).code == edgebetti::cli::kResourceError);
    CHECK(run({"betti", "--complete", "15", "--cap", "15", "--format", "csv"}).code == 0);
}

TEST_CASE("output is byte identical across thread counts") {
    const auto a = run({"strand", "--random", "10", "0.5", "7", "--threads", "1", "--format", "json"});
    const auto b = run({"strand", "--random", "10", "0.5", "7", "--threads", "3", "--format", "json"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(run({"betti", "--random", "10", "0.5", "7", "--threads", "1"}).out == run({"betti", "--random", "10", "0.5", "7", "--threads", "4"}).out);
}
