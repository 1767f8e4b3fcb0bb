#include <doctest.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "edgebetti/error.hpp"
#include "edgebetti/generators.hpp"
#include "edgebetti/io.hpp"

using namespace edgebetti;

namespace {

const std::filesystem::path data_dir{EDGEBETTI_TEST_DATA};

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

std::string error_of(const std::string& text) {
    try {
        parse(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("edge list parsing") {
    CHECK(parse("n 4\n1 2\n2 3\n3 4\n4 1\n") == cycle_graph(4));
    CHECK(parse("# comment\n\n1 2\n  2 3  \n") == path_graph(3));
    CHECK(parse("n 6\n1 2\n").vertex_count() == 6);
    CHECK(parse("").vertex_count() == 0);
    CHECK(read_edge_list(data_dir / "c4.txt") == cycle_graph(4));
    CHECK(read_edge_list(data_dir / "empty.txt") == empty_graph(3));
}

TEST_CASE("edge list errors name the line") {
    CHECK(error_of("n 4\n1 2\n2 3\n3 2\n").find("line 4") != std::string::npos);
    CHECK(error_of("1 2\n2 x\n").find("line 2") != std::string::npos);
    CHECK(error_of("1 1\n").find("line 1") != std::string::npos);
    CHECK(error_of("n 3\n1 5\n").find("line 2") != std::string::npos);
    CHECK(error_of("1 2 3\n").find("line 1") != std::string::npos);
    CHECK(error_of("1 2\nn 4\n").find("line 2") != std::string::npos);
    CHECK(!error_of("0 1\n").empty());
    CHECK_THROWS_AS(read_edge_list(data_dir / "missing.txt"), InputError);
    CHECK_THROWS_AS(read_edge_list(data_dir / "duplicate.txt"), InputError);
    CHECK_THROWS_AS(parse("n 70\n1 2\n"), ResourceError);
}

TEST_CASE("json graphs") {
    const Graph d = read_json_graph(data_dir / "d.json");
    CHECK(d.vertex_count() == 5);
    CHECK(d.edge_count() == 7);
    CHECK(parse_json_graph(nlohmann::json(to_json(wheel_graph(5)))) == wheel_graph(5));
    CHECK_THROWS_AS(parse_json_graph(nlohmann::json::parse(R"({"n": 3, "edges": [[1, 2], [2]]})")), InputError);
    CHECK_THROWS_AS(parse_json_graph(nlohmann::json::parse(R"({"n": 3, "edges": [[1, 1]]})")), InputError);
    CHECK_THROWS_AS(parse_json_graph(nlohmann::json::parse(R"({"edges": [[1, 2]]})")), InputError);
    CHECK_THROWS_AS(parse_json_graph(nlohmann::json::parse(R"([1, 2])")), InputError);
}

TEST_CASE("generator specs") {
    using F = GeneratorSpec::Family;
    const Graph w = generate({.family = F::wheel, .sizes = {4}});
    CHECK(w.vertex_count() == 5);
    CHECK(w.edge_count() == 8);
    CHECK(degree(w, 1) == 4);
    CHECK(generate({.family = F::complete_bipartite, .sizes = {2, 3}}) == complete_bipartite_graph(2, 3));
    CHECK(generate({.family = F::random, .sizes = {8}, .p = 0.4, .seed = 12345}) == random_graph(8, 0.4, 12345));
    CHECK(generate({.family = F::random_tree, .sizes = {9}, .seed = 3}) == random_tree(9, 3));
    CHECK_THROWS_AS(generate({.family = F::complete, .sizes = {0}}), InputError);
    CHECK_THROWS_AS(generate({.family = F::random, .sizes = {5}, .p = -0.1}), InputError);
    CHECK_THROWS_AS(generate({.family = F::complete_bipartite, .sizes = {2}}), InputError);
}

TEST_CASE("betti table json") {
    BettiTable t;
    t.n = 4;
    t.add(0, 2, 4);
    t.add(1, 3, 4);
    t.add(2, 4, 1);
    t.add(3, 9, 0);
    CHECK(t.entries.size() == 3);
    const auto doc = to_json(t);
    CHECK(doc.dump() == R"({"n":4,"entries":[{"i":0,"j":2,"beta":4},{"i":1,"j":3,"beta":4},{"i":2,"j":4,"beta":1}]})");
    CHECK(betti_table_from_json(nlohmann::json::parse(doc.dump())) == t);
    BettiTable empty;
    empty.n = 3;
    CHECK(to_json(empty).dump() == R"({"n":3,"entries":[]})");
    CHECK(betti_table_from_json(nlohmann::json(to_json(empty))) == empty);
    CHECK_THROWS_AS(betti_table_from_json(nlohmann::json::parse(R"({"n":3,"entries":[{"i":0,"j":2}]})")), InputError);
}

TEST_CASE("renderers") {
    BettiTable t;
    t.n = 4;
    t.add(0, 2, 6);
    t.add(1, 3, 8);
    t.add(2, 4, 3);
    const std::string text = render_betti_table(t);
    CHECK(text.find('6') != std::string::npos);
    CHECK(text.find('8') != std::string::npos);
    CHECK(render_betti_csv(t) == "i,j,beta\n0,2,6\n1,3,8\n2,4,3\n");
    BettiTable empty;
    CHECK(render_betti_table(empty).find("zero ideal") != std::string::npos);

    StrandReport r;
    r.n = 4;
    r.edges = 4;
    r.has_induced_c4 = true;
    StrandRow row;
    row.i = 2;
    row.oracle = 1;
    row.components = 1;
    row.no_c4 = {0, false};
    row.beta24 = 1;
    row.lower = 1;
    row.upper = 3;
    r.rows.push_back(row);
    CHECK(render_strand_csv(r) == "i,oracle,formula_no_c4,beta24,beta35,lower,upper\n2,1,,1,,1,3\n");
    const auto doc = to_json(r);
    CHECK(doc["rows"][0]["formula_no_c4"]["applicable"] == false);
    CHECK(doc["rows"][0]["beta35"].is_null());
}
