#include <catch_amalgamated.hpp>

#include "spindual/serialize.hpp"

using namespace spindual;

namespace {

Table small_table() {
    Table t;
    t.columns = {{"name", "name"}, {"value", "$v$"}, {"refs", "refs", true}};
    t.rows.push_back({"a,b", 3, Json::array({1, 2})});
    t.rows.push_back({"say \"hi\"", nullptr, 4});
    t.rows.push_back({"x_y", -1, nullptr});
    return t;
}

std::size_t count_lines(const std::string& s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST_CASE("root names", "[serialize]") {
    CHECK(root_name({1, -1, 0}) == "e1-e2");
    CHECK(root_name({0, 1, 1}) == "e2+e3");
    CHECK(root_name({0, 0, 1}) == "e3");
    CHECK(root_name({-1, 0}) == "-e1");
}

TEST_CASE("csv output", "[serialize]") {
    const auto csv = to_csv(small_table());
    CHECK(csv == "name,value,refs\n\"a,b\",3,1 2\n\"say \"\"hi\"\"\",*,4\nx_y,-1,*\n");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a\nb") == "\"a\nb\"");
}

TEST_CASE("json output", "[serialize]") {
    const auto j = to_json(small_table());
    REQUIRE(j.size() == 3);
    CHECK(j[0]["name"] == "a,b");
    CHECK(j[0]["refs"] == Json::array({1, 2}));
    CHECK(j[1]["value"].is_null());
    CHECK(j[0].begin().key() == "name");
    CHECK(Json::parse(emit(small_table(), Format::json)) == j);
}

TEST_CASE("tex output", "[serialize]") {
    const auto tex = to_tex(small_table());
    CHECK(tex.rfind("\\begin{tabular}{|c|c|c|}", 0) == 0);
    CHECK(tex.find("$\\left\\{\\gamma_{1},\\gamma_{2}\\right\\}$") != std::string::npos);
    CHECK(tex.find("$\\gamma_{4}$") != std::string::npos);
    CHECK(tex.find("x\\_y") != std::string::npos);
    CHECK(tex.find("\\end{tabular}") != std::string::npos);
    CHECK(tex_escape("50% & $") == "50\\% \\& \\$");
}

TEST_CASE("table builders", "[serialize]") {
    CHECK(involution_table(2).rows.size() == 6);
    CHECK(class_table(4).rows.size() == 9);
    CHECK(class_table(2).rows.front()[0] == "- -");  // ordered by (n_c, n_s)

    const auto t = SignedPerm::identity(4);
    const auto fib = fiber_table(enumerate_fiber(t, parse_grading(t, "++nn")));
    CHECK(fib.rows.size() == 12);
    CHECK(fib.columns.size() == 3 + 4);
    CHECK(fib.columns[3].key == "s_e1-e2");
    CHECK(count_lines(emit(fib, Format::csv)) == 13);

    const Setting s{{3, 2}, family(InfChar({3, 2}))};
    const auto ps = enumerate_params(s, 0, 1);
    const auto pt = params_table(ps, s);
    CHECK(pt.rows.size() == 9);
    CHECK(pt.rows.front()[4] == "3/2,1");
    const auto dt = dualize_table(ps, s);
    for (const auto& row : dt.rows) CHECK(row[6] == "(3,2)");

    const auto b = build_block({3, 2}, InfChar({3, 2}), 1);
    const auto bt = block_table(b);
    CHECK(bt.rows.size() == 9);
    std::vector<std::string> keys;
    for (const auto& c : bt.columns) keys.push_back(c.key);
    CHECK(keys == std::vector<std::string>{"index", "length", "cross_e1", "cross_e2", "ext_e1-e2", "cayley_e1-e2",
                                           "cayley_e2", "theta", "grading", "chi", "pc", "lambda"});
    CHECK(Json::parse(emit(bt, Format::json))[0].size() == keys.size());
    CHECK(to_tex(bt).find("$s_{e2}\\times$") != std::string::npos);
}

TEST_CASE("output is deterministic", "[serialize]") {
    const auto run = [] { return emit(verify_table({criterion_block(), criterion_fiber()}), Format::json); };
    CHECK(run() == run());
    const auto b = build_block({5, 4}, InfChar({7, 5, 3, 2}), 1);
    CHECK(emit(block_table(b), Format::csv) == emit(block_table(build_block({5, 4}, InfChar({7, 5, 3, 2}), 1)), Format::csv));
}

TEST_CASE("ordered parallel map", "[parallel]") {
    for (int threads : {1, 2, 4, 16}) {
        const auto v = parallel_map<int>(100, threads, [](std::size_t i) { return static_cast<int>(i * i); });
        REQUIRE(v.size() == 100);
        for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == static_cast<int>(i * i));
    }
    CHECK(parallel_map<int>(0, 4, [](std::size_t) { return 1; }).empty());
    CHECK_THROWS_AS(parallel_map<int>(10, 3,
                                      [](std::size_t i) -> int {
                                          if (i == 7) throw std::runtime_error("boom");
                                          return 0;
                                      }),
                    std::runtime_error);
    CHECK(resolve_threads(3) >= 1);
}
