#include "lattice_waves/io.hpp"

#include "test_support.hpp"

#include <sstream>

using namespace lattice_waves;
using lattice_waves::testing::code_of;
using lattice_waves::testing::q;

TEST_SUITE("io") {
  TEST_CASE("group and element JSON") {
    const GroupSpec g = make_group(1, {4});
    CHECK(io::group_from_json(io::to_json(g)) == g);
    const GroupElement x = g.element({-3, 2});
    CHECK(io::element_from_json(g, io::to_json(x)) == x);
    CHECK(io::element_from_json(g, io::Json::parse("[-3, 6]")) == x);
    CHECK(code_of([] { io::group_from_json(io::Json::parse(R"({"moduli": [2]})")); }) == ErrorCode::InvalidInput);
    CHECK(code_of([&] { io::element_from_json(g, io::Json::parse(R"({"free": [1, 2]})")); }) ==
          ErrorCode::ShapeMismatch);
  }

  TEST_CASE("function JSON accepts strings and integers") {
    const auto j = io::Json::parse(R"({
      "group": {"rank": 1, "moduli": []},
      "values": [{"elem": {"free": [0]}, "num": 1},
                 {"elem": {"free": [2]}, "num": "-4", "den": "6"}]})");
    const SupportedFunction f = io::function_from_json(j);
    CHECK(f(f.group().element({2})) == q(-2, 3));
    CHECK(io::function_from_json(io::to_json(f)) == f);
    CHECK(code_of([&] { io::function_from_json(make_group(2), j); }) == ErrorCode::GroupMismatch);
  }

  TEST_CASE("CSV round trip") {
    const GroupSpec g = make_group(1, {4});
    SupportedFunction f(g);
    f.set(g.element({-2, 1}), q(7, 3));
    f.set(g.element({5, 0}), q(-1, 2));
    f.set(g.element({0, 0}), Rational("123456789123456789123456789"));
    std::stringstream ss;
    io::write_csv(ss, f, "kind=heat n=0 k=4");
    CHECK(ss.str().rfind("# kind=heat n=0 k=4\nvertex,num,den\n", 0) == 0);
    CHECK(io::read_csv(ss, g) == f);

    TreeFunction t(3);
    t.set(TreeVertex{}, q(1, 7));
    const std::vector<int> w{2, 3, 1};
    t.set(TreeVertex::from_letters(w, 3), -5);
    std::stringstream ts;
    io::write_csv(ts, t, "kind=tree-heat n=0 k=3");
    CHECK(io::read_tree_csv(ts, 3) == t);
  }

  TEST_CASE("CSV rows include requested zeros") {
    const GroupSpec g = make_group(1);
    SupportedFunction f = SupportedFunction::delta(g, g.identity(), 3);
    std::stringstream ss;
    io::write_csv_rows(ss, f, {g.element({-1}), g.element({0})}, "");
    CHECK(ss.str() == "vertex,num,den\n-1,0,1\n0,3,1\n");
  }

  TEST_CASE("malformed CSV") {
    std::stringstream ss("vertex,num,den\n1,2\n");
    CHECK(code_of([&] { io::read_csv(ss, make_group(1)); }) == ErrorCode::InvalidInput);
    std::stringstream bad("vertex,num,den\nx,2,1\n");
    CHECK(code_of([&] { io::read_csv(bad, make_group(1)); }) == ErrorCode::InvalidInput);
  }

  TEST_CASE("tree vertex JSON") {
    CHECK(io::vertex_from_json(io::Json::parse("[1,2,1]"), 2).to_string() == "1;2;1");
    CHECK(code_of([] { io::vertex_from_json(io::Json::parse("[1,1]"), 3); }) == ErrorCode::InvalidVertex);
  }
}
