#include "lattice_waves/oracle.hpp"
#include "lattice_waves/tree.hpp"

#include "test_support.hpp"

using namespace lattice_waves;
using lattice_waves::testing::code_of;
using lattice_waves::testing::q;

namespace {

TreeVertex v(std::initializer_list<int> letters, int k = 3) {
  const std::vector<int> w(letters);
  return TreeVertex::from_letters(w, k);
}

TreeFunction delta(int k, const TreeVertex& x, const Rational& c = 1) {
  TreeFunction f(k);
  f.set(x, c);
  return f;
}

} // namespace

TEST_SUITE("tree") {
  TEST_CASE("vertices") {
    CHECK(v({}).is_root());
    CHECK(v({1, 2, 1}).to_string() == "1;2;1");
    CHECK(v({1, 2}).parent() == v({1}));
    CHECK(v({1}).child(3) == v({1, 3}));
    CHECK(code_of([] { v({1, 1}); }) == ErrorCode::InvalidVertex);
    CHECK(code_of([] { v({4}); }) == ErrorCode::InvalidVertex);
    CHECK(code_of([] { v({0}); }) == ErrorCode::InvalidVertex);
    CHECK(tree_distance(v({1, 2}), v({1, 3})) == 2);
    CHECK(tree_distance(v({1, 2}), v({2})) == 3);
    CHECK(tree_distance(v({}), v({2, 1})) == 2);
    CHECK(tree_neighbors(v({}), 3).size() == 3);
    CHECK(tree_neighbors(v({2}), 3).size() == 3);
    CHECK(code_of([] { TreeFunction f(1); }) == ErrorCode::InvalidInput);
    TreeFunction f(2);
    CHECK(code_of([&] { f.set(v({3}, 3), 1); }) == ErrorCode::InvalidVertex);
  }

  TEST_CASE("sphere sizes and means") {
    CHECK(sphere_size(3, 0) == 1);
    CHECK(sphere_size(3, 2) == 6);
    for (int r = 1; r < 6; ++r) CHECK(sphere_size(2, r) == 2);
    TreeFunction nbrs(3);
    for (int i = 1; i <= 3; ++i) nbrs.set(v({i}), 1);
    CHECK(spherical_mean(nbrs, v({}), 1) == 1);
    CHECK(spherical_mean(nbrs, v({}), -1) == 1);
    CHECK(spherical_mean(delta(3, v({1})), v({1}), 0) == 1);
    CHECK(spherical_mean(delta(3, v({1})), v({1}), 2) == 0);
    CHECK(path_reduce(nbrs, v({})) == std::vector<Rational>{0, 1});
    CHECK(path_reduce(delta(3, v({})), v({})) == std::vector<Rational>{1});
  }

  TEST_CASE("alpha coefficients") {
    for (int k = 2; k <= 5; ++k) {
      CHECK(alpha_coeff(1, -1, k) == -(k - 1));
      CHECK(alpha_coeff(1, 0, k) == k);
      CHECK(alpha_coeff(1, 1, k) == -1);
      CHECK(alpha_coeff(0, 0, k) == 1);
    }
    CHECK(alpha_coeff(2, 0, 3) == 13);
    CHECK(oracle::symbol_power(3, 2).at(0) == 13);
    CHECK(code_of([] { alpha_coeff(2, 3, 3); }) == ErrorCode::IndexOutOfRange);
  }

  TEST_CASE("heat weights") {
    for (int k = 2; k <= 5; ++k) {
      const WeightTable w0 = tree_heat_weights(k, 0);
      CHECK(w0.weights == std::vector<Rational>{1});
      const WeightTable w1 = tree_heat_weights(k, 1);
      CHECK(w1.weights == std::vector<Rational>{Rational(-(k - 1)), 1});
    }
    // Two steps from a point mass on the 3-regular tree: u(root, 2) = 3 * 1 + 2 * 2 = 7.
    CHECK(tree_heat_weights(3, 2).weights[0] == 7);
    // The alpha-coefficient closed form folds both sides of the line and gets 8.
    CHECK(line_heat_weights(3, 2).weights[0] == 8);
    CHECK(line_heat_weights(2, 6).weights == tree_heat_weights(2, 6).weights);
  }

  TEST_CASE("wave weights") {
    for (int k = 2; k <= 5; ++k) {
      const auto [f1, g1] = tree_wave_weights(k, 1);
      CHECK(f1.weights == std::vector<Rational>{1});
      CHECK(g1.weights == std::vector<Rational>{1});
      const auto [f2, g2] = tree_wave_weights(k, 2);
      CHECK(f2.weights == std::vector<Rational>{Rational(-(k - 1)), 1});
      CHECK(g2.weights == std::vector<Rational>{2});
      const auto [f0, g0] = tree_wave_weights(k, 0);
      CHECK(f0.weights == std::vector<Rational>{1});
      CHECK(g0.weights.empty());
    }
  }

  TEST_CASE("laplacian powers match the tree laplacian") {
    for (int k = 2; k <= 4; ++k) {
      const auto powers = tree_laplacian_powers(k, 5);
      TreeFunction u = delta(k, TreeVertex{});
      for (int j = 0; j <= 5; ++j) {
        for (const auto& [x, val] : u.entries()) CHECK(val == Rational(powers[j][x.depth()]));
        u = oracle::tree_laplacian(u);
      }
    }
  }

  TEST_CASE("solutions") {
    const std::vector<TreeVertex> at{v({}), v({2})};
    const TreeFunction u = tree_heat_solve(delta(3, v({})), 1, at);
    CHECK(u(v({})) == -2);
    CHECK(u(v({2})) == 1);
    const TreeFunction f = delta(3, v({1, 2}), q(3, 4));
    CHECK(tree_heat_solve(f, 0, std::vector{v({1, 2}), v({1})}) == f);

    TreeFunction g(3);
    g.set(v({1}), 1);
    g.set(v({2}), -1);
    // Balanced around the root only; [1] sees g(1) + 2 * (-1/6) = 2/3.
    const TreeFunction w = tree_wave_solve(f, g, 1, std::vector{v({})});
    CHECK(w(v({})) == 0);
    CHECK(code_of([&] { tree_wave_solve(f, g, 1, std::vector{v({}), v({1})}); }) == ErrorCode::NotSolvable);
  }

  TEST_CASE("wave solvability is checked per evaluation vertex") {
    TreeFunction g(3);
    g.set(v({}), 1);
    for (int i = 1; i <= 3; ++i) g.set(v({i}), q(-1, 3));
    CHECK(wave_solvability_sum(g, v({})) == q(1, 3));
    try {
      tree_wave_solve(TreeFunction(3), g, 2, std::vector{v({})});
      FAIL("expected NotSolvableError");
    } catch (const NotSolvableError& e) {
      CHECK(e.sum() == "1/3");
      CHECK(e.where() == "[]");
    }
    CHECK(tree_wave_solve(TreeFunction(3), TreeFunction(3), 2, std::vector{v({})}).is_zero());
  }
}
