#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "builders.h"
#include "oracles.h"
#include "tura/errors.h"
#include "tura/forest.h"

using namespace tura;

TEST_CASE("gini impurity") {
  CHECK(gini(std::vector<int>{5, 0, 0}) == 0.0);
  CHECK(gini(std::vector<int>{1, 1}) == doctest::Approx(0.5));
  CHECK(gini(std::vector<int>{1, 1, 1, 1}) == doctest::Approx(0.75));
  CHECK(gini(std::vector<int>{}) == 0.0);
}

TEST_CASE("single tree with mtry = p matches the exhaustive reference") {
  Rng rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng.uniform_index(11);
    const std::size_t p = 1 + rng.uniform_index(3);
    const auto d = testing::random_dataset(rng, n, p, 3, 1 + static_cast<int>(rng.uniform_index(5)));
    std::vector<std::size_t> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    Rng unused(0);
    const auto tree = grow_tree(d, rows, static_cast<int>(p), 1, 0, unused);
    CHECK(oracles::tree_difference(tree, oracles::cart_tree(d, rows)) == "");
  }
}

TEST_CASE("tie between features goes to the lowest index") {
  Dataset d;
  d.cols = 2;
  d.classes = 2;
  d.add_row(std::vector<double>{0, 0}, 0);
  d.add_row(std::vector<double>{1, 1}, 1);
  std::vector<std::size_t> rows{0, 1};
  Rng rng(0);
  const auto t = grow_tree(d, rows, 2, 1, 0, rng);
  CHECK(t.nodes[0].feature == 0);
  CHECK(t.nodes[0].threshold == 0.5);
}

TEST_CASE("tie between thresholds goes to the lowest threshold") {
  // Labels 0 1 0: splitting after the first or the second row both give
  // one pure child and one mixed child of size two.
  Dataset d;
  d.cols = 1;
  d.classes = 2;
  d.add_row(std::vector<double>{1}, 0);
  d.add_row(std::vector<double>{2}, 1);
  d.add_row(std::vector<double>{3}, 0);
  std::vector<std::size_t> rows{0, 1, 2};
  Rng rng(0);
  const auto t = grow_tree(d, rows, 1, 1, 0, rng);
  CHECK(t.nodes[0].threshold == 1.5);
}

TEST_CASE("constant features and pure nodes are never split") {
  Dataset d;
  d.cols = 2;
  d.classes = 2;
  for (int i = 0; i < 6; ++i) d.add_row(std::vector<double>{7, static_cast<double>(i)}, i < 3 ? 0 : 1);
  std::vector<std::size_t> rows{0, 1, 2, 3, 4, 5};
  Rng rng(3);
  const auto t = grow_tree(d, rows, 1, 1, 0, rng);
  REQUIRE(t.nodes.size() == 3);
  CHECK(t.nodes[0].feature == 1);
  CHECK(t.nodes[0].threshold == 2.5);
}

TEST_CASE("min_leaf and max_depth limit growth") {
  Rng rng(5);
  const auto d = testing::random_dataset(rng, 40, 3, 3, 10);
  std::vector<std::size_t> rows(40);
  std::iota(rows.begin(), rows.end(), 0);
  Rng r1(1);
  const auto stump = grow_tree(d, rows, 3, 1, 1, r1);
  CHECK(stump.nodes.size() <= 3);
  Rng r2(1);
  const auto leafy = grow_tree(d, rows, 3, 8, 0, r2);
  for (const auto& node : leafy.nodes) {
    CHECK(std::accumulate(node.class_counts.begin(), node.class_counts.end(), 0) >= 8);
  }
}

TEST_CASE("forest training is deterministic and independent of jobs") {
  Rng rng(7);
  const auto d = testing::random_dataset(rng, 60, 5, 3, 6);
  ForestParams params;
  params.n_trees = 25;
  const auto a = train_random_forest(d, params, 42, 1);
  const auto b = train_random_forest(d, params, 42, 4);
  CHECK(a == b);
  const auto c = train_random_forest(d, params, 43, 1);
  CHECK_FALSE(a == c);
  CHECK(a.params.mtry == 2);
}

TEST_CASE("mdi importance sums to one and favours the informative feature") {
  Rng rng(9);
  Dataset d;
  d.cols = 3;
  d.classes = 3;
  for (int i = 0; i < 90; ++i) {
    const int label = i % 3;
    d.add_row(std::vector<double>{static_cast<double>(label) + 0.1 * rng.uniform_real(),
                                  rng.uniform_real(), rng.uniform_real()},
              label);
  }
  ForestParams params;
  params.n_trees = 50;
  const auto model = train_random_forest(d, params, 1);
  const auto mdi = mdi_importance(model);
  CHECK(std::accumulate(mdi.begin(), mdi.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mdi[0] > mdi[1]);
  CHECK(mdi[0] > mdi[2]);
  for (double v : mdi) CHECK(v >= 0.0);
}

TEST_CASE("forest probabilities are vote fractions") {
  Rng rng(11);
  const auto d = testing::random_dataset(rng, 30, 2, 3, 4);
  ForestParams params;
  params.n_trees = 9;
  const auto model = train_random_forest(d, params, 3);
  for (std::size_t r = 0; r < d.rows; ++r) {
    const auto p = model.predict_proba(d.row(r));
    CHECK(std::accumulate(p.begin(), p.end(), 0.0) == doctest::Approx(1.0));
    const int best = static_cast<int>(std::max_element(p.begin(), p.end()) - p.begin());
    CHECK(model.predict(d.row(r)) == best);
  }
}

TEST_CASE("forest rejects single-class and empty data") {
  Dataset d;
  d.cols = 1;
  d.add_row(std::vector<double>{1}, 0);
  d.add_row(std::vector<double>{2}, 0);
  CHECK_THROWS_AS(train_random_forest(d, {}, 1), TrainingError);
  CHECK_THROWS_AS(train_random_forest(Dataset{}, {}, 1), TrainingError);
}

TEST_CASE("resolve_mtry") {
  CHECK(resolve_mtry(0, 98) == 9);
  CHECK(resolve_mtry(0, 1) == 1);
  CHECK(resolve_mtry(50, 7) == 7);
  CHECK(resolve_mtry(3, 7) == 3);
}
