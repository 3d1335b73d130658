#include <benchmark/benchmark.h>

#include <cmath>

#include "tura/correlation.h"
#include "tura/forest.h"
#include "tura/logreg.h"
#include "tura/random.h"

namespace {

using namespace tura;

Dataset noisy_dataset(std::size_t rows, std::size_t cols) {
  Rng rng(11);
  Dataset d;
  d.cols = cols;
  d.classes = 3;
  std::vector<double> x(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const int label = static_cast<int>(r % 3);
    for (std::size_t j = 0; j < cols; ++j) {
      x[j] = rng.uniform_real() + (j < 5 ? 0.4 * label : 0.0);
    }
    d.add_row(x, label);
  }
  return d;
}

void BM_ForestTrain(benchmark::State& state) {
  const auto data = noisy_dataset(static_cast<std::size_t>(state.range(0)), 98);
  ForestParams params;
  params.n_trees = 100;
  for (auto _ : state) {
    auto model = train_random_forest(data, params, 7, 1);
    benchmark::DoNotOptimize(model.trees.data());
  }
}
BENCHMARK(BM_ForestTrain)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_LogRegTrain(benchmark::State& state) {
  const auto data = noisy_dataset(static_cast<std::size_t>(state.range(0)), 98);
  LogRegParams params;
  for (auto _ : state) {
    auto model = train_logreg(data, params);
    benchmark::DoNotOptimize(model.weights.data());
  }
}
BENCHMARK(BM_LogRegTrain)->Arg(300)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_Spearman(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<double> x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::floor(rng.uniform_real() * 50);
    y[i] = static_cast<double>(rng.uniform_index(3));
  }
  for (auto _ : state) benchmark::DoNotOptimize(spearman(x, y).rho);
}
BENCHMARK(BM_Spearman)->Arg(1000)->Arg(100000);

}  // namespace
