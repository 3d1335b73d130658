#include <benchmark/benchmark.h>

#include <filesystem>

#include "tura/features.h"
#include "tura/io.h"
#include "tura/lxsm.h"
#include "tura/morph.h"
#include "tura/random.h"
#include "tura/synthetic.h"

namespace {

using namespace tura;

std::vector<std::string> token_stream(std::size_t n, std::size_t vocab) {
  Rng rng(3);
  std::vector<std::string> tokens;
  tokens.reserve(n);
  for (std::size_t i = 0; i < n; ++i) tokens.push_back("w" + std::to_string(rng.uniform_index(vocab)));
  return tokens;
}

void BM_Mattr(benchmark::State& state) {
  const auto tokens = token_stream(static_cast<std::size_t>(state.range(0)), 400);
  for (auto _ : state) benchmark::DoNotOptimize(mattr(tokens, 50));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Mattr)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_Mci(benchmark::State& state) {
  Rng rng(5);
  const std::vector<std::string> pool{"lar", "ler", "da", "de", "ı", "i", "dan", "den", "∅"};
  std::vector<std::string> inventory;
  for (int i = 0; i < 300; ++i) inventory.push_back(pool[rng.uniform_index(pool.size())]);
  MciParams params;
  params.sample_size = 10;
  params.samples = static_cast<int>(state.range(0));
  params.with_replacement = false;
  for (auto _ : state) benchmark::DoNotOptimize(mci(inventory, params).value);
}
BENCHMARK(BM_Mci)->Arg(100)->Arg(1000);

class ExtractFixture : public benchmark::Fixture {
 public:
  void SetUp(const benchmark::State&) override {
    if (!documents.empty()) return;
    const auto dir = std::filesystem::temp_directory_path() / "tura_bench_lexicons";
    std::filesystem::create_directories(dir);
    io::write_file_atomic(dir / "early.tsv", synthetic::early_lexicon_tsv());
    io::write_file_atomic(dir / "late.tsv", synthetic::late_lexicon_tsv());
    io::write_file_atomic(dir / "basic.txt", synthetic::basic_words_txt());
    config.early_lexicon = dir / "early.tsv";
    config.late_lexicon = dir / "late.tsv";
    config.basic_words = dir / "basic.txt";
    synthetic::Options options;
    options.trees = true;
    options.sentences = 12;
    documents = synthetic::generate(synthetic::separable_plan(20), options);
  }

  FeatureConfig config;
  std::vector<Document> documents;
};

BENCHMARK_DEFINE_F(ExtractFixture, AllGroups)(benchmark::State& state) {
  for (auto _ : state) {
    auto x = extract_all(documents, config, GroupSet::linguistic(), 1);
    benchmark::DoNotOptimize(x.matrix.rows.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(documents.size()));
}
BENCHMARK_REGISTER_F(ExtractFixture, AllGroups)->Unit(benchmark::kMillisecond);

}  // namespace
