#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tura {

// Linear readability formula: intercept - word_length * syllables/word
//                                       - sentence_length * words/sentence.
struct FormulaCoefficients {
  double intercept = 0.0;
  double word_length = 0.0;
  double sentence_length = 0.0;

  bool operator==(const FormulaCoefficients&) const = default;
};

inline constexpr FormulaCoefficients kAtesmanCoefficients{198.825, 40.175, 2.610};
inline constexpr FormulaCoefficients kCetinkayaCoefficients{118.823, 25.987, 0.971};

// Everything feature extraction reads from the JSON config file. Defaults
// apply to keys that are absent.
struct FeatureConfig {
  FormulaCoefficients atesman = kAtesmanCoefficients;
  FormulaCoefficients cetinkaya = kCetinkayaCoefficients;

  std::optional<std::filesystem::path> early_lexicon;
  std::optional<std::filesystem::path> late_lexicon;
  std::optional<std::filesystem::path> basic_words;

  int mattr_window = 50;

  int mci_sample_size = 10;
  int mci_samples = 100;
  std::uint64_t mci_seed = 0;

  std::vector<std::string> np_labels{"NP"};
  std::vector<std::string> vp_labels{"VP"};
};

// Unknown keys and ill-typed values raise ConfigError. Relative lexicon
// paths are resolved against `base_dir`.
FeatureConfig parse_config(std::string_view json,
                           const std::filesystem::path& base_dir = {});
FeatureConfig load_config(const std::filesystem::path& path);

// Effective configuration as pretty-printed JSON (every key present).
std::string config_to_json(const FeatureConfig& config);

}  // namespace tura
