#pragma once

#include <cstdint>

#include "xling/common.hpp"

namespace xling {

struct TrainingConfig {
  int dim = 200;
  int window = 5;
  int negatives = 5;
  int epochs = 2;
  double gamma = 1.0;   // weight of the sentence regularizer
  double theta = 0.0;   // cross-lingual attention threshold
  double alpha0 = 0.025;
  double alpha_min = 1e-4;
  double unigram_power = 0.75;
  std::uint64_t seed = 1;
  int threads = 1;
  // Pair-attention recompute period in examples; 0 = at epoch boundaries.
  std::int64_t attention_refresh = 0;

  // Throws DataError naming the offending field.
  void validate() const;
};

}  // namespace xling
