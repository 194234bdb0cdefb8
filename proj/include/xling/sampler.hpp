#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "xling/common.hpp"
#include "xling/vocabulary.hpp"

namespace xling {

// Unigram^power negative sampler with one cumulative distribution per
// (language, kind) class.
class NegativeSampler {
 public:
  NegativeSampler(const Vocabulary& vocab_a, const Vocabulary& vocab_b, double power);

  std::int32_t sample(SymbolClass cls, Rng& rng) const;
  double probability(SymbolClass cls, std::int32_t id) const;
  std::int32_t class_size(SymbolClass cls) const {
    return static_cast<std::int32_t>(cdf_[cls.index()].size());
  }

 private:
  std::array<std::vector<double>, kNumClasses> cdf_;
};

}  // namespace xling
