#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "xling/common.hpp"
#include "xling/config.hpp"
#include "xling/vocabulary.hpp"

namespace xling {

// Dense input ("syn0") and output ("syn1", negative-sampling context)
// vectors for every retained symbol, laid out per class.
class EmbeddingTable {
 public:
  EmbeddingTable(std::array<std::int32_t, kNumClasses> class_sizes, int dim);

  int dim() const { return dim_; }
  std::int32_t class_size(int cls) const { return sizes_[cls]; }
  std::int64_t total_symbols() const;

  std::span<float> input(SymbolClass cls, std::int32_t id) {
    return {input_.data() + offset(cls, id), static_cast<std::size_t>(dim_)};
  }
  std::span<const float> input(SymbolClass cls, std::int32_t id) const {
    return {input_.data() + offset(cls, id), static_cast<std::size_t>(dim_)};
  }
  std::span<float> output(SymbolClass cls, std::int32_t id) {
    return {output_.data() + offset(cls, id), static_cast<std::size_t>(dim_)};
  }
  std::span<const float> output(SymbolClass cls, std::int32_t id) const {
    return {output_.data() + offset(cls, id), static_cast<std::size_t>(dim_)};
  }

  std::span<const float> all_inputs() const { return input_; }
  std::span<const float> all_outputs() const { return output_; }

  // First non-finite input/output component, as (class, id), if any.
  std::optional<SymbolRef> find_non_finite() const;

  bool operator==(const EmbeddingTable& other) const {
    return dim_ == other.dim_ && sizes_ == other.sizes_ &&
           input_ == other.input_ && output_ == other.output_;
  }

 private:
  std::int64_t offset(SymbolClass cls, std::int32_t id) const {
    return (offsets_[cls.index()] + id) * dim_;
  }

  int dim_;
  std::array<std::int32_t, kNumClasses> sizes_;
  std::array<std::int64_t, kNumClasses> offsets_;
  std::vector<float> input_;
  std::vector<float> output_;
};

// Input vectors uniform in [-0.5/d, 0.5/d] from config.seed, outputs zero.
EmbeddingTable init_embeddings(const Vocabulary& vocab_a, const Vocabulary& vocab_b,
                               const TrainingConfig& config);

// A table plus the symbol surfaces needed to use it standalone (the
// embedding file stores input vectors only; outputs load as zero).
struct EmbeddingModel {
  std::array<LanguageId, 2> languages;
  std::array<std::vector<std::string>, kNumClasses> surfaces;
  EmbeddingTable table;

  std::optional<SymbolRef> find(std::string_view surface, int lang, SymbolKind kind) const;
  int lang_index(const LanguageId& language) const;

 private:
  friend EmbeddingModel make_model(const EmbeddingTable&, const Vocabulary&,
                                   const Vocabulary&);
  friend EmbeddingModel load_embeddings(const std::filesystem::path&);
  std::array<std::unordered_map<std::string, std::int32_t>, kNumClasses> index_;
};

EmbeddingModel make_model(const EmbeddingTable& table, const Vocabulary& vocab_a,
                          const Vocabulary& vocab_b);

// Text format: header `<n_symbols> <d>`, then per symbol
// `surface<TAB>kind<TAB>lang v1 ... vd` with 6 decimal places, classes in
// (lang0 words, lang0 entities, lang1 words, lang1 entities) order.
void save_embeddings(const EmbeddingTable& table, const Vocabulary& vocab_a,
                     const Vocabulary& vocab_b, const std::filesystem::path& path);
EmbeddingModel load_embeddings(const std::filesystem::path& path);

}  // namespace xling
