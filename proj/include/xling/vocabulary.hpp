#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "xling/common.hpp"

namespace xling {

// A retained word or entity. Ids are dense and contiguous within each
// (language, kind) space, assigned in descending-count order with ties
// broken lexicographically by surface.
struct Symbol {
  std::int32_t id = -1;
  SymbolKind kind = SymbolKind::Word;
  std::string surface;
  std::int64_t count = 0;
};

// Interned words and entities of one language.
class Vocabulary {
 public:
  Vocabulary(LanguageId language, int min_count)
      : language_(std::move(language)), min_count_(min_count) {}

  const LanguageId& language() const { return language_; }
  int min_count() const { return min_count_; }

  std::int32_t size(SymbolKind kind) const {
    return static_cast<std::int32_t>(symbols_[slot(kind)].size());
  }
  std::int64_t total_symbols() const {
    return static_cast<std::int64_t>(symbols_[0].size() + symbols_[1].size());
  }

  const Symbol& symbol(SymbolKind kind, std::int32_t id) const {
    return symbols_[slot(kind)].at(static_cast<std::size_t>(id));
  }
  const std::vector<Symbol>& symbols(SymbolKind kind) const {
    return symbols_[slot(kind)];
  }

  std::optional<std::int32_t> lookup(std::string_view surface, SymbolKind kind) const;

  // Appends a symbol with the next free id in its kind space. The caller is
  // responsible for honoring the id-ordering contract; build_vocabulary and
  // the file loaders are the expected callers.
  std::int32_t add_symbol(SymbolKind kind, std::string surface, std::int64_t count);

  bool operator==(const Vocabulary& other) const;

  // Text format: `surface<TAB>kind<TAB>count`, words then entities, each
  // block sorted by id.
  void save(const std::filesystem::path& path) const;
  static Vocabulary load(const std::filesystem::path& path, LanguageId language,
                         int min_count = 1);

 private:
  static int slot(SymbolKind kind) { return static_cast<int>(kind); }

  LanguageId language_;
  int min_count_ = 1;
  std::array<std::vector<Symbol>, 2> symbols_;
  std::array<std::unordered_map<std::string, std::int32_t>, 2> index_;
};

// Exact-count vocabulary construction over corpus files (words from plain
// tokens and anchor word surfaces; entities from article headers and anchor
// references) plus optional entity-network edge files (one count per
// endpoint mention). Symbols with count < min_count are dropped.
// Throws DataError when nothing is retained.
Vocabulary build_vocabulary(const std::vector<std::filesystem::path>& corpus_paths,
                            const std::vector<std::filesystem::path>& network_paths,
                            LanguageId language, int min_count);

}  // namespace xling
