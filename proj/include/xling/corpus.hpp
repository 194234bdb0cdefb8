#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "xling/common.hpp"
#include "xling/vocabulary.hpp"

namespace xling {

// A token position. Plain words carry only `word`; an anchor carries both;
// a token whose anchor word surface was pruned keeps only `entity`.
struct AnchoredToken {
  std::int32_t word = -1;
  std::int32_t entity = -1;

  bool is_anchor() const { return word >= 0 && entity >= 0; }
  bool operator==(const AnchoredToken&) const = default;
};

struct Article {
  std::int32_t subject_entity = -1;
  std::vector<std::vector<AnchoredToken>> sentences;
};

struct AnchoredCorpus {
  LanguageId language;
  std::vector<Article> articles;

  std::int64_t sentence_count() const;
  std::int64_t token_count() const;
};

struct CorpusLoadReport {
  std::int64_t dropped_words = 0;      // plain tokens with unknown surface
  std::int64_t degraded_anchors = 0;   // anchors whose entity is not in vocab
  std::int64_t dropped_articles = 0;   // articles whose subject is not in vocab
};

// Streaming scanner over the corpus text format. Structure:
//   #article <entity-surface>
//   one sentence per line, tokens space separated,
//   anchors written [[EntitySurface|word_surface]]
//   blank line ends the article
// Malformed lines raise ParseError with the line number.
struct RawToken {
  std::string word;    // empty when absent
  std::string entity;  // empty when absent
};

struct CorpusScanHandler {
  std::function<void(const std::string& subject_surface)> on_article;
  std::function<void(const std::vector<RawToken>& tokens)> on_sentence;
};

void scan_corpus_file(const std::filesystem::path& path, const CorpusScanHandler& handler);

// Resolves a corpus file against a finalized vocabulary. Unknown word
// surfaces are dropped; anchors to unknown entities degrade to plain word
// tokens; articles with unknown subjects are dropped. Counts go to
// `report` when given.
AnchoredCorpus load_corpus(const std::filesystem::path& path, LanguageId language,
                           const Vocabulary& vocab, CorpusLoadReport* report = nullptr);

}  // namespace xling
