#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "xling/common.hpp"
#include "xling/corpus.hpp"
#include "xling/entity_network.hpp"

namespace xling {

// Distant-supervision evidence group: sentences from the subject link's
// articles that mention the object link, per language. Sentences are word
// id lists (anchor words included as words).
struct ComparableSentencePair {
  std::array<std::int32_t, 2> subject{-1, -1};  // entity id per language
  std::array<std::int32_t, 2> object{-1, -1};
  std::array<std::vector<std::vector<std::int32_t>>, 2> sides;

  bool operator==(const ComparableSentencePair&) const = default;
};

struct PairGenOptions {
  int max_sentences_per_side = 8;  // longest sentences kept first
  int min_sentence_len = 3;        // in words
};

// Emits one pair per (subject link, object link) combination, subject !=
// object, where both languages contribute at least one qualifying
// sentence. Output sorted by (subject id in language 0, object id in
// language 0).
std::vector<ComparableSentencePair> generate_comparable_sentences(
    const AnchoredCorpus& corpus_a, const AnchoredCorpus& corpus_b,
    const CrossLingualLinks& links, const PairGenOptions& options = {});

struct PairStatistics {
  std::int64_t pair_count = 0;
  std::array<double, 2> mean_sentences_per_side{0.0, 0.0};
  std::array<double, 2> mean_sentence_length{0.0, 0.0};
  // Per-pair word-count difference (side 0 minus side 1), bucketed.
  std::map<std::string, std::int64_t> imbalance_histogram;
};

PairStatistics pair_statistics(const std::vector<ComparableSentencePair>& pairs);

// Pairs file: `#pair` header with the four entity surfaces (tab separated),
// then `A<TAB>words...` / `B<TAB>words...` lines, blank-line terminated.
void save_pairs(const std::vector<ComparableSentencePair>& pairs,
                const Vocabulary& vocab_a, const Vocabulary& vocab_b,
                const std::filesystem::path& path);

struct PairsLoadReport {
  std::int64_t skipped_pairs = 0;    // unresolvable header entities
  std::int64_t dropped_words = 0;    // unknown word surfaces
};

std::vector<ComparableSentencePair> load_pairs(const std::filesystem::path& path,
                                               const Vocabulary& vocab_a,
                                               const Vocabulary& vocab_b,
                                               PairsLoadReport* report = nullptr);

}  // namespace xling
