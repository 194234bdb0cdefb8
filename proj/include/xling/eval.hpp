#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "xling/common.hpp"
#include "xling/embedding.hpp"

namespace xling {

struct ScoredSymbol {
  std::int32_t id = -1;
  double score = 0.0;
};

// Top-k symbols of the filter class by cosine to the query vector, query
// itself excluded. Ties break toward the lower id. vocab_limit > 0
// restricts candidates to ids below it (most frequent first).
std::vector<ScoredSymbol> nearest_neighbors(const EmbeddingModel& model,
                                            SymbolRef query, SymbolClass filter,
                                            int k, std::int32_t vocab_limit = 0);

struct BilingualLexicon {
  struct Entry {
    std::string source;
    std::vector<std::string> targets;
  };
  std::vector<Entry> entries;
};

// `source<TAB>target1|target2|...`
BilingualLexicon load_lexicon(const std::filesystem::path& path);

struct TranslationEntryResult {
  std::string source;
  bool resolvable = false;
  bool hit = false;
  std::string best_target;  // top-ranked target word
};

struct TranslationReport {
  int k = 1;
  std::int64_t resolvable = 0;
  std::int64_t unresolvable = 0;
  std::int64_t hits = 0;
  double precision = 0.0;
  std::vector<TranslationEntryResult> entries;
};

// Precision@k of lexicon entries: a hit when any acceptable target appears
// in the source's top-k target-language word neighbors. Entries whose
// source or every target is out of vocabulary are skipped and counted.
// Throws DataError when nothing is resolvable.
TranslationReport word_translation_precision(const BilingualLexicon& lexicon,
                                             const EmbeddingModel& model, int k,
                                             int source_lang, int target_lang,
                                             std::int32_t vocab_limit = 0);

// Binary-gain NDCG with log2(i+1) discount, ideal ranking truncated at k;
// 0 when the ranking has no positives.
double ndcg_at_k(std::span<const int> labels, int k);

// Mean over positive ranks r of precision-at-r. Throws DataError when no
// positive is present.
double average_precision(std::span<const int> labels);
double mean_average_precision(const std::vector<std::vector<int>>& rankings);

struct RelatednessGold {
  struct Query {
    std::string query;
    std::vector<std::pair<std::string, int>> candidates;
  };
  std::vector<Query> queries;
};

// `query<TAB>candidate<TAB>label` lines grouped by query.
RelatednessGold load_relatedness_gold(const std::filesystem::path& path);

struct RelatednessQueryResult {
  std::string query;
  std::vector<double> ndcg;  // aligned with the requested ks
  double ap = 0.0;
  bool has_positive = false;
};

struct RelatednessReport {
  std::vector<int> ks;
  std::vector<double> ndcg;  // means over evaluated queries
  double map = 0.0;
  std::int64_t evaluated_queries = 0;
  std::int64_t skipped_queries = 0;       // query or all candidates unresolvable
  std::int64_t zero_positive_queries = 0; // excluded from MAP
  std::int64_t dropped_candidates = 0;
  std::vector<RelatednessQueryResult> per_query;
};

// Candidates ranked by cosine to the query entity (ties toward lower id),
// metrics averaged over evaluated queries.
RelatednessReport entity_relatedness_eval(const RelatednessGold& gold,
                                          const EmbeddingModel& model,
                                          const std::vector<int>& ks, int lang);

}  // namespace xling
