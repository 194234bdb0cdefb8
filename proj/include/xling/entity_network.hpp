#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xling/common.hpp"
#include "xling/vocabulary.hpp"

namespace xling {

// Undirected graph over one language's entity ids. Symmetric, no
// self-loops, neighbor lists kept sorted.
class EntityNetwork {
 public:
  EntityNetwork(LanguageId language, std::int32_t entity_count)
      : language_(std::move(language)), adjacency_(entity_count) {}

  const LanguageId& language() const { return language_; }
  std::int32_t entity_count() const {
    return static_cast<std::int32_t>(adjacency_.size());
  }
  std::int64_t edge_count() const { return edge_count_; }

  // False for self-loops and duplicates.
  bool add_edge(std::int32_t u, std::int32_t v);
  bool has_edge(std::int32_t u, std::int32_t v) const;

  const std::vector<std::int32_t>& neighbors(std::int32_t id) const {
    return adjacency_.at(static_cast<std::size_t>(id));
  }

  bool operator==(const EntityNetwork& other) const {
    return language_ == other.language_ && adjacency_ == other.adjacency_;
  }

 private:
  LanguageId language_;
  std::vector<std::vector<std::int32_t>> adjacency_;
  std::int64_t edge_count_ = 0;
};

struct NetworkLoadReport {
  std::int64_t skipped_unknown = 0;  // edges with an endpoint not in vocab
  std::int64_t self_loops = 0;
  std::int64_t duplicates = 0;
};

// Edge list, one edge per line: `entityA<TAB>entityB` (surfaces).
EntityNetwork load_entity_network(const std::filesystem::path& path,
                                  const Vocabulary& vocab,
                                  NetworkLoadReport* report = nullptr);
void save_entity_network(const EntityNetwork& network, const Vocabulary& vocab,
                         const std::filesystem::path& path);

// One-to-one inter-language entity links (language index 0 <-> 1).
class CrossLingualLinks {
 public:
  // False when either endpoint is already linked; first occurrence wins.
  bool add(std::int32_t a, std::int32_t b);

  const std::vector<std::pair<std::int32_t, std::int32_t>>& pairs() const {
    return pairs_;
  }
  std::optional<std::int32_t> partner(int lang, std::int32_t id) const;
  std::size_t size() const { return pairs_.size(); }

  bool operator==(const CrossLingualLinks& other) const {
    return pairs_ == other.pairs_;
  }

 private:
  std::vector<std::pair<std::int32_t, std::int32_t>> pairs_;
  std::array<std::unordered_map<std::int32_t, std::int32_t>, 2> partner_;
};

struct LinksLoadReport {
  std::int64_t skipped_unknown = 0;
  std::int64_t rejected_not_one_to_one = 0;
};

// One link per line: `entity_langA<TAB>entity_langB` (surfaces).
CrossLingualLinks load_links(const std::filesystem::path& path,
                             const Vocabulary& vocab_a, const Vocabulary& vocab_b,
                             LinksLoadReport* report = nullptr);
void save_links(const CrossLingualLinks& links, const Vocabulary& vocab_a,
                const Vocabulary& vocab_b, const std::filesystem::path& path);

}  // namespace xling
