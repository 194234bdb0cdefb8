#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <vector>

#include "xling/common.hpp"
#include "xling/entity_network.hpp"
#include "xling/vocabulary.hpp"

namespace xling {

// Union of two mono-lingual entity networks plus the cross-lingual edges
// added by neighbor enrichment. Mono and cross adjacency are kept apart:
// mono edges stay within one language, every cross edge connects an entity
// of language 0 with one of language 1.
class BilingualEntityNetwork {
 public:
  BilingualEntityNetwork(std::array<LanguageId, 2> languages,
                         std::array<std::int32_t, 2> entity_counts);

  const std::array<LanguageId, 2>& languages() const { return languages_; }
  std::int32_t entity_count(int lang) const {
    return static_cast<std::int32_t>(mono_[lang].size());
  }
  std::int64_t mono_edge_count() const { return mono_edges_; }
  std::int64_t cross_edge_count() const { return cross_edges_; }

  bool add_mono_edge(int lang, std::int32_t u, std::int32_t v);
  // `u` lives in `lang`, `v` in the other language.
  bool add_cross_edge(int lang, std::int32_t u, std::int32_t v);

  const std::vector<std::int32_t>& mono_neighbors(int lang, std::int32_t id) const {
    return mono_[lang].at(static_cast<std::size_t>(id));
  }
  // Neighbor ids are in the other language's id space.
  const std::vector<std::int32_t>& cross_neighbors(int lang, std::int32_t id) const {
    return cross_[lang].at(static_cast<std::size_t>(id));
  }

  bool has_mono_edge(int lang, std::int32_t u, std::int32_t v) const;
  bool has_cross_edge(int lang, std::int32_t u, std::int32_t v) const;

  bool operator==(const BilingualEntityNetwork& other) const {
    return languages_ == other.languages_ && mono_ == other.mono_ &&
           cross_ == other.cross_;
  }

 private:
  std::array<LanguageId, 2> languages_;
  std::array<std::vector<std::vector<std::int32_t>>, 2> mono_;
  std::array<std::vector<std::vector<std::int32_t>>, 2> cross_;
  std::int64_t mono_edges_ = 0;
  std::int64_t cross_edges_ = 0;
};

struct EnrichReport {
  std::int64_t skipped_links = 0;  // link endpoint outside the entity space
};

// Enrichment over cross-lingual links: for every link <e_a, e_b>, each
// mono-lingual neighbor of e_a gains a cross edge to e_b and vice versa.
// Only original mono-lingual neighborhoods feed the rule; no direct edge
// between link partners is added.
BilingualEntityNetwork build_bilingual_en(const EntityNetwork& g_a,
                                          const EntityNetwork& g_b,
                                          const CrossLingualLinks& links,
                                          EnrichReport* report = nullptr);

// Edge-list format with a third column `mono|cross`. Mono blocks are
// preceded by `# lang <code>` comment lines so surfaces shared by both
// languages stay unambiguous; cross edges are written (lang0, lang1).
void save_bilingual_network(const BilingualEntityNetwork& network,
                            const Vocabulary& vocab_a, const Vocabulary& vocab_b,
                            const std::filesystem::path& path);
BilingualEntityNetwork load_bilingual_network(const std::filesystem::path& path,
                                              const Vocabulary& vocab_a,
                                              const Vocabulary& vocab_b);

}  // namespace xling
