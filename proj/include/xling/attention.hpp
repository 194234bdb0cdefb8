#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "xling/comparable.hpp"
#include "xling/embedding.hpp"

namespace xling {

// Cosine over float vectors, accumulated in double; 0 when either side has
// zero norm.
double cosine(std::span<const float> a, std::span<const float> b);

// Per-sentence weights proportional to the shifted cosine between the
// subject entity vector and each sentence's word-vector sum. Raw cosines
// map through (x+1)/2 so the weights are valid mixing weights; the result
// sums to 1. Degenerate inputs (all shifted scores zero) fall back to
// uniform.
std::vector<double> knowledge_attention(
    std::span<const float> subject_vec,
    const std::vector<std::vector<std::int32_t>>& sentences,
    const EmbeddingTable& table, SymbolClass word_cls);

// Per-word weights from max cosine against the opposite side. Words whose
// best score falls below theta are discarded (weight 0); survivors are
// shifted by (x+1)/2 and normalized to sum 1 per side. A side whose words
// are all discarded falls back to uniform. Outputs mirror the nested
// sentence shape of each side.
struct CrossAttention {
  std::array<std::vector<std::vector<double>>, 2> weights;
};

CrossAttention cross_lingual_attention(
    const std::vector<std::vector<std::int32_t>>& side_a,
    const std::vector<std::vector<std::int32_t>>& side_b,
    const EmbeddingTable& table, SymbolClass word_cls_a, SymbolClass word_cls_b,
    double theta);

// Flat variant matching the raw-score definition; returns one weight per
// word position of each side.
std::array<std::vector<double>, 2> cross_lingual_attention_flat(
    std::span<const std::int32_t> side_a_words, std::span<const std::int32_t> side_b_words,
    const EmbeddingTable& table, SymbolClass word_cls_a, SymbolClass word_cls_b,
    double theta);

// Cached attentions for one comparable pair.
struct PairAttention {
  std::array<std::vector<double>, 2> psi;                     // per sentence
  std::array<std::vector<std::vector<double>>, 2> psi_word;   // per sentence, per word
};

// cross_active=false keeps psi' uniform per side (the bootstrap schedule
// before cross-lingual embeddings exist).
PairAttention compute_pair_attention(const ComparableSentencePair& pair,
                                     const EmbeddingTable& table, double theta,
                                     bool cross_active);

// s = sum_l psi_l * sum_{w in s_l} psi'_w * v_w, in double.
std::vector<double> sentence_embedding(
    const std::vector<std::vector<std::int32_t>>& sentences,
    const std::vector<double>& psi,
    const std::vector<std::vector<double>>& psi_word,
    const EmbeddingTable& table, SymbolClass word_cls);

}  // namespace xling
