#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "xling/attention.hpp"
#include "xling/bilingual_network.hpp"
#include "xling/comparable.hpp"
#include "xling/config.hpp"
#include "xling/corpus.hpp"
#include "xling/embedding.hpp"
#include "xling/sampler.hpp"

namespace xling {

enum class ExampleKind : std::uint8_t {
  TextSkipgram = 0,
  AnchorSkipgram = 1,
  MonoGraph = 2,
  CrossGraph = 3,
  SentencePair = 4,
};
constexpr int kNumExampleKinds = 5;
std::string_view example_kind_name(ExampleKind kind);

struct TrainingExample {
  ExampleKind kind;
  std::uint8_t center_cls = 0;   // class index; unused for SentencePair
  std::uint8_t context_cls = 0;
  std::int32_t center = -1;      // pair index for SentencePair
  std::int32_t context = -1;
};

struct TrainInputs {
  const Vocabulary* vocab_a = nullptr;
  const Vocabulary* vocab_b = nullptr;
  const AnchoredCorpus* corpus_a = nullptr;
  const AnchoredCorpus* corpus_b = nullptr;
  const BilingualEntityNetwork* network = nullptr;           // optional
  const std::vector<ComparableSentencePair>* pairs = nullptr;  // optional
};

// One epoch's shuffled example stream: text and anchor skip-gram pairs
// under a per-center window drawn uniformly from 1..window (fixed at
// `window` when dynamic_window is false), every graph edge in both
// directions, and one SentencePair per comparable pair.
std::vector<TrainingExample> enumerate_examples(const TrainInputs& inputs,
                                                const TrainingConfig& config,
                                                std::uint64_t epoch_seed,
                                                bool dynamic_window = true);

// One negative-sampling step on (center input, context output) with the
// given negatives from the context's class; returns the sampled objective
// -log σ(v_ctx·v_c) - Σ log σ(-v_neg·v_c) evaluated before the update.
double skipgram_step(EmbeddingTable& table, SymbolRef center, SymbolRef context,
                     std::span<const std::int32_t> negatives, double alpha);

// Draws config-many negatives from the context's class (draws equal to the
// context are skipped) and applies skipgram_step.
double skipgram_update(EmbeddingTable& table, SymbolRef center, SymbolRef context,
                       const NegativeSampler& sampler, Rng& rng, int negatives,
                       double alpha);

// Gradient step on gamma * ||s_a - s_b||^2 with frozen attentions; updates
// the input vectors of participating words only. Returns the weighted
// squared distance before the update.
double sentence_pair_update(EmbeddingTable& table, const ComparableSentencePair& pair,
                            const PairAttention& attention, double gamma, double alpha);

struct EpochKindStats {
  int epoch = 0;
  ExampleKind kind = ExampleKind::TextSkipgram;
  std::int64_t count = 0;
  double mean_loss = 0.0;
};

// Worst deviations seen across every attention refresh of a run.
struct AttentionAudit {
  std::int64_t refreshes = 0;
  double max_psi_sum_error = 0.0;      // |sum psi - 1| per sentence group
  double max_psi_word_sum_error = 0.0; // |sum psi' - 1| per side
  double min_weight = 1.0;
};

struct TrainResult {
  EmbeddingTable table;
  std::vector<EpochKindStats> trace;
  AttentionAudit audit;
};

// Joint negative-sampling SGD over the mixed example stream. Linear
// learning-rate decay over the total scheduled examples; pair attentions
// recomputed every config.attention_refresh examples (or each epoch
// boundary when 0), with cross-lingual attention active from the second
// epoch. Deterministic at threads=1.
TrainResult train(const TrainInputs& inputs, const TrainingConfig& config);

// Loss trace CSV: epoch,kind,count,mean_loss.
void save_loss_trace(const std::vector<EpochKindStats>& trace,
                     const std::filesystem::path& path);

}  // namespace xling
