#pragma once

#include <compare>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "zeropos/corpus.hpp"
#include "zeropos/vocab.hpp"

namespace zeropos {

struct AlignmentLink {
  int src = 0;  // 0-based source token index
  int tgt = 0;  // 0-based target token index

  auto operator<=>(const AlignmentLink&) const = default;
};

// Link set for one sentence pair. Target tokens with no link are NULL-aligned.
struct Alignment {
  std::set<AlignmentLink> links;

  bool contains(int src, int tgt) const {
    return links.count(AlignmentLink{src, tgt}) > 0;
  }
  bool operator==(const Alignment&) const = default;
};

// Lexical translation probabilities t(target word | source word), sparse over
// co-occurring pairs. Source id 0 is the distinguished NULL word.
class TranslationTable {
 public:
  static constexpr int kNullId = 0;
  static constexpr const char* kNullWord = "<NULL>";

  Vocab source_vocab;  // id 0 = kNullWord
  Vocab target_vocab;
  std::vector<std::unordered_map<int, double>> rows;  // by source id

  TranslationTable() { source_vocab.add(kNullWord); }

  // 0 when the pair was never seen
  double prob(int src_id, int tgt_id) const;
  double prob(std::string_view src_word, std::string_view tgt_word) const;
};

struct DiagonalParams {
  double lambda = 4.0;    // diagonal tension, >= 0
  double null_prob = 0.08;  // p0 in [0, 1)
};

enum class AlignerVariant {
  IBM1,       // uniform link prior
  DIAG_IBM2,  // diagonal-prior model: prior(i,j) ~ exp(-lambda |i/n - j/m|)
};

struct AlignModel {
  AlignerVariant variant = AlignerVariant::DIAG_IBM2;
  DiagonalParams params;
  TranslationTable table;
  // Corpus log-likelihood under the table at the start of each EM iteration;
  // non-decreasing by EM.
  std::vector<double> ll_history;
};

// Probability floor for unseen events, keeps log() finite in diagnostics.
inline constexpr double kProbFloor = 1e-12;

// EM training of t(f|e) with the link prior fixed per variant. The table is
// initialized uniform over co-occurring pairs; every iteration collects
// expected counts and renormalizes each source row.
AlignModel train_aligner(const std::vector<SentencePair>& pairs,
                         AlignerVariant variant, int iterations,
                         DiagonalParams params = {});

// Per target token, argmax over {NULL, source tokens} of prior * t; NULL
// yields no link. Ties between source tokens go to the smallest index; a tie
// with NULL keeps the token unaligned.
Alignment decode(const AlignModel& model, const SentencePair& pair);

enum class SymHeuristic {
  INTERSECTION,
  UNION,
  GROW_DIAG_FINAL_AND,
};

// Combines a forward alignment with a reverse one (the reverse side's links
// are transposed here before combination).
Alignment symmetrize(const Alignment& forward, const Alignment& reverse,
                     SymHeuristic heuristic);

// Pharaoh format: space-separated "i-j" tokens, 0-based, source first.
Alignment parse_pharaoh(const std::string& line);
std::string write_pharaoh(const Alignment& alignment);

// Sum over pairs of log p(target side | source side), floored at kProbFloor
// for unseen events.
double corpus_log_likelihood(const AlignModel& model,
                             const std::vector<SentencePair>& pairs);

}  // namespace zeropos
