#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "zeropos/corpus.hpp"
#include "zeropos/vocab.hpp"

namespace zeropos {

struct DecodingConfig {
  // Additive smoothing for transition rows; 0 reproduces the strict MLE model.
  double transition_alpha = 1e-6;
};

// First-order HMM stored as integer counts. Probabilities are derived on
// demand, so serialization round-trips exactly and smoothing stays a
// decode-time choice.
struct HmmModel {
  std::vector<UposTag> states;  // distinct tags seen in training, sorted
  Vocab vocab;                  // word forms seen in training

  std::vector<std::uint64_t> initial_counts;     // by state
  std::vector<std::uint64_t> transition_counts;  // N*N row-major
  std::vector<std::unordered_map<int, std::uint64_t>> emission_counts;
  std::vector<std::uint64_t> state_freq;         // f(q) = total occurrences

  int num_states() const { return static_cast<int>(states.size()); }
  int state_index(UposTag tag) const;  // -1 when absent

  std::uint64_t transition_count(int q, int r) const {
    return transition_counts[static_cast<std::size_t>(q) * states.size() + r];
  }
  std::uint64_t emission_count(int q, int word_id) const;
  std::uint64_t total_sentences() const;

  double initial_prob(int q) const;
  double transition_prob(int q, int r, double alpha) const;

  // The emission rule: known words get their MLE ratio (possibly 0), unknown
  // words get 1/f(q), and f(q) = 0 gives 0 either way.
  double emission_prob(int q, std::string_view word) const;

  bool operator==(const HmmModel& other) const;
};

// Maximum-likelihood counting over a fully tagged corpus.
HmmModel train_hmm(const std::vector<Sentence>& corpus);

// Max-product decoding in log space over initial, smoothed transition, and
// emission scores. If a position's emission column is all zero the column
// falls back to the unknown-word rule, so decoding always returns a sequence.
// Tie-breaks go to the lowest state index (final state and backpointers).
std::vector<UposTag> viterbi(const HmmModel& model,
                             const std::vector<std::string>& words,
                             const DecodingConfig& config = {});

// Exhaustive test oracle: enumerates every tag sequence, scores it with the
// same log-probability terms in the same order, and applies the tie-break
// Viterbi backtracking induces (the sequence whose reverse is lexicographically
// smallest among maxima). Errors out when N^T exceeds 10^7.
std::vector<UposTag> brute_force_decode(const HmmModel& model,
                                        const std::vector<std::string>& words,
                                        const DecodingConfig& config = {});

// Line-oriented count file, bit-exact round trip:
//   HMM-COUNTS v1 / STATES / INIT / TRANS / EMIT sections, tab-separated.
void save_model(const HmmModel& model, std::ostream& out);
std::string save_model(const HmmModel& model);
HmmModel load_model(std::istream& in);
HmmModel load_model(const std::string& text);

}  // namespace zeropos
