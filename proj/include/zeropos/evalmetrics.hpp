#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "zeropos/corpus.hpp"

namespace zeropos {

struct TagScore {
  UposTag tag = UposTag::X;
  long tp = 0;
  long fp = 0;
  long fn = 0;
  double precision = 0.0;  // tp / (tp + fp), 0 on empty denominator
  double recall = 0.0;     // tp / (tp + fn), 0 on empty denominator
  double f1 = 0.0;         // 2PR / (P + R), 0 when P + R = 0

  long support() const { return tp + fn; }
};

struct MacroScores {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct EvalReport {
  std::vector<TagScore> per_tag;  // tags with support > 0, sorted
  MacroScores overall;            // unweighted means over per_tag
  long total_tokens = 0;
  long correct_tokens = 0;

  double micro_accuracy() const {
    return total_tokens == 0
               ? 0.0
               : static_cast<double>(correct_tokens) / total_tokens;
  }
};

// Token-level comparison; sentence counts, token counts, and forms must match
// pairwise (errors name the sentence index and position). Both sides must be
// fully tagged.
EvalReport evaluate(const std::vector<Sentence>& gold,
                    const std::vector<Sentence>& predicted);

// Unweighted arithmetic mean of each column; empty input is an error.
MacroScores macro_overall(const std::vector<TagScore>& per_tag);

// Fixed-width table with an Overall row, values rounded half-up to two
// decimals. Deterministic: identical reports render to identical bytes.
std::string render_table(const EvalReport& report);

// Full-precision key=value lines for downstream tooling.
std::string render_key_values(const EvalReport& report);

// Blank-line-separated "form<TAB>gold<TAB>pred" records, one token per line,
// converted to parallel gold/predicted corpora.
std::pair<std::vector<Sentence>, std::vector<Sentence>> parse_tagged_tsv(
    std::istream& in);

}  // namespace zeropos
