#pragma once

#include <string>
#include <vector>

#include "zeropos/aligner.hpp"
#include "zeropos/corpus.hpp"

namespace zeropos {

// Target-side sentence with tags carried over from the source. Token forms are
// the target side verbatim; provenance lists, per position, the source indices
// whose links contributed tag candidates (empty for unlinked positions and for
// gap-filled tags).
struct ProjectedSentence {
  std::vector<Token> tokens;
  std::vector<std::vector<int>> provenance;
  int collisions = 0;  // positions whose candidates disagreed
};

struct ProjectionSummary {
  long sentences_in = 0;
  long sentences_kept = 0;
  long tokens_in = 0;
  long tokens_kept = 0;
  long tokens_dropped = 0;
  long collisions = 0;
  long gaps_merged = 0;

  std::string to_string() const;
};

// Copies tags through alignment links. Candidates for a target position are
// the tags of its linked source tokens in source-index order; when they
// disagree the smallest source index wins. Unlinked positions stay untagged.
// Every source token must be tagged and every link in range.
ProjectedSentence project(const Sentence& source,
                          const std::vector<std::string>& target_forms,
                          const Alignment& alignment);

// Fills a single untagged token whose left and right neighbors carry the same
// tag. Gaps of length >= 2 and sentence-edge tokens are left alone.
ProjectedSentence merge_gaps(const ProjectedSentence& p);

// Keeps the tagged subsequence, original order preserved. May return a
// sentence with no tokens; callers discard those.
Sentence drop_untagged(const ProjectedSentence& p);

// project + merge_gaps + drop_untagged over a corpus; sentences that end up
// empty are omitted. The three lists must have equal length and the bitext
// source sides must match the tagged source forms exactly.
std::vector<Sentence> project_corpus(const std::vector<Sentence>& tagged_source,
                                     const std::vector<SentencePair>& bitext,
                                     const std::vector<Alignment>& alignments,
                                     ProjectionSummary* summary = nullptr);

}  // namespace zeropos
