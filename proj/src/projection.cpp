#include "zeropos/projection.hpp"

#include <sstream>
#include <stdexcept>

namespace zeropos {

std::string ProjectionSummary::to_string() const {
  std::ostringstream out;
  out << "sentences: " << sentences_kept << " kept of " << sentences_in
      << " (" << (sentences_in - sentences_kept) << " emptied)\n"
      << "tokens: " << tokens_kept << " kept of " << tokens_in << " ("
      << tokens_dropped << " dropped as untagged)\n"
      << "collisions resolved: " << collisions << '\n'
      << "single-token gaps merged: " << gaps_merged << '\n';
  return out.str();
}

ProjectedSentence project(const Sentence& source,
                          const std::vector<std::string>& target_forms,
                          const Alignment& alignment) {
  int n = static_cast<int>(source.tokens.size());
  int m = static_cast<int>(target_forms.size());
  for (int i = 0; i < n; ++i) {
    if (!source.tokens[i].tag) {
      throw std::invalid_argument("untagged source token at index " +
                                  std::to_string(i));
    }
  }

  // Bucket links by target position; set order keeps each bucket sorted by
  // source index.
  std::vector<std::vector<int>> by_target(m);
  for (const AlignmentLink& l : alignment.links) {
    if (l.src < 0 || l.src >= n || l.tgt < 0 || l.tgt >= m) {
      throw std::invalid_argument("alignment link " + std::to_string(l.src) +
                                  "-" + std::to_string(l.tgt) +
                                  " out of range");
    }
    by_target[l.tgt].push_back(l.src);
  }

  ProjectedSentence out;
  out.tokens.reserve(m);
  out.provenance.resize(m);
  for (int j = 0; j < m; ++j) {
    Token tok;
    tok.form = target_forms[j];
    if (!by_target[j].empty()) {
      UposTag first = *source.tokens[by_target[j].front()].tag;
      tok.tag = first;
      for (int i : by_target[j]) {
        if (*source.tokens[i].tag != first) {
          ++out.collisions;
          break;
        }
      }
      out.provenance[j] = std::move(by_target[j]);
    }
    out.tokens.push_back(std::move(tok));
  }
  return out;
}

ProjectedSentence merge_gaps(const ProjectedSentence& p) {
  ProjectedSentence out = p;
  int m = static_cast<int>(p.tokens.size());
  for (int j = 1; j + 1 < m; ++j) {
    if (p.tokens[j].tag) continue;
    const auto& left = p.tokens[j - 1].tag;
    const auto& right = p.tokens[j + 1].tag;
    if (left && right && *left == *right) out.tokens[j].tag = *left;
  }
  return out;
}

Sentence drop_untagged(const ProjectedSentence& p) {
  Sentence out;
  for (const Token& tok : p.tokens) {
    if (tok.tag) out.tokens.push_back(tok);
  }
  return out;
}

std::vector<Sentence> project_corpus(const std::vector<Sentence>& tagged_source,
                                     const std::vector<SentencePair>& bitext,
                                     const std::vector<Alignment>& alignments,
                                     ProjectionSummary* summary) {
  if (tagged_source.size() != bitext.size() ||
      bitext.size() != alignments.size()) {
    throw std::invalid_argument(
        "corpus size mismatch: " + std::to_string(tagged_source.size()) +
        " tagged sentences, " + std::to_string(bitext.size()) +
        " bitext pairs, " + std::to_string(alignments.size()) + " alignments");
  }

  ProjectionSummary stats;
  std::vector<Sentence> out;
  for (std::size_t k = 0; k < tagged_source.size(); ++k) {
    const Sentence& src = tagged_source[k];
    const SentencePair& pair = bitext[k];
    if (pair.source.size() != src.tokens.size()) {
      throw std::invalid_argument("sentence " + std::to_string(k) +
                                  ": bitext source side has " +
                                  std::to_string(pair.source.size()) +
                                  " tokens, tagged source has " +
                                  std::to_string(src.tokens.size()));
    }
    for (std::size_t i = 0; i < pair.source.size(); ++i) {
      if (pair.source[i] != src.tokens[i].form) {
        throw std::invalid_argument(
            "sentence " + std::to_string(k) + ": source form mismatch at " +
            "token " + std::to_string(i) + " ('" + pair.source[i] + "' vs '" +
            src.tokens[i].form + "')");
      }
    }

    ProjectedSentence projected = project(src, pair.target, alignments[k]);
    ProjectedSentence merged = merge_gaps(projected);
    for (std::size_t j = 0; j < merged.tokens.size(); ++j) {
      if (merged.tokens[j].tag && !projected.tokens[j].tag) ++stats.gaps_merged;
    }
    stats.collisions += projected.collisions;

    Sentence kept = drop_untagged(merged);
    stats.sentences_in += 1;
    stats.tokens_in += static_cast<long>(merged.tokens.size());
    stats.tokens_kept += static_cast<long>(kept.tokens.size());
    stats.tokens_dropped +=
        static_cast<long>(merged.tokens.size() - kept.tokens.size());
    if (kept.tokens.empty()) continue;
    kept.id = src.id;
    stats.sentences_kept += 1;
    out.push_back(std::move(kept));
  }
  if (summary) *summary = stats;
  return out;
}

}  // namespace zeropos
