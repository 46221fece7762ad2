#include "zeropos/aligner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zeropos {

double TranslationTable::prob(int src_id, int tgt_id) const {
  if (src_id < 0 || src_id >= static_cast<int>(rows.size())) return 0.0;
  auto it = rows[src_id].find(tgt_id);
  return it == rows[src_id].end() ? 0.0 : it->second;
}

double TranslationTable::prob(std::string_view src_word,
                              std::string_view tgt_word) const {
  int s = source_vocab.find(src_word);
  int t = target_vocab.find(tgt_word);
  if (s < 0 || t < 0) return 0.0;
  return prob(s, t);
}

namespace {

void validate_params(const DiagonalParams& params) {
  if (params.lambda < 0.0) throw std::invalid_argument("lambda must be >= 0");
  if (params.null_prob < 0.0 || params.null_prob >= 1.0) {
    throw std::invalid_argument("null_prob must be in [0, 1)");
  }
}

// Link prior over {NULL} + source positions for one target position. For the
// diagonal variant the non-NULL mass follows exp(-lambda |i/n - j/m|) with
// 1-based position ratios, renormalized over the source side.
void link_priors(AlignerVariant variant, const DiagonalParams& params, int n,
                 int j, int m, std::vector<double>& out) {
  out.assign(n + 1, 0.0);
  out[0] = params.null_prob;
  double rest = 1.0 - params.null_prob;
  if (variant == AlignerVariant::IBM1) {
    for (int i = 0; i < n; ++i) out[i + 1] = rest / n;
    return;
  }
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    double d = std::fabs(static_cast<double>(i + 1) / n -
                         static_cast<double>(j + 1) / m);
    out[i + 1] = std::exp(-params.lambda * d);
    z += out[i + 1];
  }
  for (int i = 0; i < n; ++i) out[i + 1] *= rest / z;
}

std::vector<std::vector<int>> intern_side(
    const std::vector<SentencePair>& pairs, bool source, Vocab& vocab) {
  std::vector<std::vector<int>> ids(pairs.size());
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto& words = source ? pairs[k].source : pairs[k].target;
    ids[k].reserve(words.size());
    for (const std::string& w : words) ids[k].push_back(vocab.add(w));
  }
  return ids;
}

}  // namespace

AlignModel train_aligner(const std::vector<SentencePair>& pairs,
                         AlignerVariant variant, int iterations,
                         DiagonalParams params) {
  if (pairs.empty()) throw std::invalid_argument("empty training corpus");
  if (iterations < 1) throw std::invalid_argument("iterations must be >= 1");
  validate_params(params);

  AlignModel model;
  model.variant = variant;
  model.params = params;
  TranslationTable& table = model.table;

  std::vector<std::vector<int>> src_ids =
      intern_side(pairs, true, table.source_vocab);
  std::vector<std::vector<int>> tgt_ids =
      intern_side(pairs, false, table.target_vocab);

  // Uniform init over co-occurring pairs; NULL co-occurs with every target word.
  table.rows.assign(table.source_vocab.size(), {});
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    for (int f : tgt_ids[k]) {
      table.rows[TranslationTable::kNullId].emplace(f, 0.0);
      for (int e : src_ids[k]) table.rows[e].emplace(f, 0.0);
    }
  }
  for (auto& row : table.rows) {
    if (row.empty()) continue;
    double u = 1.0 / static_cast<double>(row.size());
    for (auto& [f, p] : row) p = u;
  }

  std::vector<std::unordered_map<int, double>> counts(table.rows.size());
  std::vector<double> priors;
  for (int iter = 0; iter < iterations; ++iter) {
    for (auto& c : counts) c.clear();
    double ll = 0.0;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const std::vector<int>& src = src_ids[k];
      const std::vector<int>& tgt = tgt_ids[k];
      int n = static_cast<int>(src.size());
      int m = static_cast<int>(tgt.size());
      for (int j = 0; j < m; ++j) {
        link_priors(variant, params, n, j, m, priors);
        int f = tgt[j];
        double z = priors[0] * table.rows[TranslationTable::kNullId].at(f);
        for (int i = 0; i < n; ++i) z += priors[i + 1] * table.rows[src[i]].at(f);
        ll += std::log(z);
        counts[TranslationTable::kNullId][f] +=
            priors[0] * table.rows[TranslationTable::kNullId].at(f) / z;
        for (int i = 0; i < n; ++i) {
          counts[src[i]][f] += priors[i + 1] * table.rows[src[i]].at(f) / z;
        }
      }
    }
    model.ll_history.push_back(ll);

    for (std::size_t e = 0; e < counts.size(); ++e) {
      double sum = 0.0;
      for (const auto& [f, c] : counts[e]) sum += c;
      if (sum <= 0.0) continue;  // p0 = 0 leaves the NULL row untouched
      for (const auto& [f, c] : counts[e]) table.rows[e][f] = c / sum;
    }
  }
  return model;
}

Alignment decode(const AlignModel& model, const SentencePair& pair) {
  const TranslationTable& table = model.table;
  int n = static_cast<int>(pair.source.size());
  int m = static_cast<int>(pair.target.size());

  std::vector<int> src(n);
  for (int i = 0; i < n; ++i) src[i] = table.source_vocab.find(pair.source[i]);

  Alignment result;
  std::vector<double> priors;
  for (int j = 0; j < m; ++j) {
    int f = table.target_vocab.find(pair.target[j]);
    link_priors(model.variant, model.params, n, j, m, priors);
    auto floored = [&](int src_id) {
      double t = (f < 0) ? 0.0 : table.prob(src_id, f);
      return t > kProbFloor ? t : kProbFloor;
    };
    // NULL first: an exact tie keeps the token unaligned.
    double best = priors[0] * floored(TranslationTable::kNullId);
    int best_i = -1;
    for (int i = 0; i < n; ++i) {
      double score = priors[i + 1] * floored(src[i]);
      if (score > best) {
        best = score;
        best_i = i;
      }
    }
    if (best_i >= 0) result.links.insert(AlignmentLink{best_i, j});
  }
  return result;
}

namespace {

Alignment transpose(const Alignment& a) {
  Alignment out;
  for (const AlignmentLink& l : a.links) {
    out.links.insert(AlignmentLink{l.tgt, l.src});
  }
  return out;
}

Alignment grow_diag_final_and(const Alignment& fwd, const Alignment& rev_t) {
  Alignment inter;
  std::set_intersection(fwd.links.begin(), fwd.links.end(), rev_t.links.begin(),
                        rev_t.links.end(),
                        std::inserter(inter.links, inter.links.begin()));
  Alignment uni;
  std::set_union(fwd.links.begin(), fwd.links.end(), rev_t.links.begin(),
                 rev_t.links.end(),
                 std::inserter(uni.links, uni.links.begin()));

  int max_src = 0, max_tgt = 0;
  for (const AlignmentLink& l : uni.links) {
    max_src = std::max(max_src, l.src);
    max_tgt = std::max(max_tgt, l.tgt);
  }
  std::vector<char> src_cov(max_src + 1, 0), tgt_cov(max_tgt + 1, 0);

  Alignment out = inter;
  for (const AlignmentLink& l : out.links) {
    src_cov[l.src] = 1;
    tgt_cov[l.tgt] = 1;
  }

  // Grow from the intersection toward union candidates adjacent to a current
  // link, adding a point only while both its row and its column are still
  // uncovered. Points are examined in (src, tgt) order, neighbors in the
  // fixed order below, until a fixpoint.
  static constexpr int kNeighbors[8][2] = {{-1, 0}, {0, -1}, {1, 0},  {0, 1},
                                           {-1, -1}, {-1, 1}, {1, -1}, {1, 1}};
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<AlignmentLink> snapshot(out.links.begin(), out.links.end());
    for (const AlignmentLink& l : snapshot) {
      for (const auto& d : kNeighbors) {
        AlignmentLink cand{l.src + d[0], l.tgt + d[1]};
        if (cand.src < 0 || cand.tgt < 0) continue;
        if (!uni.links.count(cand) || out.links.count(cand)) continue;
        if (src_cov[cand.src] || tgt_cov[cand.tgt]) continue;
        out.links.insert(cand);
        src_cov[cand.src] = 1;
        tgt_cov[cand.tgt] = 1;
        changed = true;
      }
    }
  }

  // Final step: sweep remaining directional links (forward first), still
  // requiring both endpoints uncovered.
  for (const Alignment* dir : {&fwd, &rev_t}) {
    for (const AlignmentLink& l : dir->links) {
      if (src_cov[l.src] || tgt_cov[l.tgt]) continue;
      out.links.insert(l);
      src_cov[l.src] = 1;
      tgt_cov[l.tgt] = 1;
    }
  }
  return out;
}

}  // namespace

Alignment symmetrize(const Alignment& forward, const Alignment& reverse,
                     SymHeuristic heuristic) {
  Alignment rev_t = transpose(reverse);
  Alignment out;
  switch (heuristic) {
    case SymHeuristic::INTERSECTION:
      std::set_intersection(forward.links.begin(), forward.links.end(),
                            rev_t.links.begin(), rev_t.links.end(),
                            std::inserter(out.links, out.links.begin()));
      return out;
    case SymHeuristic::UNION:
      std::set_union(forward.links.begin(), forward.links.end(),
                     rev_t.links.begin(), rev_t.links.end(),
                     std::inserter(out.links, out.links.begin()));
      return out;
    case SymHeuristic::GROW_DIAG_FINAL_AND:
      return grow_diag_final_and(forward, rev_t);
  }
  throw std::logic_error("unknown symmetrization heuristic");
}

Alignment parse_pharaoh(const std::string& line) {
  Alignment out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i == start) break;
    std::string_view tok(line.data() + start, i - start);
    std::size_t dash = tok.find('-');
    if (dash == std::string_view::npos) {
      throw std::runtime_error("bad alignment token '" + std::string(tok) +
                               "': missing '-'");
    }
    auto parse_int = [&](std::string_view s) {
      if (s.empty()) {
        throw std::runtime_error("bad alignment token '" + std::string(tok) +
                                 "'");
      }
      int value = 0;
      for (char c : s) {
        if (c < '0' || c > '9') {
          throw std::runtime_error("bad alignment token '" + std::string(tok) +
                                   "': not an index");
        }
        value = value * 10 + (c - '0');
      }
      return value;
    };
    out.links.insert(AlignmentLink{parse_int(tok.substr(0, dash)),
                                   parse_int(tok.substr(dash + 1))});
  }
  return out;
}

std::string write_pharaoh(const Alignment& alignment) {
  std::string out;
  for (const AlignmentLink& l : alignment.links) {  // set order = (src, tgt)
    if (!out.empty()) out += ' ';
    out += std::to_string(l.src);
    out += '-';
    out += std::to_string(l.tgt);
  }
  return out;
}

double corpus_log_likelihood(const AlignModel& model,
                             const std::vector<SentencePair>& pairs) {
  const TranslationTable& table = model.table;
  double ll = 0.0;
  std::vector<double> priors;
  for (const SentencePair& pair : pairs) {
    int n = static_cast<int>(pair.source.size());
    int m = static_cast<int>(pair.target.size());
    std::vector<int> src(n);
    for (int i = 0; i < n; ++i) {
      src[i] = table.source_vocab.find(pair.source[i]);
    }
    for (int j = 0; j < m; ++j) {
      int f = table.target_vocab.find(pair.target[j]);
      link_priors(model.variant, model.params, n, j, m, priors);
      auto floored = [&](int src_id) {
        double t = (f < 0) ? 0.0 : table.prob(src_id, f);
        return t > kProbFloor ? t : kProbFloor;
      };
      double z = priors[0] * floored(TranslationTable::kNullId);
      for (int i = 0; i < n; ++i) z += priors[i + 1] * floored(src[i]);
      ll += std::log(z);
    }
  }
  return ll;
}

}  // namespace zeropos
