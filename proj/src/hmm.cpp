#include "zeropos/hmm.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace zeropos {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr std::string_view kModelHeader = "HMM-COUNTS v1";

double log_or_neg_inf(double p) { return p > 0.0 ? std::log(p) : kNegInf; }

}  // namespace

int HmmModel::state_index(UposTag tag) const {
  auto it = std::lower_bound(states.begin(), states.end(), tag);
  if (it == states.end() || *it != tag) return -1;
  return static_cast<int>(it - states.begin());
}

std::uint64_t HmmModel::emission_count(int q, int word_id) const {
  auto it = emission_counts[q].find(word_id);
  return it == emission_counts[q].end() ? 0 : it->second;
}

std::uint64_t HmmModel::total_sentences() const {
  std::uint64_t total = 0;
  for (std::uint64_t c : initial_counts) total += c;
  return total;
}

double HmmModel::initial_prob(int q) const {
  std::uint64_t total = total_sentences();
  if (total == 0) return 0.0;
  return static_cast<double>(initial_counts[q]) / static_cast<double>(total);
}

double HmmModel::transition_prob(int q, int r, double alpha) const {
  double row_sum = 0.0;
  for (int s = 0; s < num_states(); ++s) {
    row_sum += static_cast<double>(transition_count(q, s));
  }
  double denom = row_sum + alpha * num_states();
  if (denom <= 0.0) return 0.0;
  return (static_cast<double>(transition_count(q, r)) + alpha) / denom;
}

double HmmModel::emission_prob(int q, std::string_view word) const {
  if (q < 0 || q >= num_states()) {
    throw std::invalid_argument("unknown state index " + std::to_string(q));
  }
  if (state_freq[q] == 0) return 0.0;
  double freq = static_cast<double>(state_freq[q]);
  int word_id = vocab.find(word);
  if (word_id < 0) return 1.0 / freq;  // out-of-vocabulary smoothing
  return static_cast<double>(emission_count(q, word_id)) / freq;
}

bool HmmModel::operator==(const HmmModel& other) const {
  if (states != other.states || initial_counts != other.initial_counts ||
      transition_counts != other.transition_counts ||
      state_freq != other.state_freq) {
    return false;
  }
  // Vocab ids may differ in order; compare emissions keyed by word string.
  auto canonical = [](const HmmModel& m) {
    std::map<std::pair<int, std::string>, std::uint64_t> flat;
    for (int q = 0; q < m.num_states(); ++q) {
      for (const auto& [w, c] : m.emission_counts[q]) {
        flat[{q, m.vocab.word(w)}] = c;
      }
    }
    return flat;
  };
  return canonical(*this) == canonical(other);
}

HmmModel train_hmm(const std::vector<Sentence>& corpus) {
  if (corpus.empty()) throw std::invalid_argument("empty training corpus");

  std::set<UposTag> seen;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    for (std::size_t t = 0; t < corpus[k].tokens.size(); ++t) {
      if (!corpus[k].tokens[t].tag) {
        throw std::invalid_argument("untagged token at sentence " +
                                    std::to_string(k) + ", position " +
                                    std::to_string(t));
      }
      seen.insert(*corpus[k].tokens[t].tag);
    }
  }

  HmmModel model;
  model.states.assign(seen.begin(), seen.end());
  int n = model.num_states();
  model.initial_counts.assign(n, 0);
  model.transition_counts.assign(static_cast<std::size_t>(n) * n, 0);
  model.emission_counts.assign(n, {});
  model.state_freq.assign(n, 0);

  for (const Sentence& sent : corpus) {
    int prev = -1;
    for (const Token& tok : sent.tokens) {
      int q = model.state_index(*tok.tag);
      int w = model.vocab.add(tok.form);
      if (prev < 0) {
        ++model.initial_counts[q];
      } else {
        ++model.transition_counts[static_cast<std::size_t>(prev) * n + q];
      }
      ++model.emission_counts[q][w];
      ++model.state_freq[q];
      prev = q;
    }
  }
  return model;
}

namespace {

// Emission scores per position with the all-zero-column fallback applied.
// Shared by viterbi and the brute-force oracle so both optimize the same
// function.
std::vector<std::vector<double>> log_emission_columns(
    const HmmModel& model, const std::vector<std::string>& words) {
  int n = model.num_states();
  std::vector<std::vector<double>> cols(words.size(),
                                        std::vector<double>(n, kNegInf));
  for (std::size_t t = 0; t < words.size(); ++t) {
    bool any = false;
    for (int q = 0; q < n; ++q) {
      double p = model.emission_prob(q, words[t]);
      if (p > 0.0) any = true;
      cols[t][q] = log_or_neg_inf(p);
    }
    if (!any) {
      for (int q = 0; q < n; ++q) {
        double p = model.state_freq[q] > 0
                       ? 1.0 / static_cast<double>(model.state_freq[q])
                       : 0.0;
        cols[t][q] = log_or_neg_inf(p);
      }
    }
  }
  return cols;
}

struct LogParams {
  std::vector<double> initial;      // by state
  std::vector<double> transition;   // N*N row-major
};

LogParams log_params(const HmmModel& model, const DecodingConfig& config) {
  int n = model.num_states();
  LogParams p;
  p.initial.resize(n);
  p.transition.resize(static_cast<std::size_t>(n) * n);
  for (int q = 0; q < n; ++q) {
    p.initial[q] = log_or_neg_inf(model.initial_prob(q));
    for (int r = 0; r < n; ++r) {
      p.transition[static_cast<std::size_t>(q) * n + r] =
          log_or_neg_inf(model.transition_prob(q, r, config.transition_alpha));
    }
  }
  return p;
}

void check_decodable(const HmmModel& model,
                     const std::vector<std::string>& words) {
  if (words.empty()) throw std::invalid_argument("empty word sequence");
  if (model.num_states() == 0) throw std::invalid_argument("model has no states");
}

}  // namespace

std::vector<UposTag> viterbi(const HmmModel& model,
                             const std::vector<std::string>& words,
                             const DecodingConfig& config) {
  check_decodable(model, words);
  int n = model.num_states();
  std::size_t len = words.size();
  auto cols = log_emission_columns(model, words);
  LogParams params = log_params(model, config);

  std::vector<double> score(n), next(n);
  std::vector<std::vector<int>> backptr(len, std::vector<int>(n, 0));
  for (int q = 0; q < n; ++q) score[q] = params.initial[q] + cols[0][q];

  for (std::size_t t = 1; t < len; ++t) {
    for (int r = 0; r < n; ++r) {
      int best_q = 0;
      double best = score[0] + params.transition[r];  // q = 0
      for (int q = 1; q < n; ++q) {
        double cand =
            score[q] + params.transition[static_cast<std::size_t>(q) * n + r];
        if (cand > best) {
          best = cand;
          best_q = q;
        }
      }
      backptr[t][r] = best_q;
      next[r] = best + cols[t][r];
    }
    score.swap(next);
  }

  int best_final = 0;
  for (int q = 1; q < n; ++q) {
    if (score[q] > score[best_final]) best_final = q;
  }

  std::vector<UposTag> path(len);
  int q = best_final;
  for (std::size_t t = len; t-- > 0;) {
    path[t] = model.states[q];
    if (t > 0) q = backptr[t][q];
  }
  return path;
}

std::vector<UposTag> brute_force_decode(const HmmModel& model,
                                        const std::vector<std::string>& words,
                                        const DecodingConfig& config) {
  check_decodable(model, words);
  int n = model.num_states();
  std::size_t len = words.size();

  double space = std::pow(static_cast<double>(n), static_cast<double>(len));
  if (space > 1e7) {
    throw std::invalid_argument("search space " + std::to_string(space) +
                                " exceeds the 1e7 enumeration limit");
  }

  auto cols = log_emission_columns(model, words);
  LogParams params = log_params(model, config);

  // Among equal scores keep the sequence whose reverse reads smallest; that is
  // the path Viterbi's lowest-index final-state and backpointer rule selects.
  auto reversed_less = [](const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t t = a.size(); t-- > 0;) {
      if (a[t] != b[t]) return a[t] < b[t];
    }
    return false;
  };

  std::vector<int> current(len, 0);
  std::vector<int> best_seq;
  double best = kNegInf;
  bool have_best = false;
  while (true) {
    double score = params.initial[current[0]] + cols[0][current[0]];
    for (std::size_t t = 1; t < len; ++t) {
      score += params.transition[static_cast<std::size_t>(current[t - 1]) * n +
                                 current[t]];
      score += cols[t][current[t]];
    }
    if (!have_best || score > best ||
        (score == best && reversed_less(current, best_seq))) {
      best = score;
      best_seq = current;
      have_best = true;
    }
    // odometer increment
    std::size_t t = len;
    while (t-- > 0) {
      if (++current[t] < n) break;
      current[t] = 0;
      if (t == 0) {
        std::vector<UposTag> path(len);
        for (std::size_t i = 0; i < len; ++i) path[i] = model.states[best_seq[i]];
        return path;
      }
    }
  }
}

void save_model(const HmmModel& model, std::ostream& out) {
  out << kModelHeader << '\n';
  out << "STATES\n";
  for (UposTag q : model.states) out << to_string(q) << '\n';
  out << "INIT\n";
  for (int q = 0; q < model.num_states(); ++q) {
    if (model.initial_counts[q] > 0) {
      out << to_string(model.states[q]) << '\t' << model.initial_counts[q]
          << '\n';
    }
  }
  out << "TRANS\n";
  for (int q = 0; q < model.num_states(); ++q) {
    for (int r = 0; r < model.num_states(); ++r) {
      if (model.transition_count(q, r) > 0) {
        out << to_string(model.states[q]) << '\t' << to_string(model.states[r])
            << '\t' << model.transition_count(q, r) << '\n';
      }
    }
  }
  out << "EMIT\n";
  for (int q = 0; q < model.num_states(); ++q) {
    std::map<std::string, std::uint64_t> sorted;
    for (const auto& [w, c] : model.emission_counts[q]) {
      sorted[model.vocab.word(w)] = c;
    }
    for (const auto& [w, c] : sorted) {
      out << to_string(model.states[q]) << '\t' << w << '\t' << c << '\n';
    }
  }
}

std::string save_model(const HmmModel& model) {
  std::ostringstream out;
  save_model(model, out);
  return out.str();
}

namespace {

[[noreturn]] void load_fail(long line_no, const std::string& what) {
  throw std::runtime_error("model line " + std::to_string(line_no) + ": " +
                           what);
}

std::uint64_t parse_count(const std::string& s, long line_no) {
  if (s.empty()) load_fail(line_no, "empty count");
  std::uint64_t value = 0;
  for (char c : s) {
    if (c < '0' || c > '9') load_fail(line_no, "bad count '" + s + "'");
    value = value * 10 + static_cast<std::uint64_t>(c - '0');
  }
  if (value == 0) load_fail(line_no, "zero count record");
  return value;
}

}  // namespace

HmmModel load_model(std::istream& in) {
  std::string line;
  long line_no = 0;
  auto next_line = [&](std::string& out) {
    if (!std::getline(in, out)) return false;
    ++line_no;
    if (!out.empty() && out.back() == '\r') out.pop_back();
    return true;
  };

  if (!next_line(line) || line != kModelHeader) {
    throw std::runtime_error("model line 1: expected header '" +
                             std::string(kModelHeader) + "'");
  }
  if (!next_line(line) || line != "STATES") {
    load_fail(line_no, "expected STATES section");
  }

  HmmModel model;
  while (next_line(line) && line != "INIT") {
    auto tag = upos_from_string(line);
    if (!tag) load_fail(line_no, "unknown state '" + line + "'");
    if (!model.states.empty() && *model.states.rbegin() >= *tag) {
      load_fail(line_no, "states out of order or duplicated");
    }
    model.states.push_back(*tag);
  }
  if (line != "INIT") load_fail(line_no, "missing INIT section");
  if (model.states.empty()) load_fail(line_no, "no states");

  int n = model.num_states();
  model.initial_counts.assign(n, 0);
  model.transition_counts.assign(static_cast<std::size_t>(n) * n, 0);
  model.emission_counts.assign(n, {});
  model.state_freq.assign(n, 0);

  auto split = [&](const std::string& s, int expected) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      std::size_t tab = s.find('\t', start);
      if (tab == std::string::npos) {
        fields.push_back(s.substr(start));
        break;
      }
      fields.push_back(s.substr(start, tab - start));
      start = tab + 1;
    }
    if (static_cast<int>(fields.size()) != expected) {
      load_fail(line_no, "expected " + std::to_string(expected) +
                             " tab-separated fields");
    }
    return fields;
  };
  auto state_of = [&](const std::string& s) {
    auto tag = upos_from_string(s);
    int q = tag ? model.state_index(*tag) : -1;
    if (q < 0) load_fail(line_no, "unknown state '" + s + "'");
    return q;
  };

  while (next_line(line) && line != "TRANS") {
    auto fields = split(line, 2);
    int q = state_of(fields[0]);
    if (model.initial_counts[q] != 0) {
      load_fail(line_no, "duplicate INIT record");
    }
    model.initial_counts[q] = parse_count(fields[1], line_no);
  }
  if (line != "TRANS") load_fail(line_no, "missing TRANS section");

  while (next_line(line) && line != "EMIT") {
    auto fields = split(line, 3);
    int q = state_of(fields[0]);
    int r = state_of(fields[1]);
    auto& cell = model.transition_counts[static_cast<std::size_t>(q) * n + r];
    if (cell != 0) load_fail(line_no, "duplicate TRANS record");
    cell = parse_count(fields[2], line_no);
  }
  if (line != "EMIT") load_fail(line_no, "missing EMIT section");

  while (next_line(line)) {
    if (line.empty()) load_fail(line_no, "blank line in EMIT section");
    auto fields = split(line, 3);
    int q = state_of(fields[0]);
    if (fields[1].empty()) load_fail(line_no, "empty word form");
    int w = model.vocab.add(fields[1]);
    auto [it, inserted] = model.emission_counts[q].emplace(w, 0);
    if (!inserted) load_fail(line_no, "duplicate EMIT record");
    it->second = parse_count(fields[2], line_no);
    model.state_freq[q] += it->second;
  }

  // Count-flow invariants: every occurrence of a state is either sentence
  // initial or entered by a transition, and leaves by a transition unless
  // sentence final.
  for (int q = 0; q < n; ++q) {
    std::uint64_t inflow = model.initial_counts[q];
    std::uint64_t outflow = 0;
    for (int p = 0; p < n; ++p) inflow += model.transition_count(p, q);
    for (int r = 0; r < n; ++r) outflow += model.transition_count(q, r);
    if (inflow != model.state_freq[q]) {
      throw std::runtime_error(
          "model invariant violated: state " +
          std::string(to_string(model.states[q])) + " has " +
          std::to_string(inflow) + " entries but " +
          std::to_string(model.state_freq[q]) + " emissions");
    }
    if (outflow > model.state_freq[q]) {
      throw std::runtime_error("model invariant violated: state " +
                               std::string(to_string(model.states[q])) +
                               " has more outgoing transitions than occurrences");
    }
  }
  if (model.total_sentences() == 0) {
    throw std::runtime_error(
        "model invariant violated: no sentence-initial counts");
  }
  return model;
}

HmmModel load_model(const std::string& text) {
  std::istringstream in(text);
  return load_model(in);
}

}  // namespace zeropos
