#include "zeropos/evalmetrics.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace zeropos {

namespace {

double ratio(long num, long denom) {
  return denom == 0 ? 0.0 : static_cast<double>(num) / denom;
}

double f1_of(double p, double r) {
  return (p + r) == 0.0 ? 0.0 : 2.0 * p * r / (p + r);
}

// Half-up rounding to two decimals, independent of the libc rounding mode.
std::string format2(double v) {
  long cents = static_cast<long>(std::floor(v * 100.0 + 0.5));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%ld.%02ld", cents / 100, cents % 100);
  return buf;
}

UposTag require_tag(const Token& tok, const char* side, std::size_t sent,
                    std::size_t pos) {
  if (!tok.tag) {
    throw std::invalid_argument(std::string("untagged ") + side +
                                " token at sentence " + std::to_string(sent) +
                                ", position " + std::to_string(pos));
  }
  return *tok.tag;
}

}  // namespace

EvalReport evaluate(const std::vector<Sentence>& gold,
                    const std::vector<Sentence>& predicted) {
  if (gold.size() != predicted.size()) {
    throw std::invalid_argument(
        "sentence count mismatch: " + std::to_string(gold.size()) +
        " gold vs " + std::to_string(predicted.size()) + " predicted");
  }

  std::array<long, kNumUposTags> tp{}, fp{}, fn{};
  EvalReport report;
  for (std::size_t k = 0; k < gold.size(); ++k) {
    const auto& g = gold[k].tokens;
    const auto& p = predicted[k].tokens;
    if (g.size() != p.size()) {
      throw std::invalid_argument(
          "sentence " + std::to_string(k) + ": token count mismatch (" +
          std::to_string(g.size()) + " gold vs " + std::to_string(p.size()) +
          " predicted)");
    }
    for (std::size_t t = 0; t < g.size(); ++t) {
      if (g[t].form != p[t].form) {
        throw std::invalid_argument("sentence " + std::to_string(k) +
                                    ", position " + std::to_string(t) +
                                    ": form mismatch ('" + g[t].form +
                                    "' vs '" + p[t].form + "')");
      }
      UposTag gt = require_tag(g[t], "gold", k, t);
      UposTag pt = require_tag(p[t], "predicted", k, t);
      ++report.total_tokens;
      if (gt == pt) {
        ++tp[static_cast<int>(gt)];
        ++report.correct_tokens;
      } else {
        ++fn[static_cast<int>(gt)];
        ++fp[static_cast<int>(pt)];
      }
    }
  }

  for (int i = 0; i < kNumUposTags; ++i) {
    if (tp[i] + fn[i] == 0) continue;  // absent from gold: no row
    TagScore row;
    row.tag = static_cast<UposTag>(i);
    row.tp = tp[i];
    row.fp = fp[i];
    row.fn = fn[i];
    row.precision = ratio(row.tp, row.tp + row.fp);
    row.recall = ratio(row.tp, row.tp + row.fn);
    row.f1 = f1_of(row.precision, row.recall);
    report.per_tag.push_back(row);
  }
  report.overall = macro_overall(report.per_tag);
  return report;
}

MacroScores macro_overall(const std::vector<TagScore>& per_tag) {
  if (per_tag.empty()) {
    throw std::invalid_argument("macro average of an empty tag list");
  }
  MacroScores m;
  for (const TagScore& row : per_tag) {
    m.precision += row.precision;
    m.recall += row.recall;
    m.f1 += row.f1;
  }
  m.precision /= per_tag.size();
  m.recall /= per_tag.size();
  m.f1 /= per_tag.size();
  return m;
}

std::string render_table(const EvalReport& report) {
  std::ostringstream out;
  out << "# per-tag scores; zero denominators score 0; Overall is the "
         "unweighted macro average\n";
  char line[96];
  std::snprintf(line, sizeof(line), "%-8s%6s%6s%6s  %7s\n", "TAG", "P", "R",
                "F1", "SUPPORT");
  out << line;
  for (const TagScore& row : report.per_tag) {
    std::snprintf(line, sizeof(line), "%-8s%6s%6s%6s  %7ld\n",
                  std::string(to_string(row.tag)).c_str(),
                  format2(row.precision).c_str(), format2(row.recall).c_str(),
                  format2(row.f1).c_str(), row.support());
    out << line;
  }
  std::snprintf(line, sizeof(line), "%-8s%6s%6s%6s  %7ld\n", "Overall",
                format2(report.overall.precision).c_str(),
                format2(report.overall.recall).c_str(),
                format2(report.overall.f1).c_str(), report.total_tokens);
  out << line;
  std::snprintf(line, sizeof(line), "# micro-accuracy %s (%ld/%ld)\n",
                format2(report.micro_accuracy()).c_str(),
                report.correct_tokens, report.total_tokens);
  out << line;
  return out.str();
}

std::string render_key_values(const EvalReport& report) {
  std::ostringstream out;
  char buf[64];
  auto num = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (const TagScore& row : report.per_tag) {
    std::string tag(to_string(row.tag));
    out << tag << ".precision=" << num(row.precision) << '\n'
        << tag << ".recall=" << num(row.recall) << '\n'
        << tag << ".f1=" << num(row.f1) << '\n'
        << tag << ".support=" << row.support() << '\n';
  }
  out << "overall.precision=" << num(report.overall.precision) << '\n'
      << "overall.recall=" << num(report.overall.recall) << '\n'
      << "overall.f1=" << num(report.overall.f1) << '\n'
      << "micro.accuracy=" << num(report.micro_accuracy()) << '\n'
      << "tokens.total=" << report.total_tokens << '\n'
      << "tokens.correct=" << report.correct_tokens << '\n';
  return out.str();
}

std::pair<std::vector<Sentence>, std::vector<Sentence>> parse_tagged_tsv(
    std::istream& in) {
  std::vector<Sentence> gold, pred;
  Sentence g, p;
  std::string line;
  long line_no = 0;

  auto flush = [&] {
    if (!g.tokens.empty()) {
      gold.push_back(std::move(g));
      pred.push_back(std::move(p));
    }
    g = Sentence{};
    p = Sentence{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    std::size_t tab1 = line.find('\t');
    std::size_t tab2 = tab1 == std::string::npos ? std::string::npos
                                                 : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": expected form<TAB>gold<TAB>pred");
    }
    std::string form = line.substr(0, tab1);
    std::string gs = line.substr(tab1 + 1, tab2 - tab1 - 1);
    std::string ps = line.substr(tab2 + 1);
    if (form.empty()) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": empty form");
    }
    auto gt = upos_from_string(gs);
    auto pt = upos_from_string(ps);
    if (!gt || !pt) {
      throw std::runtime_error("line " + std::to_string(line_no) +
                               ": unknown tag '" + (gt ? ps : gs) + "'");
    }
    g.tokens.push_back(Token{form, *gt});
    p.tokens.push_back(Token{form, *pt});
  }
  flush();
  return {std::move(gold), std::move(pred)};
}

}  // namespace zeropos
