#include "zeropos/corpus.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace zeropos {

namespace {

[[noreturn]] void parse_fail(long line_no, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line_no) + ": " + what);
}

void split_tabs(const std::string& line, std::vector<std::string>& fields) {
  fields.clear();
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      return;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void strip_cr(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

constexpr std::string_view kSentIdPrefix = "# sent_id = ";

}  // namespace

std::vector<Sentence> parse_conllu(std::istream& in, bool lenient) {
  std::vector<Sentence> sentences;
  Sentence current;
  std::string line;
  std::vector<std::string> fields;
  long line_no = 0;

  auto flush = [&] {
    if (!current.tokens.empty()) sentences.push_back(std::move(current));
    current = Sentence{};
  };

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    if (line.empty()) {
      flush();
      continue;
    }
    if (line[0] == '#') {
      if (line.compare(0, kSentIdPrefix.size(), kSentIdPrefix) == 0) {
        current.id = line.substr(kSentIdPrefix.size());
      }
      continue;
    }
    split_tabs(line, fields);
    if (fields.size() != 10) {
      parse_fail(line_no, "expected 10 tab-separated fields, got " +
                              std::to_string(fields.size()));
    }
    const std::string& id = fields[0];
    if (id.find('-') != std::string::npos) continue;  // multiword range line
    if (id.find('.') != std::string::npos) continue;  // empty node
    if (!all_digits(id)) parse_fail(line_no, "bad token id '" + id + "'");
    if (fields[1].empty()) parse_fail(line_no, "empty FORM");

    Token tok;
    tok.form = fields[1];
    const std::string& upos = fields[3];
    if (upos != "_") {
      auto tag = upos_from_string(upos);
      if (tag) {
        tok.tag = *tag;
      } else if (lenient) {
        tok.tag = UposTag::X;
      } else {
        parse_fail(line_no, "unknown UPOS '" + upos + "'");
      }
    }
    current.tokens.push_back(std::move(tok));
  }
  flush();
  return sentences;
}

std::vector<Sentence> parse_conllu(const std::string& text, bool lenient) {
  std::istringstream in(text);
  return parse_conllu(in, lenient);
}

void write_conllu(const std::vector<Sentence>& sentences, std::ostream& out) {
  for (const Sentence& sent : sentences) {
    if (!sent.id.empty()) out << "# sent_id = " << sent.id << '\n';
    for (std::size_t i = 0; i < sent.tokens.size(); ++i) {
      const Token& tok = sent.tokens[i];
      out << (i + 1) << '\t' << tok.form << "\t_\t"
          << (tok.tag ? to_string(*tok.tag) : "_")
          << "\t_\t_\t_\t_\t_\t_\n";
    }
    out << '\n';
  }
}

std::string write_conllu(const std::vector<Sentence>& sentences) {
  std::ostringstream out;
  write_conllu(sentences, out);
  return out.str();
}

std::vector<SentencePair> parse_bitext(std::istream& in) {
  static constexpr std::string_view kSep = " ||| ";
  std::vector<SentencePair> pairs;
  std::string line;
  long line_no = 0;

  auto tokenize = [](std::string_view text, std::vector<std::string>& out) {
    out.clear();
    std::size_t i = 0;
    while (i < text.size()) {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t start = i;
      while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i > start) out.emplace_back(text.substr(start, i - start));
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    strip_cr(line);
    std::size_t sep = line.find(kSep);
    if (sep == std::string::npos) {
      parse_fail(line_no, "missing ' ||| ' separator");
    }
    SentencePair pair;
    tokenize(std::string_view(line).substr(0, sep), pair.source);
    tokenize(std::string_view(line).substr(sep + kSep.size()), pair.target);
    if (pair.source.empty()) parse_fail(line_no, "empty source side");
    if (pair.target.empty()) parse_fail(line_no, "empty target side");
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

std::vector<SentencePair> parse_bitext(const std::string& text) {
  std::istringstream in(text);
  return parse_bitext(in);
}

void write_bitext(const std::vector<SentencePair>& pairs, std::ostream& out) {
  for (const SentencePair& pair : pairs) {
    for (std::size_t i = 0; i < pair.source.size(); ++i) {
      if (i) out << ' ';
      out << pair.source[i];
    }
    out << " |||";
    for (const std::string& w : pair.target) out << ' ' << w;
    out << '\n';
  }
}

std::string write_bitext(const std::vector<SentencePair>& pairs) {
  std::ostringstream out;
  write_bitext(pairs, out);
  return out.str();
}

}  // namespace zeropos
