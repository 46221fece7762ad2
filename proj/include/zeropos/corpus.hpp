#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zeropos/tags.hpp"

namespace zeropos {

struct Token {
  std::string form;             // never empty, no internal tab/newline
  std::optional<UposTag> tag;   // absent for untagged / projection-pending tokens

  bool operator==(const Token&) const = default;
};

struct Sentence {
  std::string id;               // from "# sent_id = ..."; empty when absent
  std::vector<Token> tokens;    // length >= 1, order as in the source file

  bool operator==(const Sentence&) const = default;
};

// One line of parallel text: whitespace-tokenized source and target sides.
struct SentencePair {
  std::vector<std::string> source;
  std::vector<std::string> target;

  bool operator==(const SentencePair&) const = default;
};

// Reads 10-column CoNLL-U. Keeps FORM and UPOS of syntactic words, retains
// sent_id, skips multiword-token range lines (ID "1-2") and empty-node lines
// (ID "3.1"). "_" in the UPOS column yields an absent tag. In strict mode
// (default) an unknown UPOS value is an error; with lenient=true it maps to X.
// Blocks that contain no token line produce no Sentence.
std::vector<Sentence> parse_conllu(std::istream& in, bool lenient = false);
std::vector<Sentence> parse_conllu(const std::string& text, bool lenient = false);

// Emits 10-column lines with FORM and UPOS filled and "_" elsewhere, one
// blank line after each sentence. parse_conllu(write_conllu(x)) reproduces
// ids, forms, and tags exactly.
void write_conllu(const std::vector<Sentence>& sentences, std::ostream& out);
std::string write_conllu(const std::vector<Sentence>& sentences);

// One pair per line, sides separated by the literal " ||| ", tokens split on
// whitespace runs. A line without the separator or with an empty side is an
// error naming the line number.
std::vector<SentencePair> parse_bitext(std::istream& in);
std::vector<SentencePair> parse_bitext(const std::string& text);

void write_bitext(const std::vector<SentencePair>& pairs, std::ostream& out);
std::string write_bitext(const std::vector<SentencePair>& pairs);

}  // namespace zeropos
