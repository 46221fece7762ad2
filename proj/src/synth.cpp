#include "zeropos/synth.hpp"

#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace zeropos {

namespace {

struct LexEntry {
  const char* word;
  UposTag tag;
  const char* cipher;
};

// 40 words, each with exactly one tag. The cipher column is an arbitrary but
// fixed bijection; punctuation maps to itself.
constexpr LexEntry kLexicon[] = {
    {"the", UposTag::DET, "fa"},        {"a", UposTag::DET, "lun"},
    {"this", UposTag::DET, "zeto"},     {"cat", UposTag::NOUN, "miro"},
    {"dog", UposTag::NOUN, "pek"},      {"bird", UposTag::NOUN, "savi"},
    {"house", UposTag::NOUN, "tolda"},  {"tree", UposTag::NOUN, "brin"},
    {"river", UposTag::NOUN, "kasu"},   {"stone", UposTag::NOUN, "drem"},
    {"child", UposTag::NOUN, "nilo"},   {"mira", UposTag::PROPN, "vekka"},
    {"tomas", UposTag::PROPN, "rulo"},  {"big", UposTag::ADJ, "gorzu"},
    {"small", UposTag::ADJ, "pilmi"},   {"red", UposTag::ADJ, "ruska"},
    {"old", UposTag::ADJ, "venta"},     {"quiet", UposTag::ADJ, "solem"},
    {"sees", UposTag::VERB, "varku"},   {"likes", UposTag::VERB, "melto"},
    {"finds", UposTag::VERB, "dorpa"},  {"chases", UposTag::VERB, "kivre"},
    {"carries", UposTag::VERB, "bantu"},{"will", UposTag::AUX, "zam"},
    {"can", UposTag::AUX, "rik"},       {"quickly", UposTag::ADV, "frela"},
    {"slowly", UposTag::ADV, "mondru"}, {"in", UposTag::ADP, "pa"},
    {"on", UposTag::ADP, "ke"},         {"near", UposTag::ADP, "tilva"},
    {"under", UposTag::ADP, "brusk"},   {"she", UposTag::PRON, "eyya"},
    {"he", UposTag::PRON, "ollo"},      {"it", UposTag::PRON, "itti"},
    {"two", UposTag::NUM, "dua"},       {"three", UposTag::NUM, "tris"},
    {"seven", UposTag::NUM, "sep"},     {"and", UposTag::CCONJ, "og"},
    {".", UposTag::PUNCT, "."},         {"!", UposTag::PUNCT, "!"},
};

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {
    for (std::size_t i = 0; i < std::size(kLexicon); ++i) {
      by_tag_[kLexicon[i].tag].push_back(static_cast<int>(i));
    }
  }

  // Uniform in [0, n); raw engine output only, so results do not depend on
  // the standard library's distribution implementations.
  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool chance(double p) {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p;
  }
  int word_of(UposTag tag) {
    const auto& pool = by_tag_.at(tag);
    return pool[below(pool.size())];
  }

 private:
  std::mt19937_64 rng_;
  std::unordered_map<UposTag, std::vector<int>> by_tag_;
};

void emit(std::vector<int>& sentence, int lex_index) {
  sentence.push_back(lex_index);
}

void gen_np(Sampler& s, std::vector<int>& out) {
  switch (s.below(10)) {
    case 0: case 1: case 2: case 3: case 4:  // DET (ADJ)? NOUN
      emit(out, s.word_of(UposTag::DET));
      if (s.chance(0.4)) emit(out, s.word_of(UposTag::ADJ));
      emit(out, s.word_of(UposTag::NOUN));
      break;
    case 5: case 6:
      emit(out, s.word_of(UposTag::PROPN));
      break;
    case 7: case 8:
      emit(out, s.word_of(UposTag::PRON));
      break;
    default:  // NUM NOUN
      emit(out, s.word_of(UposTag::NUM));
      emit(out, s.word_of(UposTag::NOUN));
      break;
  }
}

void gen_vp(Sampler& s, std::vector<int>& out) {
  if (s.chance(0.25)) emit(out, s.word_of(UposTag::AUX));
  if (s.chance(0.3)) emit(out, s.word_of(UposTag::ADV));
  emit(out, s.word_of(UposTag::VERB));
  gen_np(s, out);
  if (s.chance(0.35)) {  // PP
    emit(out, s.word_of(UposTag::ADP));
    gen_np(s, out);
  }
}

std::vector<int> gen_sentence(Sampler& s) {
  std::vector<int> out;
  gen_np(s, out);
  gen_vp(s, out);
  if (s.chance(0.2)) {
    emit(out, s.word_of(UposTag::CCONJ));
    gen_np(s, out);
    gen_vp(s, out);
  }
  emit(out, s.word_of(UposTag::PUNCT));
  return out;
}

}  // namespace

SynthCorpus synth_corpus(std::uint64_t seed, int n_sentences) {
  if (n_sentences < 1) {
    throw std::invalid_argument("need at least one sentence");
  }

  Sampler sampler(seed);
  SynthCorpus corpus;
  corpus.source.reserve(n_sentences);
  corpus.bitext.reserve(n_sentences);
  corpus.target_gold.reserve(n_sentences);

  for (int k = 0; k < n_sentences; ++k) {
    std::vector<int> ids = gen_sentence(sampler);
    Sentence src, tgt;
    src.id = "synth-" + std::to_string(k + 1);
    tgt.id = src.id;
    SentencePair pair;
    for (int id : ids) {
      const LexEntry& entry = kLexicon[id];
      src.tokens.push_back(Token{entry.word, entry.tag});
      tgt.tokens.push_back(Token{entry.cipher, entry.tag});
      pair.source.emplace_back(entry.word);
      pair.target.emplace_back(entry.cipher);
    }
    corpus.source.push_back(std::move(src));
    corpus.target_gold.push_back(std::move(tgt));
    corpus.bitext.push_back(std::move(pair));
  }
  return corpus;
}

}  // namespace zeropos
