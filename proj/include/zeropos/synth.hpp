#pragma once

#include <cstdint>
#include <vector>

#include "zeropos/corpus.hpp"

namespace zeropos {

struct SynthCorpus {
  std::vector<Sentence> source;       // tagged source sentences
  std::vector<SentencePair> bitext;   // source ||| word-for-word cipher
  std::vector<Sentence> target_gold;  // cipher forms with the source tags
};

// Samples sentences from a small probabilistic grammar over a 40-word lexicon
// in which every word has exactly one tag. The target side is a deterministic
// word-for-word cipher, so the true alignment is the identity and the gold
// target tags equal the source tags. Identical seeds give identical corpora.
SynthCorpus synth_corpus(std::uint64_t seed, int n_sentences);

}  // namespace zeropos
