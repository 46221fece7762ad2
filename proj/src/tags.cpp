#include "zeropos/tags.hpp"

#include <array>

namespace zeropos {

namespace {

constexpr std::array<std::string_view, kNumUposTags> kUposNames = {
    "ADJ", "ADP",  "ADV",   "AUX",   "CCONJ", "DET", "INTJ", "NOUN", "NUM",
    "PART", "PRON", "PROPN", "PUNCT", "SCONJ", "SYM", "VERB", "X",
};

constexpr std::array<std::string_view, kNumPetrovTags> kPetrovNames = {
    "NOUN", "VERB", "ADJ", "ADV", "PRON", "DET",
    "ADP",  "NUM",  "CONJ", "PART", "X",  "PUNCT",
};

}  // namespace

std::string_view to_string(UposTag tag) {
  return kUposNames[static_cast<unsigned char>(tag)];
}

std::optional<UposTag> upos_from_string(std::string_view s) {
  for (int i = 0; i < kNumUposTags; ++i) {
    if (kUposNames[i] == s) return static_cast<UposTag>(i);
  }
  return std::nullopt;
}

std::string_view to_string(PetrovTag tag) {
  return kPetrovNames[static_cast<unsigned char>(tag)];
}

PetrovTag to_petrov(UposTag tag) {
  switch (tag) {
    case UposTag::ADJ: return PetrovTag::ADJ;
    case UposTag::ADP: return PetrovTag::ADP;
    case UposTag::ADV: return PetrovTag::ADV;
    case UposTag::AUX: return PetrovTag::VERB;
    case UposTag::CCONJ: return PetrovTag::CONJ;
    case UposTag::DET: return PetrovTag::DET;
    case UposTag::INTJ: return PetrovTag::X;
    case UposTag::NOUN: return PetrovTag::NOUN;
    case UposTag::NUM: return PetrovTag::NUM;
    case UposTag::PART: return PetrovTag::PART;
    case UposTag::PRON: return PetrovTag::PRON;
    case UposTag::PROPN: return PetrovTag::NOUN;
    case UposTag::PUNCT: return PetrovTag::PUNCT;
    case UposTag::SCONJ: return PetrovTag::CONJ;
    case UposTag::SYM: return PetrovTag::X;
    case UposTag::VERB: return PetrovTag::VERB;
    case UposTag::X: return PetrovTag::X;
  }
  return PetrovTag::X;  // unreachable
}

}  // namespace zeropos
