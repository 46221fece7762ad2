#pragma once

#include <optional>
#include <string_view>

namespace zeropos {

// Universal Dependencies POS inventory. Enum order is alphabetical, which
// doubles as the canonical state ordering everywhere in this project.
enum class UposTag : unsigned char {
  ADJ,
  ADP,
  ADV,
  AUX,
  CCONJ,
  DET,
  INTJ,
  NOUN,
  NUM,
  PART,
  PRON,
  PROPN,
  PUNCT,
  SCONJ,
  SYM,
  VERB,
  X,
};

inline constexpr int kNumUposTags = 17;

std::string_view to_string(UposTag tag);

// Returns nullopt for anything outside the 17-symbol inventory.
std::optional<UposTag> upos_from_string(std::string_view s);

// The 12-category coarse universal tagset.
enum class PetrovTag : unsigned char {
  NOUN,
  VERB,
  ADJ,
  ADV,
  PRON,
  DET,
  ADP,
  NUM,
  CONJ,
  PART,
  X,
  PUNCT,
};

inline constexpr int kNumPetrovTags = 12;

std::string_view to_string(PetrovTag tag);

// Total mapping from UPOS onto the coarse tagset: AUX->VERB, CCONJ/SCONJ->CONJ,
// PROPN->NOUN, INTJ/SYM->X, everything else keeps its name.
PetrovTag to_petrov(UposTag tag);

}  // namespace zeropos
