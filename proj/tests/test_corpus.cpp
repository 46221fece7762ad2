#include <doctest.h>

#include <sstream>

#include "zeropos/corpus.hpp"
#include "zeropos/synth.hpp"

using namespace zeropos;

TEST_CASE("parse_conllu: empty input yields no sentences") {
  CHECK(parse_conllu(std::string{}).empty());
  CHECK(parse_conllu(std::string{"\n\n\n"}).empty());
}

TEST_CASE("parse_conllu: basic block with sent_id and untagged token") {
  std::string text =
      "# sent_id = fr-1\n"
      "# text = le chat dort\n"
      "1\tle\tle\tDET\t_\t_\t_\t_\t_\t_\n"
      "2\tchat\tchat\tNOUN\t_\t_\t_\t_\t_\t_\n"
      "3\tdort\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "\n";
  auto sentences = parse_conllu(text);
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].id == "fr-1");
  REQUIRE(sentences[0].tokens.size() == 3);
  CHECK(sentences[0].tokens[0].form == "le");
  CHECK(sentences[0].tokens[0].tag == UposTag::DET);
  CHECK(sentences[0].tokens[1].tag == UposTag::NOUN);
  CHECK(sentences[0].tokens[2].form == "dort");
  CHECK_FALSE(sentences[0].tokens[2].tag.has_value());
}

TEST_CASE("parse_conllu: multiword range line is skipped, words kept") {
  // "du" is annotated as the two syntactic words "de" + "le".
  std::string text =
      "1-2\tdu\t_\t_\t_\t_\t_\t_\t_\t_\n"
      "1\tde\tde\tADP\t_\t_\t_\t_\t_\t_\n"
      "2\tle\tle\tDET\t_\t_\t_\t_\t_\t_\n"
      "\n";
  auto sentences = parse_conllu(text);
  REQUIRE(sentences.size() == 1);
  REQUIRE(sentences[0].tokens.size() == 2);
  CHECK(sentences[0].tokens[0].form == "de");
  CHECK(sentences[0].tokens[0].tag == UposTag::ADP);
  CHECK(sentences[0].tokens[1].form == "le");
  CHECK(sentences[0].tokens[1].tag == UposTag::DET);
}

TEST_CASE("parse_conllu: empty-node lines are skipped") {
  std::string text =
      "1\tsam\t_\tPROPN\t_\t_\t_\t_\t_\t_\n"
      "1.1\tghost\t_\tVERB\t_\t_\t_\t_\t_\t_\n"
      "2\truns\t_\tVERB\t_\t_\t_\t_\t_\t_\n"
      "\n";
  auto sentences = parse_conllu(text);
  REQUIRE(sentences.size() == 1);
  REQUIRE(sentences[0].tokens.size() == 2);
  CHECK(sentences[0].tokens[0].form == "sam");
  CHECK(sentences[0].tokens[1].form == "runs");
}

TEST_CASE("parse_conllu: malformed token line reports the line number") {
  std::string text =
      "# sent_id = x\n"
      "1\tonly\tfour\tfields\n";
  CHECK_THROWS_WITH_AS(parse_conllu(text),
                       doctest::Contains("line 2"), std::runtime_error);
}

TEST_CASE("parse_conllu: unknown UPOS is strict by default, X when lenient") {
  std::string text = "1\tword\t_\tBOGUS\t_\t_\t_\t_\t_\t_\n\n";
  CHECK_THROWS_WITH_AS(parse_conllu(text), doctest::Contains("BOGUS"),
                       std::runtime_error);
  auto sentences = parse_conllu(text, /*lenient=*/true);
  REQUIRE(sentences.size() == 1);
  CHECK(sentences[0].tokens[0].tag == UposTag::X);
}

TEST_CASE("parse_conllu: comments-only block yields nothing") {
  auto sentences = parse_conllu(std::string{"# sent_id = ghost\n\n"});
  CHECK(sentences.empty());
}

TEST_CASE("parse_conllu: 1000-block file yields 1000 sentences") {
  std::ostringstream text;
  for (int i = 0; i < 1000; ++i) {
    text << "1\tword\t_\tNOUN\t_\t_\t_\t_\t_\t_\n\n";
  }
  CHECK(parse_conllu(text.str()).size() == 1000);
}

TEST_CASE("write_conllu: empty list, and a hand-checked fixture") {
  CHECK(write_conllu(std::vector<Sentence>{}).empty());

  Sentence s;
  s.tokens = {Token{"le", UposTag::DET}, Token{"chat", UposTag::NOUN}};
  std::string expected =
      "1\tle\t_\tDET\t_\t_\t_\t_\t_\t_\n"
      "2\tchat\t_\tNOUN\t_\t_\t_\t_\t_\t_\n"
      "\n";
  CHECK(write_conllu({s}) == expected);
}

TEST_CASE("conllu round-trip preserves ids, forms, and tags") {
  SynthCorpus synth = synth_corpus(7, 120);
  std::string once = write_conllu(synth.source);
  auto reparsed = parse_conllu(once);
  CHECK(reparsed == synth.source);
  // parse(write(parse(x))) == parse(x)
  CHECK(parse_conllu(write_conllu(reparsed)) == reparsed);
}

TEST_CASE("parse_bitext: basic splitting") {
  auto pairs = parse_bitext(std::string{"a b ||| x y\na ||| x y z\n"});
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].source == std::vector<std::string>{"a", "b"});
  CHECK(pairs[0].target == std::vector<std::string>{"x", "y"});
  CHECK(pairs[1].source == std::vector<std::string>{"a"});
  CHECK(pairs[1].target == std::vector<std::string>{"x", "y", "z"});
}

TEST_CASE("parse_bitext: collapses whitespace runs") {
  auto pairs = parse_bitext(std::string{"a  b ||| x   y\n"});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].source == std::vector<std::string>{"a", "b"});
  CHECK(pairs[0].target == std::vector<std::string>{"x", "y"});
}

TEST_CASE("parse_bitext: errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_bitext(std::string{"a b x y\n"}),
                       doctest::Contains("line 1"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_bitext(std::string{"a ||| x\n ||| y\n"}),
                       doctest::Contains("line 2"), std::runtime_error);
  CHECK_THROWS_WITH_AS(parse_bitext(std::string{"a |||  \n"}),
                       doctest::Contains("empty target"), std::runtime_error);
}

TEST_CASE("parse_bitext: handles a 12543-line file") {
  std::ostringstream text;
  for (int i = 0; i < 12543; ++i) text << "a b ||| x y\n";
  CHECK(parse_bitext(text.str()).size() == 12543);
}

TEST_CASE("bitext round-trip") {
  SynthCorpus synth = synth_corpus(3, 60);
  CHECK(parse_bitext(write_bitext(synth.bitext)) == synth.bitext);
}

TEST_CASE("to_petrov: fixed mapping, total and surjective") {
  CHECK(to_petrov(UposTag::NOUN) == PetrovTag::NOUN);
  CHECK(to_petrov(UposTag::CCONJ) == PetrovTag::CONJ);
  CHECK(to_petrov(UposTag::SCONJ) == PetrovTag::CONJ);
  CHECK(to_petrov(UposTag::PROPN) == PetrovTag::NOUN);
  CHECK(to_petrov(UposTag::AUX) == PetrovTag::VERB);
  CHECK(to_petrov(UposTag::INTJ) == PetrovTag::X);
  CHECK(to_petrov(UposTag::SYM) == PetrovTag::X);
  CHECK(to_petrov(UposTag::PUNCT) == PetrovTag::PUNCT);

  bool covered[kNumPetrovTags] = {};
  for (int i = 0; i < kNumUposTags; ++i) {
    covered[static_cast<int>(to_petrov(static_cast<UposTag>(i)))] = true;
  }
  for (bool c : covered) CHECK(c);

  // Identically-named categories map to themselves.
  for (int i = 0; i < kNumUposTags; ++i) {
    UposTag u = static_cast<UposTag>(i);
    PetrovTag p = to_petrov(u);
    if (to_string(u) == to_string(p)) {
      auto back = upos_from_string(to_string(p));
      REQUIRE(back.has_value());
      CHECK(to_petrov(*back) == p);
    }
  }
}

TEST_CASE("upos_from_string covers the closed inventory") {
  for (int i = 0; i < kNumUposTags; ++i) {
    UposTag u = static_cast<UposTag>(i);
    CHECK(upos_from_string(to_string(u)) == u);
  }
  CHECK_FALSE(upos_from_string("noun").has_value());
  CHECK_FALSE(upos_from_string("").has_value());
}
