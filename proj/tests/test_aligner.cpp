#include <doctest.h>

#include <cmath>
#include <random>

#include "zeropos/aligner.hpp"

using namespace zeropos;

namespace {

SentencePair pair_of(std::vector<std::string> src, std::vector<std::string> tgt) {
  return SentencePair{std::move(src), std::move(tgt)};
}

Alignment links_of(std::initializer_list<std::pair<int, int>> links) {
  Alignment a;
  for (auto [s, t] : links) a.links.insert(AlignmentLink{s, t});
  return a;
}

// Independent re-summation of log p(target | source), written against the
// model definition rather than the aligner internals.
double ll_oracle(const AlignModel& m, const std::vector<SentencePair>& pairs) {
  double total = 0.0;
  for (const auto& pair : pairs) {
    int n = static_cast<int>(pair.source.size());
    int mlen = static_cast<int>(pair.target.size());
    for (int j = 0; j < mlen; ++j) {
      double floor_t = [&](double t) { return t > 1e-12 ? t : 1e-12; }(
          m.table.prob(TranslationTable::kNullWord, pair.target[j]));
      double z = m.params.null_prob * floor_t;
      double rest = 1.0 - m.params.null_prob;
      std::vector<double> w(n, 1.0);
      double wsum = n;
      if (m.variant == AlignerVariant::DIAG_IBM2) {
        wsum = 0.0;
        for (int i = 0; i < n; ++i) {
          w[i] = std::exp(-m.params.lambda *
                          std::fabs((i + 1.0) / n - (j + 1.0) / mlen));
          wsum += w[i];
        }
      }
      for (int i = 0; i < n; ++i) {
        double t = m.table.prob(pair.source[i], pair.target[j]);
        if (t <= 1e-12) t = 1e-12;
        z += rest * (w[i] / wsum) * t;
      }
      total += std::log(z);
    }
  }
  return total;
}

std::vector<SentencePair> toy_corpus() {
  return {pair_of({"the", "dog", "barks"}, {"le", "chien", "aboie"}),
          pair_of({"the", "cat"}, {"le", "chat"}),
          pair_of({"a", "dog"}, {"un", "chien"}),
          pair_of({"the", "dog", "sleeps"}, {"le", "chien", "dort"}),
          pair_of({"a", "cat", "sleeps"}, {"un", "chat", "dort"})};
}

}  // namespace

TEST_CASE("train: single pair sits at the symmetric fixed point") {
  std::vector<SentencePair> pairs = {pair_of({"a"}, {"x"})};
  AlignModel m = train_aligner(pairs, AlignerVariant::IBM1, 5,
                               DiagonalParams{4.0, 0.5});
  // "x" is the only word either row can emit, so both rows stay at 1 and the
  // NULL-vs-word posterior stays at p0 = 0.5 each.
  CHECK(m.table.prob("a", "x") == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(m.table.prob(TranslationTable::kNullWord, "x") ==
        doctest::Approx(1.0).epsilon(1e-12));
  CHECK(corpus_log_likelihood(m, pairs) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("train: second pair disambiguates the first") {
  std::vector<SentencePair> pairs = {pair_of({"a", "b"}, {"x", "y"}),
                                     pair_of({"a"}, {"x"})};
  AlignModel m = train_aligner(pairs, AlignerVariant::IBM1, 10,
                               DiagonalParams{4.0, 0.0});
  CHECK(m.table.prob("a", "x") > 0.9);
  CHECK(m.table.prob("b", "y") > 0.9);
}

TEST_CASE("train: input validation") {
  CHECK_THROWS_AS(train_aligner({}, AlignerVariant::IBM1, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      train_aligner({pair_of({"a"}, {"x"})}, AlignerVariant::IBM1, 0),
      std::invalid_argument);
  CHECK_THROWS_AS(train_aligner({pair_of({"a"}, {"x"})}, AlignerVariant::IBM1,
                                1, DiagonalParams{-1.0, 0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(train_aligner({pair_of({"a"}, {"x"})}, AlignerVariant::IBM1,
                                1, DiagonalParams{4.0, 1.0}),
                  std::invalid_argument);
}

TEST_CASE("train: log-likelihood is non-decreasing and rows stay normalized") {
  auto pairs = toy_corpus();
  for (AlignerVariant variant :
       {AlignerVariant::IBM1, AlignerVariant::DIAG_IBM2}) {
    CAPTURE(static_cast<int>(variant));
    AlignModel m = train_aligner(pairs, variant, 10);
    REQUIRE(m.ll_history.size() == 10);
    for (std::size_t k = 1; k < m.ll_history.size(); ++k) {
      CHECK(m.ll_history[k] >= m.ll_history[k - 1] - 1e-9);
    }
    // Final model scores at least as well as the last recorded iteration.
    CHECK(corpus_log_likelihood(m, pairs) >= m.ll_history.back() - 1e-9);

    for (std::size_t e = 0; e < m.table.rows.size(); ++e) {
      double sum = 0.0;
      for (const auto& [f, p] : m.table.rows[e]) sum += p;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("train: determinism across runs") {
  auto pairs = toy_corpus();
  AlignModel a = train_aligner(pairs, AlignerVariant::DIAG_IBM2, 5);
  AlignModel b = train_aligner(pairs, AlignerVariant::DIAG_IBM2, 5);
  REQUIRE(a.table.rows.size() == b.table.rows.size());
  for (std::size_t e = 0; e < a.table.rows.size(); ++e) {
    for (const auto& [f, p] : a.table.rows[e]) {
      CHECK(b.table.rows[e].at(f) == p);  // bit-identical
    }
  }
}

TEST_CASE("corpus_log_likelihood: matches direct re-summation") {
  auto pairs = toy_corpus();
  for (AlignerVariant variant :
       {AlignerVariant::IBM1, AlignerVariant::DIAG_IBM2}) {
    AlignModel m = train_aligner(pairs, variant, 4);
    CHECK(corpus_log_likelihood(m, pairs) ==
          doctest::Approx(ll_oracle(m, pairs)).epsilon(1e-12));
    CHECK(corpus_log_likelihood(m, pairs) < 0.0);  // some event is < 1
  }
}

TEST_CASE("decode: identity copy corpus aligns the diagonal") {
  std::vector<SentencePair> pairs;
  for (const char* w : {"a", "b", "c", "d"}) {
    pairs.push_back(pair_of({w}, {w}));
  }
  pairs.push_back(pair_of({"a", "b"}, {"a", "b"}));
  pairs.push_back(pair_of({"c", "d", "a"}, {"c", "d", "a"}));
  AlignModel m = train_aligner(pairs, AlignerVariant::DIAG_IBM2, 5);
  CHECK(decode(m, pair_of({"a", "b"}, {"a", "b"})) ==
        links_of({{0, 0}, {1, 1}}));
  CHECK(decode(m, pair_of({"c", "d", "a"}, {"c", "d", "a"})) ==
        links_of({{0, 0}, {1, 1}, {2, 2}}));
}

TEST_CASE("decode: trained two-pair model aligns both words") {
  std::vector<SentencePair> pairs = {pair_of({"a", "b"}, {"x", "y"}),
                                     pair_of({"a"}, {"x"})};
  AlignModel m = train_aligner(pairs, AlignerVariant::IBM1, 10,
                               DiagonalParams{4.0, 0.0});
  CHECK(decode(m, pair_of({"a", "b"}, {"x", "y"})) ==
        links_of({{0, 0}, {1, 1}}));
}

TEST_CASE("decode: target word unknown to the pair's source goes to NULL") {
  // "y" is in the target vocabulary (NULL keeps mass on it) but none of this
  // pair's source words ever emitted it.
  std::vector<SentencePair> pairs = {pair_of({"a"}, {"x"}),
                                     pair_of({"b"}, {"y"})};
  AlignModel m = train_aligner(pairs, AlignerVariant::IBM1, 5,
                               DiagonalParams{4.0, 0.2});
  Alignment result = decode(m, pair_of({"a"}, {"y"}));
  CHECK(result.links.empty());
}

TEST_CASE("decode is deterministic") {
  auto pairs = toy_corpus();
  AlignModel m = train_aligner(pairs, AlignerVariant::DIAG_IBM2, 5);
  for (const auto& pair : pairs) {
    CHECK(decode(m, pair) == decode(m, pair));
  }
}

TEST_CASE("symmetrize: agreement between directions is a fixed point") {
  Alignment fwd = links_of({{0, 0}, {1, 1}, {0, 2}});
  Alignment rev = links_of({{0, 0}, {1, 1}, {2, 0}});  // transpose of fwd
  for (SymHeuristic h : {SymHeuristic::INTERSECTION, SymHeuristic::UNION,
                         SymHeuristic::GROW_DIAG_FINAL_AND}) {
    CHECK(symmetrize(fwd, rev, h) == fwd);
  }
}

TEST_CASE("symmetrize: intersection example") {
  Alignment fwd = links_of({{0, 0}, {1, 1}});
  Alignment rev = links_of({{0, 0}});
  CHECK(symmetrize(fwd, rev, SymHeuristic::INTERSECTION) ==
        links_of({{0, 0}}));
}

TEST_CASE("symmetrize: grow-diag-final-and hand trace") {
  Alignment fwd = links_of({{0, 0}, {1, 1}});
  Alignment rev = links_of({{0, 0}, {0, 1}});
  CHECK(symmetrize(fwd, rev, SymHeuristic::GROW_DIAG_FINAL_AND) ==
        links_of({{0, 0}, {1, 1}}));
}

TEST_CASE("symmetrize: intersection <= grow-diag-final-and <= union") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + rng() % 5, m = 1 + rng() % 5;
    Alignment fwd, rev;
    for (int j = 0; j < m; ++j) {  // forward links one source per target
      if (rng() % 4 == 0) continue;
      fwd.links.insert(AlignmentLink{static_cast<int>(rng() % n), j});
    }
    for (int i = 0; i < n; ++i) {  // reverse runs in (target, source) space
      if (rng() % 4 == 0) continue;
      rev.links.insert(AlignmentLink{static_cast<int>(rng() % m), i});
    }

    Alignment inter = symmetrize(fwd, rev, SymHeuristic::INTERSECTION);
    Alignment gdfa = symmetrize(fwd, rev, SymHeuristic::GROW_DIAG_FINAL_AND);
    Alignment uni = symmetrize(fwd, rev, SymHeuristic::UNION);
    for (const AlignmentLink& l : inter.links) CHECK(gdfa.links.count(l) == 1);
    for (const AlignmentLink& l : gdfa.links) CHECK(uni.links.count(l) == 1);
  }
}

TEST_CASE("pharaoh: parse and write") {
  CHECK(parse_pharaoh("0-0 1-1") == links_of({{0, 0}, {1, 1}}));
  CHECK(parse_pharaoh("").links.empty());
  CHECK(parse_pharaoh("3-1 0-2") == links_of({{0, 2}, {3, 1}}));
  CHECK(write_pharaoh(links_of({{3, 1}, {0, 2}})) == "0-2 3-1");
  CHECK(write_pharaoh(Alignment{}) == "");
}

TEST_CASE("pharaoh: malformed tokens") {
  CHECK_THROWS_AS(parse_pharaoh("00"), std::runtime_error);
  CHECK_THROWS_AS(parse_pharaoh("a-b"), std::runtime_error);
  CHECK_THROWS_AS(parse_pharaoh("1-"), std::runtime_error);
  CHECK_THROWS_AS(parse_pharaoh("-1"), std::runtime_error);
  CHECK_THROWS_AS(parse_pharaoh("0-0x"), std::runtime_error);
  CHECK_THROWS_AS(parse_pharaoh("0-0 1--2"), std::runtime_error);
}

TEST_CASE("pharaoh: round-trip on random link sets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Alignment a;
    int count = rng() % 12;
    for (int k = 0; k < count; ++k) {
      a.links.insert(AlignmentLink{static_cast<int>(rng() % 30),
                                   static_cast<int>(rng() % 30)});
    }
    CHECK(parse_pharaoh(write_pharaoh(a)) == a);
  }
}
