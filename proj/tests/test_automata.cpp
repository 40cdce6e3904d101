#include <doctest.h>

#include <set>

#include "fbc/automata.hpp"
#include "fbc/rewrite.hpp"
#include "support/testutil.hpp"

using namespace fbc;

namespace {
const GroupSpec kSpec12{{1, 2}};
}

TEST_CASE("acceptor recognizes normal-form spellings") {
  const Automaton aut = build_acceptor(kSpec12);
  CHECK(accepts(aut, parse_word(kSpec12, "a a t t")));
  CHECK_FALSE(accepts(aut, parse_word(kSpec12, "b1 B1")));
  CHECK_FALSE(accepts(aut, parse_word(kSpec12, "t a")));
  CHECK(accepts(aut, parse_word(kSpec12, "a t B2 a^5 b1")));

  CHECK(accepts(aut, Word{}));
  CHECK_FALSE(accepts(aut, parse_word(kSpec12, "a A")));
  CHECK(accepts(aut, parse_word(kSpec12, "a^2 t B2")));

  CHECK_FALSE(accepts(aut, parse_word(kSpec12, "B1 b1")));
  CHECK(accepts(aut, parse_word(kSpec12, "b1 b1")));
  CHECK(accepts(aut, parse_word(kSpec12, "b1 a B1")));
  CHECK_FALSE(accepts(aut, parse_word(kSpec12, "b1 t")));
  CHECK(accepts(aut, parse_word(kSpec12, "A^3 T^2 B2 a")));
}

TEST_CASE("acceptor matches fixed points of normalize up to length 4") {
  const Automaton aut = build_acceptor(kSpec12);
  for (const Word& w : testing::all_words_up_to(kSpec12, 4)) {
    const bool fixed = spell_nf(normalize(kSpec12, w)) == w;
    CHECK(accepts(aut, w) == fixed);
  }
}

TEST_CASE("accepted words have pairwise distinct normal forms") {
  const Automaton aut = build_acceptor(kSpec12);
  std::set<std::string> keys;
  for (const Word& w : enumerate_accepted(aut, 4)) {
    CHECK(keys.insert(spelled(normalize(kSpec12, w))).second);
  }
}

TEST_CASE("enumerate_accepted is length-lexicographic") {
  const Automaton aut = build_acceptor(kSpec12);
  CHECK(enumerate_accepted(aut, 0) == std::vector<Word>{Word{}});

  const auto len1 = enumerate_accepted(aut, 1);
  std::vector<std::string> texts;
  for (const Word& w : len1) texts.push_back(spell_word(w));
  CHECK(texts == std::vector<std::string>{"", "a", "A", "t", "T", "b1", "B1", "b2", "B2"});

  // count at maxlen 2 matches the brute-force filter
  std::size_t brute = 0;
  for (const Word& w : testing::all_words_up_to(kSpec12, 2)) {
    if (accepts(aut, w)) ++brute;
  }
  CHECK(enumerate_accepted(aut, 2).size() == brute);

  CHECK_THROWS_AS(enumerate_accepted(aut, 3, 10), enumeration_error);
}

TEST_CASE("automaton export and import") {
  const Automaton aut = build_acceptor(kSpec12);
  CHECK(aut.num_states() == 5 + 6 * 2);

  SUBCASE("one-state DOT") {
    Automaton trivial;
    trivial.letters = alphabet(kSpec12);
    trivial.initial = 0;
    trivial.labels = {"start"};
    trivial.accepting = {true};
    trivial.next = {std::vector<int>(8, -1)};
    const std::string dot = export_automaton(trivial, ExportFormat::dot);
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("0 [label=\"start\", shape=doublecircle]") != std::string::npos);
  }

  SUBCASE("JSON state count and round trip") {
    const std::string json_text = export_automaton(aut, ExportFormat::json);
    const auto j = nlohmann::json::parse(json_text);
    CHECK(j["states"].size() == static_cast<std::size_t>(aut.num_states()));
    CHECK(import_automaton(kSpec12, json_text) == aut);
  }

  SUBCASE("deterministic export") {
    CHECK(export_automaton(aut, ExportFormat::json) == export_automaton(aut, ExportFormat::json));
    CHECK(export_automaton(aut, ExportFormat::dot) == export_automaton(aut, ExportFormat::dot));
  }
}

TEST_CASE("every state of the acceptor is reachable and accepting") {
  for (const GroupSpec& spec : {kSpec12, GroupSpec{{0, 4}}, GroupSpec{{-2, 5}}}) {
    const Automaton aut = build_acceptor(spec);
    std::vector<bool> seen(static_cast<std::size_t>(aut.num_states()), false);
    std::vector<int> stack{aut.initial};
    seen[static_cast<std::size_t>(aut.initial)] = true;
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      for (const Letter& x : aut.letters) {
        const int to = aut.step(s, x);
        if (to >= 0 && !seen[static_cast<std::size_t>(to)]) {
          seen[static_cast<std::size_t>(to)] = true;
          stack.push_back(to);
        }
      }
    }
    for (int s = 0; s < aut.num_states(); ++s) {
      CHECK(seen[static_cast<std::size_t>(s)]);
      CHECK(aut.accepting[static_cast<std::size_t>(s)]);
    }
  }
}
