#include <doctest.h>

#include <set>

#include "fbc/cayley.hpp"
#include "support/testutil.hpp"

using namespace fbc;

namespace {
const GroupSpec kSpec12{{1, 2}};
}

TEST_CASE("ball sizes at small radii") {
  CHECK(build_ball(kSpec12, 0).entries.size() == 1);
  CHECK(build_ball(kSpec12, 1).entries.size() == 9);

  // radius 2 matches brute-force enumeration of short words modulo equality
  std::set<std::string> classes;
  for (const Word& w : testing::all_words_up_to(kSpec12, 2)) {
    classes.insert(spelled(normalize(kSpec12, w)));
  }
  CHECK(build_ball(kSpec12, 2).entries.size() == classes.size());
}

TEST_CASE("element_distance") {
  const BallIndex ball = build_ball(kSpec12, 4);
  CHECK(element_distance(ball, NormalForm{}) == 0);
  CHECK(element_distance(ball, normalize(kSpec12, parse_word(kSpec12, "a^3"))) == 3);
  CHECK(element_distance(ball, normalize(kSpec12, parse_word(kSpec12, "a^2 t B2"))) == 2);
  CHECK_FALSE(element_distance(ball, normalize(kSpec12, parse_word(kSpec12, "a^9"))).has_value());
}

TEST_CASE("bounded_distance") {
  const Word w = parse_word(kSpec12, "b1 a t");
  CHECK(bounded_distance(kSpec12, w, w, 0) == 0);
  CHECK(bounded_distance(kSpec12, parse_word(kSpec12, "t b2"), parse_word(kSpec12, "b2 a^2 t"), 4) == 0);
  CHECK(bounded_distance(kSpec12, parse_word(kSpec12, "B2"), parse_word(kSpec12, "a^2 t"), 4) == 2);
  CHECK_FALSE(bounded_distance(kSpec12, Word{}, parse_word(kSpec12, "a^6"), 3).has_value());
}

TEST_CASE("ball entries are consistent with the word metric") {
  const BallIndex ball = build_ball(kSpec12, 3);
  SplitMix64 rng{6060};

  // parent chains walk back to the identity in exactly `distance` steps
  for (const auto& [key, entry] : ball.entries) {
    NormalForm nf = normalize(kSpec12, parse_word(kSpec12, key));
    std::int64_t steps = 0;
    std::string at = key;
    while (!nf.is_identity()) {
      const auto& e = ball.entries.at(at);
      REQUIRE(e.parent.has_value());
      nf = append_letter(kSpec12, std::move(nf), e.parent->inverse());
      at = element_key(nf);
      REQUIRE(ball.entries.at(at).distance == e.distance - 1);
      ++steps;
    }
    CHECK(steps == entry.distance);
  }

  // generators never fix a vertex, so every edge has length one
  for (int trial = 0; trial < 40; ++trial) {
    const Word w = testing::random_word(kSpec12, uniform_below(rng, 8), rng);
    for (const Letter& g : alphabet(kSpec12)) {
      Word wg = w;
      wg.letters.push_back(g);
      CHECK(bounded_distance(kSpec12, wg, w, 2) == 1);
    }
    const NormalForm nf = normalize(kSpec12, w);
    const auto d = element_distance(ball, nf);
    if (d) CHECK(*d <= static_cast<std::int64_t>(w.size()));
  }
}

TEST_CASE("distance is symmetric and satisfies the triangle inequality") {
  SplitMix64 rng{11};
  for (int trial = 0; trial < 25; ++trial) {
    const Word x = testing::random_word(kSpec12, uniform_below(rng, 4), rng);
    const Word y = testing::random_word(kSpec12, uniform_below(rng, 4), rng);
    const Word z = testing::random_word(kSpec12, uniform_below(rng, 4), rng);
    const auto dxy = bounded_distance(kSpec12, x, y, 8);
    const auto dyx = bounded_distance(kSpec12, y, x, 8);
    const auto dyz = bounded_distance(kSpec12, y, z, 8);
    const auto dxz = bounded_distance(kSpec12, x, z, 8);
    REQUIRE(dxy.has_value());
    REQUIRE(dyz.has_value());
    REQUIRE(dxz.has_value());
    CHECK(dxy == dyx);
    CHECK(*dxz <= *dxy + *dyz);
  }
}

TEST_CASE("entry cap aborts with the completed radius") {
  try {
    build_ball(kSpec12, 3, 5);
    FAIL("expected ball_capacity_error");
  } catch (const ball_capacity_error& e) {
    CHECK(e.completed_radius == 0);
    CHECK(e.cap == 5);
  }
  try {
    build_ball(kSpec12, 3, 20);
    FAIL("expected ball_capacity_error");
  } catch (const ball_capacity_error& e) {
    CHECK(e.completed_radius == 1);
  }
}

TEST_CASE("ball DOT export") {
  const BallIndex ball = build_ball(kSpec12, 1);
  const std::string dot = ball_to_dot(kSpec12, ball);
  CHECK(dot.find("graph ball {") != std::string::npos);
  CHECK(dot.find("\"1\"") != std::string::npos);       // identity node
  CHECK(dot.find("\"1\" -- \"a\"") != std::string::npos);
  CHECK(ball_to_dot(kSpec12, ball) == dot);  // deterministic
}
