#include "fbc/cayley.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace fbc {

BallIndex build_ball(const GroupSpec& spec, std::int64_t radius, std::size_t entry_cap) {
  if (radius < 0) throw std::invalid_argument("ball radius must be >= 0");
  BallIndex ball;
  ball.radius = radius;
  ball.entries.emplace(std::string{}, BallEntry{0, std::nullopt});
  if (entry_cap == 0) throw ball_capacity_error(0, entry_cap);

  const auto gens = alphabet(spec);
  std::vector<NormalForm> frontier{NormalForm{}};
  for (std::int64_t d = 0; d < radius && !frontier.empty(); ++d) {
    std::vector<NormalForm> next_frontier;
    for (const NormalForm& nf : frontier) {
      for (const Letter& g : gens) {
        NormalForm nb = append_letter(spec, nf, g);
        std::string key = element_key(nb);
        if (ball.entries.contains(key)) continue;
        if (ball.entries.size() >= entry_cap) throw ball_capacity_error(d, entry_cap);
        ball.entries.emplace(std::move(key), BallEntry{d + 1, g});
        next_frontier.push_back(std::move(nb));
      }
    }
    frontier = std::move(next_frontier);
  }
  return ball;
}

std::optional<std::int64_t> element_distance(const BallIndex& ball, const NormalForm& nf) {
  auto it = ball.entries.find(element_key(nf));
  if (it == ball.entries.end()) return std::nullopt;
  return it->second.distance;
}

std::optional<std::int64_t> bounded_distance(const GroupSpec& spec, const Word& w1, const Word& w2,
                                             std::int64_t cap) {
  if (cap < 0) throw std::invalid_argument("distance cap must be >= 0");
  NormalForm start = normalize(spec, concat(invert(w1), w2));
  if (start.is_identity()) return 0;

  const auto gens = alphabet(spec);
  std::unordered_set<std::string> seen{element_key(start)};
  std::vector<NormalForm> frontier{std::move(start)};
  for (std::int64_t d = 1; d <= cap; ++d) {
    std::vector<NormalForm> next_frontier;
    for (const NormalForm& nf : frontier) {
      for (const Letter& g : gens) {
        NormalForm nb = append_letter(spec, nf, g);
        if (nb.is_identity()) return d;
        std::string key = element_key(nb);
        if (!seen.insert(std::move(key)).second) continue;
        next_frontier.push_back(std::move(nb));
      }
    }
    frontier = std::move(next_frontier);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

std::string ball_to_dot(const GroupSpec& spec, const BallIndex& ball) {
  std::vector<std::string> keys;
  keys.reserve(ball.entries.size());
  for (const auto& [key, entry] : ball.entries) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [&](const std::string& x, const std::string& y) {
    const auto dx = ball.entries.at(x).distance, dy = ball.entries.at(y).distance;
    return dx != dy ? dx < dy : x < y;
  });

  std::ostringstream out;
  out << "graph ball {\n";
  for (const std::string& key : keys) {
    out << "  \"" << (key.empty() ? "1" : key) << "\";\n";
  }
  const auto gens = alphabet(spec);
  for (const std::string& key : keys) {
    const NormalForm nf = normalize(spec, parse_word(spec, key));
    for (const Letter& g : gens) {
      if (g.sign < 0) continue;  // one edge per undirected pair
      const NormalForm nb = append_letter(spec, nf, g);
      const std::string to = element_key(nb);
      if (!ball.entries.contains(to)) continue;
      out << "  \"" << (key.empty() ? "1" : key) << "\" -- \"" << (to.empty() ? "1" : to)
          << "\" [label=\"" << letter_token(g) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace fbc
