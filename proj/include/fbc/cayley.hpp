#ifndef FBC_CAYLEY_HPP
#define FBC_CAYLEY_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "fbc/rewrite.hpp"

namespace fbc {

inline constexpr std::size_t kDefaultEntryCap = 5'000'000;

struct ball_capacity_error : std::runtime_error {
  std::int64_t completed_radius;
  std::size_t cap;
  ball_capacity_error(std::int64_t completed, std::size_t c)
      : std::runtime_error("ball exceeded the entry cap of " + std::to_string(c) +
                           " (completed radius " + std::to_string(completed) + ")"),
        completed_radius(completed),
        cap(c) {}
};

struct BallEntry {
  std::int64_t distance = 0;
  std::optional<Letter> parent;  // node = parent-node * parent; unset on the identity
};

/// BFS ball of the Cayley graph. Nodes are keyed by the spelled normal form,
/// which the uniqueness of normal forms makes a perfect key.
struct BallIndex {
  std::int64_t radius = 0;
  std::unordered_map<std::string, BallEntry> entries;
};

inline std::string element_key(const NormalForm& nf) { return spelled(nf); }

/// BFS from the identity over all 2(k+2) generators out to the given radius.
/// Throws ball_capacity_error carrying the last fully completed radius when
/// the entry cap would be exceeded.
BallIndex build_ball(const GroupSpec& spec, std::int64_t radius, std::size_t entry_cap = kDefaultEntryCap);

/// Word-metric distance from the identity, or nullopt when beyond the radius.
std::optional<std::int64_t> element_distance(const BallIndex& ball, const NormalForm& nf);

/// d(w1, w2) when <= cap, else nullopt; BFS from normalize(invert(w1) w2)
/// capped at depth cap.
std::optional<std::int64_t> bounded_distance(const GroupSpec& spec, const Word& w1, const Word& w2,
                                             std::int64_t cap);

/// DOT digraph of the ball's edge set (one edge per positive generator).
std::string ball_to_dot(const GroupSpec& spec, const BallIndex& ball);

}  // namespace fbc

#endif
