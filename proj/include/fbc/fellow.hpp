#ifndef FBC_FELLOW_HPP
#define FBC_FELLOW_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fbc/cayley.hpp"
#include "fbc/rewrite.hpp"

namespace fbc {

/// Endpoints of all prefixes of a word; M+1 vertices for a word of length M.
using PathVertices = std::vector<NormalForm>;

PathVertices path_vertices(const GroupSpec& spec, const Word& w);

/// Monotone lattice path from (0,0) to (M,N) with steps (1,0), (0,1), (1,1);
/// the discretized reparametrization of one path against the other.
struct Alignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;

  /// Steps as a string over D (advance lhs), R (advance rhs), G (both).
  std::string step_string() const;
};

struct AsyncResult {
  std::int64_t distance = 0;
  Alignment alignment;
};

/// max over i of d(prefix_i(w), prefix_i(u)), the shorter path padded at its
/// endpoint; nullopt when any pair exceeds cap.
std::optional<std::int64_t> sync_fellow_distance(const GroupSpec& spec, const Word& w, const Word& u,
                                                 std::int64_t cap);

/// Discrete Frechet distance between the two paths: the minimum over
/// alignments of the maximum pairwise vertex distance, with distances beyond
/// cap pruned. Returns an optimal alignment as witness, or nullopt when every
/// alignment exceeds cap.
std::optional<AsyncResult> async_fellow_distance(const GroupSpec& spec, const Word& w, const Word& u,
                                                 std::int64_t cap);

/// As above with a shared distance oracle; ball must have radius >= cap.
std::optional<AsyncResult> async_fellow_distance(const GroupSpec& spec, const Word& w, const Word& u,
                                                 std::int64_t cap, const BallIndex& ball);

/// True iff the two normal forms carry identical sequences of
/// (stable index, sign) block headers.
bool parallel_structure(const GroupSpec& spec, const NormalForm& w, const NormalForm& u);

}  // namespace fbc

#endif
