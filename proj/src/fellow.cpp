#include "fbc/fellow.hpp"

#include <algorithm>
#include <limits>

namespace fbc {

PathVertices path_vertices(const GroupSpec& spec, const Word& w) {
  PathVertices vertices;
  vertices.reserve(w.size() + 1);
  NormalForm nf;
  vertices.push_back(nf);
  for (const Letter& x : w.letters) {
    nf = append_letter(spec, std::move(nf), x);
    vertices.push_back(nf);
  }
  return vertices;
}

std::string Alignment::step_string() const {
  std::string out;
  for (std::size_t n = 1; n < pairs.size(); ++n) {
    const auto di = pairs[n].first - pairs[n - 1].first;
    const auto dj = pairs[n].second - pairs[n - 1].second;
    out += (di == 1 && dj == 1) ? 'G' : (di == 1 ? 'D' : 'R');
  }
  return out;
}

namespace {

Word prefix(const Word& w, std::size_t len) {
  Word out;
  out.letters.assign(w.letters.begin(), w.letters.begin() + static_cast<std::ptrdiff_t>(len));
  return out;
}

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max();

}  // namespace

std::optional<std::int64_t> sync_fellow_distance(const GroupSpec& spec, const Word& w, const Word& u,
                                                 std::int64_t cap) {
  const std::size_t steps = std::max(w.size(), u.size());
  std::int64_t worst = 0;
  for (std::size_t i = 0; i <= steps; ++i) {
    const auto d = bounded_distance(spec, prefix(w, std::min(i, w.size())), prefix(u, std::min(i, u.size())), cap);
    if (!d) return std::nullopt;
    worst = std::max(worst, *d);
  }
  return worst;
}

std::optional<AsyncResult> async_fellow_distance(const GroupSpec& spec, const Word& w, const Word& u,
                                                 std::int64_t cap) {
  const BallIndex ball = build_ball(spec, cap);
  return async_fellow_distance(spec, w, u, cap, ball);
}

std::optional<AsyncResult> async_fellow_distance(const GroupSpec& spec, const Word& w, const Word& u,
                                                 std::int64_t cap, const BallIndex& ball) {
  const std::size_t m = w.size(), n = u.size();

  // D[i][j] = d(prefix_i(w), prefix_j(u)), kInf beyond the cap. Row i starts
  // from the normal form of prefix_i(w)^{-1} and extends along u.
  std::vector<std::vector<std::int64_t>> dist(m + 1, std::vector<std::int64_t>(n + 1, kInf));
  for (std::size_t i = 0; i <= m; ++i) {
    NormalForm x = normalize(spec, invert(prefix(w, i)));
    for (std::size_t j = 0; j <= n; ++j) {
      if (j > 0) x = append_letter(spec, std::move(x), u.letters[j - 1]);
      const auto d = element_distance(ball, x);
      if (d && *d <= cap) dist[i][j] = *d;
    }
  }

  // Discrete Frechet DP; 0 = diagonal, 1 = from above, 2 = from the left.
  std::vector<std::vector<std::int64_t>> best(m + 1, std::vector<std::int64_t>(n + 1, kInf));
  std::vector<std::vector<std::int8_t>> from(m + 1, std::vector<std::int8_t>(n + 1, -1));
  for (std::size_t i = 0; i <= m; ++i) {
    for (std::size_t j = 0; j <= n; ++j) {
      if (dist[i][j] == kInf) continue;
      if (i == 0 && j == 0) {
        best[0][0] = dist[0][0];
        continue;
      }
      std::int64_t reach = kInf;
      std::int8_t via = -1;
      if (i > 0 && j > 0 && best[i - 1][j - 1] < reach) { reach = best[i - 1][j - 1]; via = 0; }
      if (i > 0 && best[i - 1][j] < reach) { reach = best[i - 1][j]; via = 1; }
      if (j > 0 && best[i][j - 1] < reach) { reach = best[i][j - 1]; via = 2; }
      if (via < 0) continue;
      best[i][j] = std::max(reach, dist[i][j]);
      from[i][j] = via;
    }
  }
  if (best[m][n] == kInf) return std::nullopt;

  Alignment alignment;
  std::size_t i = m, j = n;
  alignment.pairs.emplace_back(i, j);
  while (i != 0 || j != 0) {
    switch (from[i][j]) {
      case 0: --i; --j; break;
      case 1: --i; break;
      default: --j; break;
    }
    alignment.pairs.emplace_back(i, j);
  }
  std::reverse(alignment.pairs.begin(), alignment.pairs.end());
  return AsyncResult{best[m][n], std::move(alignment)};
}

bool parallel_structure(const GroupSpec& /*spec*/, const NormalForm& w, const NormalForm& u) {
  if (w.blocks.size() != u.blocks.size()) return false;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    if (w.blocks[i].index != u.blocks[i].index || w.blocks[i].sign != u.blocks[i].sign) return false;
  }
  return true;
}

}  // namespace fbc
