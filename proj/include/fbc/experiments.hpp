#ifndef FBC_EXPERIMENTS_HPP
#define FBC_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbc/automata.hpp"
#include "fbc/cayley.hpp"
#include "fbc/fellow.hpp"
#include "fbc/rng.hpp"

namespace fbc {

/// One row of the growth table for b_index^{-k} t^j.
struct QuasiRow {
  std::int64_t k = 0;
  std::int64_t j = 0;
  std::int64_t geodesic_claimed = 0;                 // k + j
  std::optional<std::int64_t> geodesic_bfs;          // unset = beyond the verified radius
  std::int64_t normal_form_length = 0;               // letters of spell_nf(normalize(b_i^{-k} t^j))
  std::int64_t paper_formula = 0;                    // n j + j + k j + n k j + 1, comparison only
  double ratio = 0.0;                                // normal_form_length / (k + j)
};

/// Rows for 1 <= k <= kmax, 1 <= j <= jmax (k-major order). geodesic_bfs is
/// filled by BFS wherever k + j <= verify_radius; if the ball budget runs
/// out, remaining rows carry an unset geodesic_bfs.
std::vector<QuasiRow> quasigeodesic_table(const GroupSpec& spec, int stable_index, std::int64_t kmax,
                                          std::int64_t jmax, std::int64_t verify_radius,
                                          std::size_t entry_cap = kDefaultEntryCap);

std::string quasi_table_csv(const std::vector<QuasiRow>& rows);
nlohmann::ordered_json quasi_table_json(const std::vector<QuasiRow>& rows);

struct FellowWitness {
  std::string lhs;
  std::string rhs;
  std::string letter;
  std::int64_t distance = 0;  // -1 marks a cap-exceeded pair
};

/// Result of a combing sweep: per-generator maxima of the asynchronous
/// fellow-traveler distance between sampled L-words and their one-letter
/// extensions, with re-evaluable witnesses.
struct FellowReport {
  std::int64_t samples = 0;
  std::int64_t maxlen = 0;
  std::uint64_t seed = 0;
  std::int64_t cap = 0;
  std::int64_t bound_hypothesis = 0;  // max_i |n_i| + 1
  std::vector<std::pair<std::string, std::int64_t>> max_distance;  // per letter token
  std::vector<FellowWitness> witnesses;                            // one per token attaining the max
  std::vector<FellowWitness> violations;                           // cap-exceeded pairs

  nlohmann::ordered_json to_json() const;
};

/// Uniform random walk on the acceptor: at every step one uniform choice
/// among the legal continuations plus stop.
Word sample_l_word(const Automaton& aut, int maxlen, SplitMix64& rng);

/// Sample L-words and measure async_fellow_distance(w, normalize(w x)) for
/// each x in {a, a^{-1}, t, t^{-1}}. cap defaults to the hypothesis bound.
FellowReport combing_sweep(const GroupSpec& spec, std::int64_t samples, std::int64_t maxlen,
                           std::uint64_t seed, std::optional<std::int64_t> cap = std::nullopt);

struct ConjugationRow {
  int index = 0;
  std::int64_t power = 0;
  std::string expected;  // a^{p n_i} t
  std::string computed;  // spelled normalize(b_i^{-p} t b_i^{p})
  bool pass = false;
};

/// For each i <= k and 0 <= p <= pmax, compare normalize(b_i^{-p} t b_i^{p})
/// against a^{p n_i} t.
std::vector<ConjugationRow> conjugation_check(const GroupSpec& spec, std::int64_t pmax);

std::string conjugation_csv(const std::vector<ConjugationRow>& rows);
nlohmann::ordered_json conjugation_json(const std::vector<ConjugationRow>& rows);

}  // namespace fbc

#endif
