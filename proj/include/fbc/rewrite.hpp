#ifndef FBC_REWRITE_HPP
#define FBC_REWRITE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "fbc/presentation.hpp"

namespace fbc {

/// One stable-letter block of a normal form: b_index^{sign} a^{tail}.
struct Block {
  int index = 0;
  int sign = +1;
  std::int64_t tail = 0;

  bool operator==(const Block&) const = default;
};

/// The canonical representative a^{head_a} t^{head_t} (r_1 a^{g_1}) ... (r_l a^{g_l})
/// of a group element. Invariants:
///   - all t-power content lives in the head; block tails are pure a-powers;
///   - pinch-freeness: consecutive blocks with equal index and opposite signs
///     have a nonzero tail between them (no b_i^{-e} 1 b_i^{e} subsequence).
struct NormalForm {
  std::int64_t head_a = 0;
  std::int64_t head_t = 0;
  std::vector<Block> blocks;

  bool is_identity() const { return head_a == 0 && head_t == 0 && blocks.empty(); }
  bool operator==(const NormalForm&) const = default;
};

/// The unique normal form of nf * x.
///
/// Case analysis on x:
///   - a^{+-1}: the last tail (or head_a when there are no blocks) moves by +-1.
///   - t^{e}: pushed right-to-left through every block. A positive block
///     (i,+1,g) becomes (i,+1,g - e*n_i); a negative block keeps its tail but
///     deposits e*n_i onto the a-exponent immediately to its left (previous
///     tail, or head_a). Finally head_t += e.
///   - b_i^{e}: cancels a trailing (i,-e,0) block (pinch), otherwise appends
///     a fresh block (i,e,0).
///
/// Total on valid inputs; the result satisfies the NormalForm invariants
/// (pushing t across a same-index opposite-sign adjacency changes that tail
/// by e*(n_i - n_i) = 0, so no new pinch can appear).
NormalForm append_letter(const GroupSpec& spec, NormalForm nf, const Letter& x);

/// Left fold of append_letter over w starting from the identity.
NormalForm normalize(const GroupSpec& spec, const Word& w);

/// The word a^{head_a} t^{head_t} r_1 a^{g_1} ... r_l a^{g_l}.
Word spell_nf(const NormalForm& nf);

/// Canonical text of the normal form; doubles as the Cayley-node key.
std::string spelled(const NormalForm& nf);

/// True iff w represents the identity of G.
bool word_problem(const GroupSpec& spec, const Word& w);

/// True iff w1 and w2 have identical normal forms.
bool equal_elements(const GroupSpec& spec, const Word& w1, const Word& w2);

/// Structural check of the NormalForm invariants against a spec.
bool satisfies_invariants(const GroupSpec& spec, const NormalForm& nf);

/// {"head_a":..,"head_t":..,"blocks":[{"index","sign","tail"}..],"spelled":".."}
nlohmann::ordered_json nf_to_json(const NormalForm& nf);

// ---------------------------------------------------------------------------
// Rewrite traces: elementary-step certificates for normalize.

enum class StepKind : std::uint8_t {
  free_cancel,  // remove adjacent mutually inverse a/t letters
  commute,      // swap adjacent a^{+-1} and t^{+-1}
  relator,      // b_i^{d} t^{e} -> defining-relation consequence at a position
  pinch,        // remove adjacent mutually inverse stable letters
};

struct TraceStep {
  StepKind kind;
  std::size_t pos;

  bool operator==(const TraceStep&) const = default;
};

/// Replaying the steps transforms the input word into spell_nf(normalize(w)).
struct RewriteTrace {
  std::vector<TraceStep> steps;
};

/// Record the elementary steps normalize performs on w. An independent
/// checker can replay them, validating each one as a legal free-group move or
/// single application of a defining relation.
RewriteTrace rewrite_trace(const GroupSpec& spec, const Word& w);

}  // namespace fbc

#endif
