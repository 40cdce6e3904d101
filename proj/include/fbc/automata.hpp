#ifndef FBC_AUTOMATA_HPP
#define FBC_AUTOMATA_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fbc/presentation.hpp"

namespace fbc {

/// Deterministic acceptor over the group alphabet. Transitions are total on
/// the state x letter grid with -1 denoting the implicit rejecting sink.
struct Automaton {
  std::vector<Letter> letters;          // canonical alphabet order; column index = letter_code
  int initial = 0;
  std::vector<std::string> labels;      // per-state, for exports
  std::vector<bool> accepting;
  std::vector<std::vector<int>> next;   // [state][letter_code] -> state or -1

  int num_states() const { return static_cast<int>(next.size()); }
  int step(int state, const Letter& x) const {
    return next[static_cast<std::size_t>(state)][static_cast<std::size_t>(letter_code(x))];
  }

  bool operator==(const Automaton&) const = default;
};

struct enumeration_error : std::runtime_error {
  std::size_t cap;
  explicit enumeration_error(std::size_t c)
      : std::runtime_error("enumeration exceeded the result cap of " + std::to_string(c)), cap(c) {}
};

/// Acceptor for the spellings of valid normal forms: a sign-locked a-run,
/// a sign-locked t-run, then blocks of (stable letter, sign-locked a-run),
/// rejecting pinches b_i^{-e} b_i^{e} across an empty run and any mixed-sign
/// run. State tracks (phase, last stable letter and sign, run sign lock),
/// 5 + 6k states in total.
Automaton build_acceptor(const GroupSpec& spec);

bool accepts(const Automaton& aut, const Word& w);

/// All accepted words of length <= maxlen in length-lexicographic order
/// (letters ordered a, A, t, T, b1, B1, ...). Throws enumeration_error when
/// the result count would exceed cap.
std::vector<Word> enumerate_accepted(const Automaton& aut, int maxlen, std::size_t cap = 1'000'000);

enum class ExportFormat { dot, json };

/// DOT digraph or JSON {states, initial, accepting, transitions}, with
/// deterministic ordering for diffability.
std::string export_automaton(const Automaton& aut, ExportFormat format);

/// Inverse of the JSON export.
Automaton import_automaton(const GroupSpec& spec, const std::string& json_text);

}  // namespace fbc

#endif
