#ifndef FBC_PRESENTATION_HPP
#define FBC_PRESENTATION_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace fbc {

/// Raised when a word, token, or configuration fails to parse. The message
/// names the offending token and its position in the input.
struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// One member of the family
///   G = <a, t, b_1..b_k | at = ta, b_i^{-1} t b_i = a^{n_i} t>,
/// fixed by its exponent list n_1..n_k (k >= 1; exponents may be negative,
/// zero, or repeated).
struct GroupSpec {
  std::vector<std::int64_t> exponents;

  explicit GroupSpec(std::vector<std::int64_t> exps);

  int rank() const { return static_cast<int>(exponents.size()); }

  /// n_i for a stable-letter index in 1..k.
  std::int64_t exponent(int index) const { return exponents.at(static_cast<std::size_t>(index) - 1); }

  // Membership of a pure a-power in the associated subgroups. The only pure
  // a-power in <t> or in <a^{n_i} t> is the identity, so both tests reduce
  // to gamma == 0; keeping them named keeps the pinch logic legible.
  static bool a_power_in_domain(std::int64_t gamma) { return gamma == 0; }
  bool a_power_in_image(int /*index*/, std::int64_t gamma) const { return gamma == 0; }

  static GroupSpec from_json(const nlohmann::json& j);
  nlohmann::ordered_json to_json() const;

  bool operator==(const GroupSpec&) const = default;
};

enum class Base : std::uint8_t { a = 0, t = 1, stable = 2 };

/// A signed generator: a^{+-1}, t^{+-1}, or b_index^{+-1}.
struct Letter {
  Base base = Base::a;
  int index = 0;  // 1..k when base == stable, 0 otherwise
  int sign = +1;  // +1 or -1

  Letter inverse() const { return Letter{base, index, -sign}; }
  auto operator<=>(const Letter&) const = default;
};

inline Letter a_letter(int sign = +1) { return Letter{Base::a, 0, sign}; }
inline Letter t_letter(int sign = +1) { return Letter{Base::t, 0, sign}; }
inline Letter stable_letter(int index, int sign = +1) { return Letter{Base::stable, index, sign}; }

/// A word over the generators and their inverses (possibly empty).
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  auto operator<=>(const Word&) const = default;
};

bool valid_letter(const GroupSpec& spec, const Letter& x);

/// 2(k+2) letters in canonical order: a, a^{-1}, t, t^{-1}, b1, b1^{-1}, ...
std::vector<Letter> alphabet(const GroupSpec& spec);
inline int alphabet_size(const GroupSpec& spec) { return 2 * (spec.rank() + 2); }

/// Position of a letter in the canonical order above.
int letter_code(const Letter& x);

/// Token text: "a", "A", "t", "T", "b2", "B2", ... (uppercase = inverse).
std::string letter_token(const Letter& x);

/// Parse a single base token (no exponent), validating against the spec.
Letter token_to_letter(const GroupSpec& spec, std::string_view token);

/// Parse the word grammar: whitespace-separated tokens, each
/// base ['^' signed-integer], exponent composing with letter case
/// ("B2^-1" == b2). Throws parse_error naming the bad token and position.
Word parse_word(const GroupSpec& spec, std::string_view text);

/// Canonical text of a word: adjacent runs of one signed letter collapse to
/// base^exponent. Round-trips through parse_word.
std::string spell_word(const Word& w);

/// Reversed sequence with all signs flipped; an involution.
Word invert(const Word& w);

Word concat(const Word& lhs, const Word& rhs);

/// a^count as letters (count may be negative or zero).
void append_power(Word& w, const Letter& positive, std::int64_t count);

}  // namespace fbc

#endif
