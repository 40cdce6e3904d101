#include "fbc/presentation.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace fbc {

GroupSpec::GroupSpec(std::vector<std::int64_t> exps) : exponents(std::move(exps)) {
  if (exponents.empty()) {
    throw parse_error("group spec needs at least one stable-letter exponent");
  }
}

GroupSpec GroupSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("exponents") || !j["exponents"].is_array()) {
    throw parse_error("group spec JSON must be an object {\"exponents\":[...]}");
  }
  std::vector<std::int64_t> exps;
  for (const auto& e : j["exponents"]) {
    if (!e.is_number_integer()) throw parse_error("group spec exponents must be integers");
    exps.push_back(e.get<std::int64_t>());
  }
  return GroupSpec(std::move(exps));
}

nlohmann::ordered_json GroupSpec::to_json() const {
  return nlohmann::ordered_json{{"exponents", exponents}};
}

bool valid_letter(const GroupSpec& spec, const Letter& x) {
  if (x.sign != +1 && x.sign != -1) return false;
  switch (x.base) {
    case Base::a:
    case Base::t:
      return x.index == 0;
    case Base::stable:
      return x.index >= 1 && x.index <= spec.rank();
  }
  return false;
}

std::vector<Letter> alphabet(const GroupSpec& spec) {
  std::vector<Letter> letters;
  letters.reserve(static_cast<std::size_t>(alphabet_size(spec)));
  letters.push_back(a_letter(+1));
  letters.push_back(a_letter(-1));
  letters.push_back(t_letter(+1));
  letters.push_back(t_letter(-1));
  for (int i = 1; i <= spec.rank(); ++i) {
    letters.push_back(stable_letter(i, +1));
    letters.push_back(stable_letter(i, -1));
  }
  return letters;
}

int letter_code(const Letter& x) {
  int base_rank = 0;
  switch (x.base) {
    case Base::a: base_rank = 0; break;
    case Base::t: base_rank = 1; break;
    case Base::stable: base_rank = 1 + x.index; break;
  }
  return 2 * base_rank + (x.sign < 0 ? 1 : 0);
}

std::string letter_token(const Letter& x) {
  switch (x.base) {
    case Base::a: return x.sign > 0 ? "a" : "A";
    case Base::t: return x.sign > 0 ? "t" : "T";
    case Base::stable:
      return (x.sign > 0 ? "b" : "B") + std::to_string(x.index);
  }
  return "?";
}

namespace {

struct Token {
  std::string text;
  std::size_t ordinal;  // 1-based
  std::size_t offset;   // character offset in the input
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0, ordinal = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    tokens.push_back(Token{std::string(text.substr(start, i - start)), ++ordinal, start});
  }
  return tokens;
}

[[noreturn]] void fail(const std::string& what, const Token& tok) {
  std::ostringstream msg;
  msg << what << " '" << tok.text << "' (token " << tok.ordinal << ", offset " << tok.offset << ")";
  throw parse_error(msg.str());
}

}  // namespace

Letter token_to_letter(const GroupSpec& spec, std::string_view token) {
  if (token.empty()) throw parse_error("empty letter token");
  char head = token[0];
  int sign = std::isupper(static_cast<unsigned char>(head)) ? -1 : +1;
  char low = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
  if (low == 'a' && token.size() == 1) return a_letter(sign);
  if (low == 't' && token.size() == 1) return t_letter(sign);
  if (low == 'b' && token.size() > 1) {
    int index = 0;
    auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) {
      if (index < 1 || index > spec.rank()) {
        throw parse_error("stable index out of range in '" + std::string(token) + "' (k = " +
                          std::to_string(spec.rank()) + ")");
      }
      return stable_letter(index, sign);
    }
  }
  throw parse_error("unknown base token '" + std::string(token) + "'");
}

Word parse_word(const GroupSpec& spec, std::string_view text) {
  Word w;
  for (const Token& tok : tokenize(text)) {
    std::string_view body = tok.text;
    std::int64_t exponent = 1;
    if (auto caret = body.find('^'); caret != std::string_view::npos) {
      auto exp_text = body.substr(caret + 1);
      body = body.substr(0, caret);
      std::int64_t value = 0;
      const char* begin = exp_text.data();
      const char* end = exp_text.data() + exp_text.size();
      if (!exp_text.empty() && exp_text[0] == '+') ++begin;  // from_chars rejects '+'
      auto [ptr, ec] = std::from_chars(begin, end, value);
      if (ec != std::errc() || ptr != end || exp_text.empty()) fail("malformed exponent in", tok);
      exponent = value;
    }
    Letter base;
    try {
      base = token_to_letter(spec, body);
    } catch (const parse_error& e) {
      fail(std::string(e.what()) + ", in", tok);
    }
    if (exponent < 0) {
      base = base.inverse();
      exponent = -exponent;
    }
    for (std::int64_t n = 0; n < exponent; ++n) w.letters.push_back(base);
  }
  return w;
}

std::string spell_word(const Word& w) {
  std::string out;
  std::size_t i = 0;
  while (i < w.letters.size()) {
    std::size_t run = 1;
    while (i + run < w.letters.size() && w.letters[i + run] == w.letters[i]) ++run;
    if (!out.empty()) out += ' ';
    out += letter_token(w.letters[i]);
    if (run > 1) out += '^' + std::to_string(run);
    i += run;
  }
  return out;
}

Word invert(const Word& w) {
  Word out;
  out.letters.reserve(w.letters.size());
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out.letters.push_back(it->inverse());
  }
  return out;
}

Word concat(const Word& lhs, const Word& rhs) {
  Word out = lhs;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

void append_power(Word& w, const Letter& positive, std::int64_t count) {
  Letter x = count >= 0 ? positive : positive.inverse();
  for (std::int64_t n = 0; n < (count >= 0 ? count : -count); ++n) w.letters.push_back(x);
}

}  // namespace fbc
