#ifndef FBC_TESTS_TESTUTIL_HPP
#define FBC_TESTS_TESTUTIL_HPP

#include <vector>

#include "fbc/presentation.hpp"
#include "fbc/rng.hpp"

namespace fbc::testing {

inline Word random_word(const GroupSpec& spec, std::size_t len, SplitMix64& rng) {
  const auto gens = alphabet(spec);
  Word w;
  w.letters.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    w.letters.push_back(gens[uniform_below(rng, gens.size())]);
  }
  return w;
}

/// All words over the alphabet with length <= maxlen, shortest first.
inline std::vector<Word> all_words_up_to(const GroupSpec& spec, int maxlen) {
  const auto gens = alphabet(spec);
  std::vector<Word> out{Word{}};
  std::size_t level_begin = 0;
  for (int len = 1; len <= maxlen; ++len) {
    const std::size_t level_end = out.size();
    for (std::size_t i = level_begin; i < level_end; ++i) {
      for (const Letter& g : gens) {
        Word w = out[i];
        w.letters.push_back(g);
        out.push_back(std::move(w));
      }
    }
    level_begin = level_end;
  }
  return out;
}

}  // namespace fbc::testing

#endif
