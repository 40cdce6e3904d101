#ifndef FBC_TESTS_SEMIDIRECT_HPP
#define FBC_TESTS_SEMIDIRECT_HPP

#include <cstdint>
#include <vector>

#include "fbc/presentation.hpp"

namespace fbc::testing {

// Exact independent oracle for the word problem. The group is also
//   F ⋊ Z  with F free on {a, b_1..b_k} and the Z-generator t acting by
//   t a t^{-1} = a,  t b_i t^{-1} = b_i a^{n_i},
// so every element has a unique form t^s · w with w a reduced word in F.
// Multiplying generators on the right only needs free reduction and the
// (exactly computable) twist w -> t^{-1} w t; no Britton machinery involved.

struct FreeRun {
  int gen = 0;            // 0 = a, i = b_i
  std::int64_t exp = 0;   // nonzero
  bool operator==(const FreeRun&) const = default;
};

struct SemidirectElement {
  std::int64_t t_power = 0;
  std::vector<FreeRun> runs;  // reduced: adjacent gens distinct, exps nonzero
  bool operator==(const SemidirectElement&) const = default;

  bool is_identity() const { return t_power == 0 && runs.empty(); }
};

SemidirectElement semidirect_eval(const GroupSpec& spec, const Word& w);

inline bool semidirect_identity(const GroupSpec& spec, const Word& w) {
  return semidirect_eval(spec, w).is_identity();
}

inline bool semidirect_equal(const GroupSpec& spec, const Word& w1, const Word& w2) {
  return semidirect_eval(spec, w1) == semidirect_eval(spec, w2);
}

}  // namespace fbc::testing

#endif
