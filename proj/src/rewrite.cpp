#include "fbc/rewrite.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace fbc {

NormalForm append_letter(const GroupSpec& spec, NormalForm nf, const Letter& x) {
  switch (x.base) {
    case Base::a: {
      if (nf.blocks.empty()) {
        nf.head_a += x.sign;
      } else {
        nf.blocks.back().tail += x.sign;
      }
      return nf;
    }
    case Base::t: {
      const std::int64_t eps = x.sign;
      for (std::size_t j = nf.blocks.size(); j-- > 0;) {
        Block& blk = nf.blocks[j];
        const std::int64_t shift = eps * spec.exponent(blk.index);
        if (blk.sign > 0) {
          blk.tail -= shift;
        } else if (j > 0) {
          nf.blocks[j - 1].tail += shift;
        } else {
          nf.head_a += shift;
        }
      }
      nf.head_t += eps;
      return nf;
    }
    case Base::stable: {
      if (!nf.blocks.empty()) {
        const Block& last = nf.blocks.back();
        const bool subgroup_hit = x.sign > 0 ? GroupSpec::a_power_in_domain(last.tail)
                                             : spec.a_power_in_image(x.index, last.tail);
        if (last.index == x.index && last.sign == -x.sign && subgroup_hit) {
          nf.blocks.pop_back();
          return nf;
        }
      }
      nf.blocks.push_back(Block{x.index, x.sign, 0});
      return nf;
    }
  }
  return nf;
}

NormalForm normalize(const GroupSpec& spec, const Word& w) {
  NormalForm nf;
  for (const Letter& x : w.letters) nf = append_letter(spec, std::move(nf), x);
  return nf;
}

Word spell_nf(const NormalForm& nf) {
  Word w;
  append_power(w, a_letter(), nf.head_a);
  append_power(w, t_letter(), nf.head_t);
  for (const Block& blk : nf.blocks) {
    w.letters.push_back(stable_letter(blk.index, blk.sign));
    append_power(w, a_letter(), blk.tail);
  }
  return w;
}

std::string spelled(const NormalForm& nf) { return spell_word(spell_nf(nf)); }

bool word_problem(const GroupSpec& spec, const Word& w) {
  return normalize(spec, w).is_identity();
}

bool equal_elements(const GroupSpec& spec, const Word& w1, const Word& w2) {
  return normalize(spec, w1) == normalize(spec, w2);
}

bool satisfies_invariants(const GroupSpec& spec, const NormalForm& nf) {
  for (std::size_t j = 0; j < nf.blocks.size(); ++j) {
    const Block& blk = nf.blocks[j];
    if (blk.index < 1 || blk.index > spec.rank()) return false;
    if (blk.sign != +1 && blk.sign != -1) return false;
    if (j + 1 < nf.blocks.size()) {
      const Block& next = nf.blocks[j + 1];
      if (blk.index == next.index && blk.sign == -next.sign && blk.tail == 0) return false;
    }
  }
  return true;
}

nlohmann::ordered_json nf_to_json(const NormalForm& nf) {
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const Block& blk : nf.blocks) {
    blocks.push_back({{"index", blk.index}, {"sign", blk.sign}, {"tail", blk.tail}});
  }
  return nlohmann::ordered_json{
      {"head_a", nf.head_a}, {"head_t", nf.head_t}, {"blocks", blocks}, {"spelled", spelled(nf)}};
}

// ---------------------------------------------------------------------------
// Trace generation. Replays normalize letter by letter on a working copy of
// the word, emitting the elementary steps and checking after every input
// letter that the processed prefix spells the running normal form.

namespace {

class TraceBuilder {
 public:
  TraceBuilder(const GroupSpec& spec, const Word& w)
      : spec_(spec), cur_(w.letters), total_(w.letters.size()) {}

  RewriteTrace run() {
    std::size_t consumed = 0;
    NormalForm nf;
    while (consumed < total_) {
      const std::size_t p = prefix_len_;
      const Letter x = cur_[p];
      region_end_ = p + 1;  // all edits stay left of the unprocessed suffix
      switch (x.base) {
        case Base::a: process_a(p, x); break;
        case Base::t: process_t(p); break;
        case Base::stable: process_stable(p, x); break;
      }
      nf = append_letter(spec_, std::move(nf), x);
      ++consumed;
      check_prefix(nf, consumed);
    }
    return RewriteTrace{std::move(steps_)};
  }

 private:
  // -- step emission --------------------------------------------------------

  void emit_commute(std::size_t pos) {
    const Letter l = cur_[pos], r = cur_[pos + 1];
    const bool at_pair = (l.base == Base::a && r.base == Base::t) || (l.base == Base::t && r.base == Base::a);
    if (!at_pair) throw std::logic_error("trace: bad commute");
    std::swap(cur_[pos], cur_[pos + 1]);
    steps_.push_back({StepKind::commute, pos});
  }

  void emit_cancel(std::size_t pos, StepKind kind) {
    if (cur_[pos + 1] != cur_[pos].inverse()) throw std::logic_error("trace: bad cancellation");
    cur_.erase(cur_.begin() + static_cast<std::ptrdiff_t>(pos), cur_.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    steps_.push_back({kind, pos});
    region_end_ -= 2;
  }

  // b_i^{d} t^{e} at pos -> the defining-relation consequence.
  void emit_relator(std::size_t pos) {
    const Letter s = cur_[pos], tl = cur_[pos + 1];
    if (s.base != Base::stable || tl.base != Base::t) throw std::logic_error("trace: bad relator site");
    const std::int64_t deposit = tl.sign * spec_.exponent(s.index);
    std::vector<Letter> repl;
    if (s.sign > 0) {
      // b_i t^e = t^e b_i a^{-e n_i}
      repl.push_back(tl);
      repl.push_back(s);
      for (std::int64_t c = 0; c < std::llabs(deposit); ++c) repl.push_back(a_letter(deposit > 0 ? -1 : +1));
    } else {
      // b_i^{-1} t^e = a^{e n_i} t^e b_i^{-1}
      for (std::int64_t c = 0; c < std::llabs(deposit); ++c) repl.push_back(a_letter(deposit > 0 ? +1 : -1));
      repl.push_back(tl);
      repl.push_back(s);
    }
    cur_.erase(cur_.begin() + static_cast<std::ptrdiff_t>(pos), cur_.begin() + static_cast<std::ptrdiff_t>(pos) + 2);
    cur_.insert(cur_.begin() + static_cast<std::ptrdiff_t>(pos), repl.begin(), repl.end());
    steps_.push_back({StepKind::relator, pos});
    region_end_ += repl.size() - 2;
  }

  // -- per-letter processing --------------------------------------------------

  void process_a(std::size_t p, const Letter& x) {
    while (p > 0 && cur_[p - 1].base == Base::t) {
      emit_commute(p - 1);
      --p;
    }
    if (p > 0 && cur_[p - 1].base == Base::a && cur_[p - 1] == x.inverse()) {
      emit_cancel(p - 1, StepKind::free_cancel);
    }
  }

  void process_t(std::size_t p) {
    std::size_t stables_left = 0;
    for (std::size_t q = 0; q < p; ++q) {
      if (cur_[q].base == Base::stable) ++stables_left;
    }
    while (stables_left > 0) {
      const Letter left = cur_[p - 1];
      if (left.base == Base::a) {
        emit_commute(p - 1);
        --p;
      } else if (left.base == Base::stable) {
        const std::int64_t n = spec_.exponent(left.index);
        emit_relator(p - 1);
        p = left.sign > 0 ? p - 1 : p - 1 + static_cast<std::size_t>(std::llabs(n));
        --stables_left;
      } else {
        throw std::logic_error("trace: t-letter left of a stable letter");
      }
    }
    relocate_head_deposits();
    merge_head_t_run();
    cancel_sweep();
  }

  void process_stable(std::size_t p, const Letter& x) {
    if (p > 0 && cur_[p - 1] == x.inverse()) {
      emit_cancel(p - 1, StepKind::pinch);
    }
  }

  // a-letters stranded between the head t-run and the first stable letter
  // belong to the head a-run; walk each one back across the t-run.
  void relocate_head_deposits() {
    while (true) {
      std::size_t q = 0;
      while (q < region_end_ && cur_[q].base == Base::a) ++q;
      const std::size_t t_begin = q;
      while (q < region_end_ && cur_[q].base == Base::t) ++q;
      if (q == t_begin || q >= region_end_ || cur_[q].base != Base::a) return;
      std::size_t pos = q;
      while (pos > 0 && cur_[pos - 1].base == Base::t) {
        emit_commute(pos - 1);
        --pos;
      }
    }
  }

  // The walked-in t sits at the right end of the head t-run; cancel it
  // against the run when the signs oppose.
  void merge_head_t_run() {
    std::size_t q = 0;
    while (q < region_end_ && cur_[q].base == Base::a) ++q;
    std::size_t t_end = q;
    while (t_end < region_end_ && cur_[t_end].base == Base::t) ++t_end;
    if (t_end - q >= 2 && cur_[t_end - 1] == cur_[t_end - 2].inverse()) {
      emit_cancel(t_end - 2, StepKind::free_cancel);
    }
  }

  void cancel_sweep() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t q = 0; q + 1 < region_end_; ++q) {
        if (cur_[q].base == Base::a && cur_[q + 1] == cur_[q].inverse()) {
          emit_cancel(q, StepKind::free_cancel);
          changed = true;
          break;
        }
      }
    }
  }

  // -- bookkeeping ------------------------------------------------------------

  void check_prefix(const NormalForm& nf, std::size_t consumed) {
    const Word expect = spell_nf(nf);
    prefix_len_ = expect.letters.size();
    const std::size_t suffix = total_ - consumed;
    if (region_end_ != prefix_len_ || cur_.size() != prefix_len_ + suffix ||
        !std::equal(expect.letters.begin(), expect.letters.end(), cur_.begin())) {
      throw std::logic_error("trace: prefix does not spell the running normal form");
    }
  }

  const GroupSpec& spec_;
  std::vector<Letter> cur_;
  std::size_t total_ = 0;
  std::size_t prefix_len_ = 0;
  std::size_t region_end_ = 0;
  std::vector<TraceStep> steps_;
};

}  // namespace

RewriteTrace rewrite_trace(const GroupSpec& spec, const Word& w) {
  return TraceBuilder(spec, w).run();
}

}  // namespace fbc
