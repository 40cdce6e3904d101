#include "fbc/experiments.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace fbc {

namespace {

Word power_word(const Letter& base, std::int64_t count) {
  Word w;
  append_power(w, base, count);
  return w;
}

std::string ratio_text(double ratio) {
  // shortest round-trip formatting, stable across runs
  return nlohmann::json(ratio).dump();
}

}  // namespace

std::vector<QuasiRow> quasigeodesic_table(const GroupSpec& spec, int stable_index, std::int64_t kmax,
                                          std::int64_t jmax, std::int64_t verify_radius,
                                          std::size_t entry_cap) {
  if (stable_index < 1 || stable_index > spec.rank()) {
    throw std::invalid_argument("stable index out of range");
  }
  const std::int64_t n = spec.exponent(stable_index);

  std::optional<BallIndex> ball;
  try {
    ball = build_ball(spec, verify_radius, entry_cap);
  } catch (const ball_capacity_error& e) {
    ball = build_ball(spec, e.completed_radius, entry_cap);
  }

  std::vector<QuasiRow> rows;
  for (std::int64_t k = 1; k <= kmax; ++k) {
    for (std::int64_t j = 1; j <= jmax; ++j) {
      Word w = power_word(stable_letter(stable_index, -1), k);
      append_power(w, t_letter(), j);
      const NormalForm nf = normalize(spec, w);

      QuasiRow row;
      row.k = k;
      row.j = j;
      row.geodesic_claimed = k + j;
      row.normal_form_length = static_cast<std::int64_t>(spell_nf(nf).size());
      row.paper_formula = n * j + j + k * j + n * k * j + 1;
      row.ratio = static_cast<double>(row.normal_form_length) / static_cast<double>(k + j);
      if (k + j <= ball->radius) row.geodesic_bfs = element_distance(*ball, nf);
      rows.push_back(row);
    }
  }
  return rows;
}

std::string quasi_table_csv(const std::vector<QuasiRow>& rows) {
  std::ostringstream out;
  out << "k,j,geodesic_claimed,geodesic_bfs,normal_form_length,paper_formula,ratio\n";
  for (const QuasiRow& r : rows) {
    out << r.k << ',' << r.j << ',' << r.geodesic_claimed << ',';
    if (r.geodesic_bfs) out << *r.geodesic_bfs;
    else out << "beyond_radius";
    out << ',' << r.normal_form_length << ',' << r.paper_formula << ',' << ratio_text(r.ratio) << '\n';
  }
  return out.str();
}

nlohmann::ordered_json quasi_table_json(const std::vector<QuasiRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const QuasiRow& r : rows) {
    nlohmann::ordered_json j{{"k", r.k},
                             {"j", r.j},
                             {"geodesic_claimed", r.geodesic_claimed},
                             {"geodesic_bfs", nullptr},
                             {"normal_form_length", r.normal_form_length},
                             {"paper_formula", r.paper_formula},
                             {"ratio", r.ratio}};
    if (r.geodesic_bfs) j["geodesic_bfs"] = *r.geodesic_bfs;
    arr.push_back(std::move(j));
  }
  return arr;
}

Word sample_l_word(const Automaton& aut, int maxlen, SplitMix64& rng) {
  Word w;
  int state = aut.initial;
  for (int step = 0; step < maxlen; ++step) {
    std::vector<std::pair<Letter, int>> options;
    for (const Letter& x : aut.letters) {
      const int to = aut.step(state, x);
      if (to >= 0) options.emplace_back(x, to);
    }
    const auto pick = uniform_below(rng, options.size() + 1);
    if (pick == options.size()) break;  // stop
    w.letters.push_back(options[pick].first);
    state = options[pick].second;
  }
  return w;
}

nlohmann::ordered_json FellowReport::to_json() const {
  auto witness_json = [](const FellowWitness& w) {
    return nlohmann::ordered_json{
        {"lhs", w.lhs}, {"rhs", w.rhs}, {"letter", w.letter}, {"distance", w.distance}};
  };
  nlohmann::ordered_json j{{"samples", samples}, {"maxlen", maxlen}, {"seed", seed},
                           {"cap", cap},         {"bound_hypothesis", bound_hypothesis}};
  nlohmann::ordered_json maxima = nlohmann::ordered_json::object();
  for (const auto& [token, value] : max_distance) maxima[token] = value;
  j["max_distance"] = std::move(maxima);
  nlohmann::ordered_json wlist = nlohmann::ordered_json::object();
  for (const FellowWitness& w : witnesses) wlist[w.letter] = witness_json(w);
  j["witnesses"] = std::move(wlist);
  nlohmann::ordered_json vlist = nlohmann::ordered_json::array();
  for (const FellowWitness& v : violations) vlist.push_back(witness_json(v));
  j["violations"] = std::move(vlist);
  return j;
}

FellowReport combing_sweep(const GroupSpec& spec, std::int64_t samples, std::int64_t maxlen,
                           std::uint64_t seed, std::optional<std::int64_t> cap_opt) {
  std::int64_t bound = 0;
  for (const std::int64_t n : spec.exponents) bound = std::max(bound, n < 0 ? -n : n);
  bound += 1;

  FellowReport report;
  report.samples = samples;
  report.maxlen = maxlen;
  report.seed = seed;
  report.cap = cap_opt.value_or(bound);
  report.bound_hypothesis = bound;

  const Automaton aut = build_acceptor(spec);
  const BallIndex ball = build_ball(spec, report.cap);
  const std::vector<Letter> probes{a_letter(+1), a_letter(-1), t_letter(+1), t_letter(-1)};
  for (const Letter& x : probes) report.max_distance.emplace_back(letter_token(x), 0);

  for (std::int64_t s = 0; s < samples; ++s) {
    SplitMix64 rng = derive_rng(seed, static_cast<std::uint64_t>(s));
    const Word w = sample_l_word(aut, static_cast<int>(maxlen), rng);
    for (std::size_t xi = 0; xi < probes.size(); ++xi) {
      Word extended = w;
      extended.letters.push_back(probes[xi]);
      const Word u = spell_nf(normalize(spec, extended));
      const auto result = async_fellow_distance(spec, w, u, report.cap, ball);
      if (!result) {
        report.violations.push_back(
            FellowWitness{spell_word(w), spell_word(u), letter_token(probes[xi]), -1});
        continue;
      }
      auto& best = report.max_distance[xi].second;
      if (result->distance > best) {
        best = result->distance;
        FellowWitness witness{spell_word(w), spell_word(u), letter_token(probes[xi]), result->distance};
        auto it = std::find_if(report.witnesses.begin(), report.witnesses.end(),
                               [&](const FellowWitness& ww) { return ww.letter == witness.letter; });
        if (it == report.witnesses.end()) report.witnesses.push_back(std::move(witness));
        else *it = std::move(witness);
      }
    }
  }
  return report;
}

std::vector<ConjugationRow> conjugation_check(const GroupSpec& spec, std::int64_t pmax) {
  if (pmax < 1) throw std::invalid_argument("pmax must be >= 1");
  std::vector<ConjugationRow> rows;
  for (int i = 1; i <= spec.rank(); ++i) {
    for (std::int64_t p = 0; p <= pmax; ++p) {
      Word w = power_word(stable_letter(i, -1), p);
      w.letters.push_back(t_letter());
      append_power(w, stable_letter(i), p);

      const NormalForm computed = normalize(spec, w);
      const NormalForm expected{p * spec.exponent(i), 1, {}};

      ConjugationRow row;
      row.index = i;
      row.power = p;
      row.expected = spelled(expected);
      row.computed = spelled(computed);
      row.pass = computed == expected;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string conjugation_csv(const std::vector<ConjugationRow>& rows) {
  std::ostringstream out;
  out << "index,p,expected,computed,pass\n";
  for (const ConjugationRow& r : rows) {
    out << r.index << ',' << r.power << ',' << r.expected << ',' << r.computed << ','
        << (r.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

nlohmann::ordered_json conjugation_json(const std::vector<ConjugationRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const ConjugationRow& r : rows) {
    arr.push_back({{"index", r.index},
                   {"p", r.power},
                   {"expected", r.expected},
                   {"computed", r.computed},
                   {"pass", r.pass}});
  }
  return arr;
}

}  // namespace fbc
