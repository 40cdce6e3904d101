#include "fbc/automata.hpp"

#include <sstream>

#include <json.hpp>

namespace fbc {

namespace {

// State layout:
//   0            start (nothing read)
//   1, 2         head a-run locked positive / negative
//   3, 4         head t-run locked positive / negative
//   5 + 6(i-1) + 3*(sign<0) + run   after b_i^{sign}; run: 0 empty, 1 pos, 2 neg
constexpr int kStart = 0, kHeadAPos = 1, kHeadANeg = 2, kHeadTPos = 3, kHeadTNeg = 4;

int stable_state(int index, int sign, int run) {
  return 5 + 6 * (index - 1) + (sign < 0 ? 3 : 0) + run;
}

}  // namespace

Automaton build_acceptor(const GroupSpec& spec) {
  const int k = spec.rank();
  const int n_states = 5 + 6 * k;
  Automaton aut;
  aut.letters = alphabet(spec);
  aut.initial = kStart;
  aut.labels.assign(static_cast<std::size_t>(n_states), "");
  aut.accepting.assign(static_cast<std::size_t>(n_states), true);
  aut.next.assign(static_cast<std::size_t>(n_states),
                  std::vector<int>(static_cast<std::size_t>(alphabet_size(spec)), -1));

  aut.labels[kStart] = "start";
  aut.labels[kHeadAPos] = "a+";
  aut.labels[kHeadANeg] = "a-";
  aut.labels[kHeadTPos] = "t+";
  aut.labels[kHeadTNeg] = "t-";
  for (int i = 1; i <= k; ++i) {
    for (int sign : {+1, -1}) {
      const std::string stem = letter_token(stable_letter(i, sign));
      aut.labels[static_cast<std::size_t>(stable_state(i, sign, 0))] = stem;
      aut.labels[static_cast<std::size_t>(stable_state(i, sign, 1))] = stem + " a+";
      aut.labels[static_cast<std::size_t>(stable_state(i, sign, 2))] = stem + " a-";
    }
  }

  auto arc = [&aut](int from, const Letter& x, int to) {
    aut.next[static_cast<std::size_t>(from)][static_cast<std::size_t>(letter_code(x))] = to;
  };
  auto stable_arcs = [&](int from, int from_index, int from_sign, bool run_empty) {
    for (int i = 1; i <= k; ++i) {
      for (int sign : {+1, -1}) {
        // b_i^{-e} (empty run) b_i^{e} would be a pinch
        if (run_empty && i == from_index && sign == -from_sign) continue;
        arc(from, stable_letter(i, sign), stable_state(i, sign, 0));
      }
    }
  };

  // head a-run
  arc(kStart, a_letter(+1), kHeadAPos);
  arc(kStart, a_letter(-1), kHeadANeg);
  arc(kHeadAPos, a_letter(+1), kHeadAPos);
  arc(kHeadANeg, a_letter(-1), kHeadANeg);
  // head t-run
  for (int s : {kStart, kHeadAPos, kHeadANeg}) {
    arc(s, t_letter(+1), kHeadTPos);
    arc(s, t_letter(-1), kHeadTNeg);
  }
  arc(kHeadTPos, t_letter(+1), kHeadTPos);
  arc(kHeadTNeg, t_letter(-1), kHeadTNeg);
  // head -> blocks
  for (int s : {kStart, kHeadAPos, kHeadANeg, kHeadTPos, kHeadTNeg}) {
    stable_arcs(s, 0, 0, false);
  }
  // blocks
  for (int i = 1; i <= k; ++i) {
    for (int sign : {+1, -1}) {
      const int empty = stable_state(i, sign, 0);
      const int pos = stable_state(i, sign, 1);
      const int neg = stable_state(i, sign, 2);
      arc(empty, a_letter(+1), pos);
      arc(empty, a_letter(-1), neg);
      arc(pos, a_letter(+1), pos);
      arc(neg, a_letter(-1), neg);
      stable_arcs(empty, i, sign, true);
      stable_arcs(pos, i, sign, false);
      stable_arcs(neg, i, sign, false);
    }
  }
  return aut;
}

bool accepts(const Automaton& aut, const Word& w) {
  int state = aut.initial;
  for (const Letter& x : w.letters) {
    state = aut.step(state, x);
    if (state < 0) return false;
  }
  return aut.accepting[static_cast<std::size_t>(state)];
}

std::vector<Word> enumerate_accepted(const Automaton& aut, int maxlen, std::size_t cap) {
  std::vector<Word> out;
  std::vector<std::pair<int, Word>> frontier;
  auto offer = [&](int state, const Word& w) {
    if (aut.accepting[static_cast<std::size_t>(state)]) {
      if (out.size() >= cap) throw enumeration_error(cap);
      out.push_back(w);
    }
  };
  offer(aut.initial, Word{});
  frontier.emplace_back(aut.initial, Word{});
  for (int len = 1; len <= maxlen; ++len) {
    std::vector<std::pair<int, Word>> next_frontier;
    for (const auto& [state, w] : frontier) {
      for (const Letter& x : aut.letters) {
        const int to = aut.step(state, x);
        if (to < 0) continue;
        Word w2 = w;
        w2.letters.push_back(x);
        offer(to, w2);
        next_frontier.emplace_back(to, std::move(w2));
      }
    }
    frontier = std::move(next_frontier);
    if (frontier.empty()) break;
  }
  return out;
}

std::string export_automaton(const Automaton& aut, ExportFormat format) {
  if (format == ExportFormat::dot) {
    std::ostringstream out;
    out << "digraph acceptor {\n  rankdir=LR;\n";
    for (int s = 0; s < aut.num_states(); ++s) {
      out << "  " << s << " [label=\"" << aut.labels[static_cast<std::size_t>(s)] << "\""
          << (aut.accepting[static_cast<std::size_t>(s)] ? ", shape=doublecircle" : ", shape=circle") << "];\n";
    }
    for (int s = 0; s < aut.num_states(); ++s) {
      for (const Letter& x : aut.letters) {
        const int to = aut.step(s, x);
        if (to < 0) continue;
        out << "  " << s << " -> " << to << " [label=\"" << letter_token(x) << "\"];\n";
      }
    }
    out << "}\n";
    return out.str();
  }
  nlohmann::ordered_json j;
  j["states"] = nlohmann::ordered_json::array();
  for (int s = 0; s < aut.num_states(); ++s) {
    j["states"].push_back({{"id", s}, {"label", aut.labels[static_cast<std::size_t>(s)]}});
  }
  j["initial"] = aut.initial;
  j["accepting"] = nlohmann::ordered_json::array();
  for (int s = 0; s < aut.num_states(); ++s) {
    if (aut.accepting[static_cast<std::size_t>(s)]) j["accepting"].push_back(s);
  }
  j["transitions"] = nlohmann::ordered_json::array();
  for (int s = 0; s < aut.num_states(); ++s) {
    for (const Letter& x : aut.letters) {
      const int to = aut.step(s, x);
      if (to < 0) continue;
      j["transitions"].push_back({{"from", s}, {"letter", letter_token(x)}, {"to", to}});
    }
  }
  return j.dump();
}

Automaton import_automaton(const GroupSpec& spec, const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error(std::string("automaton JSON: ") + e.what());
  }
  Automaton aut;
  aut.letters = alphabet(spec);
  const auto& states = j.at("states");
  aut.labels.assign(states.size(), "");
  aut.accepting.assign(states.size(), false);
  aut.next.assign(states.size(), std::vector<int>(static_cast<std::size_t>(alphabet_size(spec)), -1));
  for (const auto& s : states) {
    const auto id = s.at("id").get<std::size_t>();
    if (id >= states.size()) throw parse_error("automaton JSON: state id out of range");
    aut.labels[id] = s.at("label").get<std::string>();
  }
  aut.initial = j.at("initial").get<int>();
  for (const auto& s : j.at("accepting")) {
    aut.accepting.at(s.get<std::size_t>()) = true;
  }
  for (const auto& tr : j.at("transitions")) {
    const auto from = tr.at("from").get<std::size_t>();
    const auto to = tr.at("to").get<int>();
    const Letter x = token_to_letter(spec, tr.at("letter").get<std::string>());
    auto& cell = aut.next.at(from).at(static_cast<std::size_t>(letter_code(x)));
    if (cell != -1) throw parse_error("automaton JSON: duplicate transition");
    if (to < 0 || to >= aut.num_states()) throw parse_error("automaton JSON: transition target out of range");
    cell = to;
  }
  return aut;
}

}  // namespace fbc
