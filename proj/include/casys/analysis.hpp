#pragma once

#include <casys/automaton.hpp>
#include <casys/control.hpp>

#include <cstddef>
#include <cstdlib>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace casys {

inline constexpr std::size_t default_enumeration_cap = 12;

/// Longest trace any enumeration may be asked for. CASYS_MAX_ENUM
/// overrides the default when it holds a nonnegative integer.
inline std::size_t enumeration_cap() {
  if (const char *env = std::getenv("CASYS_MAX_ENUM")) {
    char *end = nullptr;
    const auto value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0')
      return static_cast<std::size_t>(value);
  }
  return default_enumeration_cap;
}

inline void require_bound(std::size_t max_len) {
  if (const auto cap = enumeration_cap(); max_len > cap)
    throw bound_exceeded(max_len, cap);
}

/// Every accepted action trace of length at most `max_len`.
inline std::set<ActionTrace> enumerate_action_language(const InterfaceAutomaton &a,
                                                       std::size_t max_len) {
  require_bound(max_len);
  std::set<ActionTrace> language;
  if (a.start.empty())
    return language;
  const TransitionIndex index(a);
  const auto sigma = a.alphabet();
  ActionTrace prefix;
  auto visit = [&](auto &self, const StateSet &current) -> void {
    language.insert(prefix);
    if (prefix.size() == max_len)
      return;
    for (const auto &act : sigma) {
      auto next = index.step(current, act);
      if (next.empty())
        continue;
      prefix.push_back(act);
      self(self, next);
      prefix.pop_back();
    }
  };
  visit(visit, a.start);
  return language;
}

inline void require_terminals(const ControllingAutomaton &c, const TransitionTrace &t) {
  for (const auto &name : t)
    for (const auto &atom : name.atoms())
      if (!c.terminals.contains(atom))
        throw unknown_terminal(atom);
}

/// Composite names are consumed in one controller step, with every atom
/// moving between the same pair of states.
inline bool accepts_transition_trace(const ControllingAutomaton &c,
                                     const TransitionTrace &t) {
  require_terminals(c, t);
  const auto succ = detail::successor_map(c);
  StateSet current = c.start;
  for (const auto &name : t) {
    StateSet next;
    for (const auto &q : current)
      next.merge(detail::joint_successors(succ, q, name));
    current = std::move(next);
    if (current.empty())
      return false;
  }
  return !current.empty();
}

struct Theorem1Counterexample {
  ActionTrace trace;
  bool accepted_by_composition;
  bool accepted_by_pair;
};

struct Theorem1Result {
  std::optional<Theorem1Counterexample> counterexample;
  std::size_t traces_checked = 0;

  bool holds() const noexcept { return !counterexample.has_value(); }
};

// Traces outside L(A) ∪ L(C) make both sides false, so checking the union
// of the two bounded languages covers all of Σ^{≤max_len}.
inline Theorem1Result check_theorem1(const InterfaceAutomaton &a,
                                     const ControllingAutomaton &controller,
                                     std::size_t max_len) {
  require_bound(max_len);
  const auto meta = meta_compose(a, controller);
  const auto c = bind_to_subject(a, controller);
  auto traces = enumerate_action_language(a, max_len);
  traces.merge(enumerate_action_language(meta.automaton, max_len));

  Theorem1Result result;
  for (const auto &t : traces) {
    ++result.traces_checked;
    const bool lhs = accepts_actions(meta.automaton, t);
    bool rhs = false;
    if (accepts_actions(a, t))
      for (const auto &run : run_of_actions(a, t))
        if (accepts_transition_trace(c, run)) {
          rhs = true;
          break;
        }
    if (lhs != rhs) {
      result.counterexample = Theorem1Counterexample{t, lhs, rhs};
      break;
    }
  }
  return result;
}

struct ContainmentResult {
  bool contained = true;
  /// First trace of the composition (in lexicographic order) missing from the subject.
  std::optional<ActionTrace> witness;

  explicit operator bool() const noexcept { return contained; }
};

inline ContainmentResult check_containment(const MetaComposition &c,
                                           const InterfaceAutomaton &a,
                                           std::size_t max_len) {
  if (c.subject != a.name)
    throw provenance_mismatch("meta-composition was built over '" + c.subject +
                              "', not '" + a.name + "'");
  if (c.automaton.alphabet() != a.alphabet())
    throw provenance_mismatch("meta-composition alphabet differs from '" + a.name + "'");
  const auto sub = enumerate_action_language(a, max_len);
  ContainmentResult result;
  for (const auto &t : enumerate_action_language(c.automaton, max_len))
    if (!sub.contains(t)) {
      result.contained = false;
      result.witness = t;
      break;
    }
  return result;
}

struct DiagnosisReport {
  /// Subject atoms that label no reachable transition of the composition.
  std::set<std::string> eliminated;
  std::set<std::string> retained;
  /// Subject states that no reachable state of the composition projects to.
  StateSet unreachable_subject_states;
};

inline DiagnosisReport diagnose(const InterfaceAutomaton &a, const ControllingAutomaton &c) {
  const auto meta = meta_compose(a, c);
  const auto live = reachable(meta.automaton);

  DiagnosisReport report;
  for (const auto &t : meta.automaton.transitions)
    if (live.contains(t.from))
      report.retained.insert(t.name.atoms().begin(), t.name.atoms().end());
  for (const auto &atom : a.atoms())
    if (!report.retained.contains(atom))
      report.eliminated.insert(atom);

  StateSet visited;
  for (const auto &s : live)
    visited.insert(meta.components.at(s).first);
  for (const auto &q : a.states)
    if (!visited.contains(q))
      report.unreachable_subject_states.insert(q);
  return report;
}

} // namespace casys
