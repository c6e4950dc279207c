#pragma once

#include <casys/error.hpp>

#include <algorithm>
#include <compare>
#include <deque>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace casys {

using StateId = std::string;
using StateSet = std::set<StateId>;
using ActionSet = std::set<std::string>;

enum class Polarity { input, output, internal };

/// Suffix used in diagrams: '?' input, '!' output, ';' internal.
inline char polarity_suffix(Polarity p) {
  switch (p) {
  case Polarity::input: return '?';
  case Polarity::output: return '!';
  case Polarity::internal: return ';';
  }
  return ' ';
}

/// Name of a transition. A base transition has a single atom; a
/// synchronized transition of a product carries one atom per operand.
class CompositeName {
public:
  CompositeName() = default;
  CompositeName(std::string atom) { atoms_.insert(std::move(atom)); }
  CompositeName(const char *atom) : CompositeName(std::string(atom)) {}
  CompositeName(std::initializer_list<std::string> atoms) : atoms_(atoms) {}
  explicit CompositeName(std::set<std::string> atoms) : atoms_(std::move(atoms)) {}

  const std::set<std::string> &atoms() const noexcept { return atoms_; }
  std::size_t size() const noexcept { return atoms_.size(); }
  bool empty() const noexcept { return atoms_.empty(); }
  bool is_atomic() const noexcept { return atoms_.size() == 1; }
  bool contains(const std::string &atom) const { return atoms_.contains(atom); }

  /// "p1" for a single atom, "{p1,p13}" otherwise.
  std::string str() const {
    if (atoms_.size() == 1)
      return *atoms_.begin();
    std::string out = "{";
    for (const auto &atom : atoms_) {
      if (out.size() > 1)
        out += ',';
      out += atom;
    }
    return out + "}";
  }

  friend CompositeName merge(const CompositeName &a, const CompositeName &b) {
    auto atoms = a.atoms_;
    atoms.insert(b.atoms_.begin(), b.atoms_.end());
    return CompositeName(std::move(atoms));
  }

  friend bool operator==(const CompositeName &, const CompositeName &) = default;
  friend auto operator<=>(const CompositeName &, const CompositeName &) = default;

private:
  std::set<std::string> atoms_;
};

struct Transition {
  CompositeName name;
  StateId from;
  std::string action;
  StateId to;

  friend bool operator==(const Transition &, const Transition &) = default;
  friend auto operator<=>(const Transition &, const Transition &) = default;
};

using ActionTrace = std::vector<std::string>;
using TransitionTrace = std::vector<CompositeName>;

struct InterfaceAutomaton {
  std::string name;
  StateSet states;
  ActionSet inputs;
  ActionSet outputs;
  ActionSet internals;
  std::set<Transition> transitions;
  StateSet start;

  ActionSet alphabet() const {
    ActionSet all = inputs;
    all.insert(outputs.begin(), outputs.end());
    all.insert(internals.begin(), internals.end());
    return all;
  }

  bool has_action(const std::string &action) const {
    return inputs.contains(action) || outputs.contains(action) ||
           internals.contains(action);
  }

  std::optional<Polarity> polarity(const std::string &action) const {
    if (inputs.contains(action))
      return Polarity::input;
    if (outputs.contains(action))
      return Polarity::output;
    if (internals.contains(action))
      return Polarity::internal;
    return std::nullopt;
  }

  /// Every atomic transition name occurring in the transition relation.
  std::set<std::string> atoms() const {
    std::set<std::string> out;
    for (const auto &t : transitions)
      out.insert(t.name.atoms().begin(), t.name.atoms().end());
    return out;
  }

  friend bool operator==(const InterfaceAutomaton &, const InterfaceAutomaton &) = default;
};

/// Canonical rendering of a pair state.
inline StateId pair_state(const StateId &left, const StateId &right) {
  return "(" + left + "," + right + ")";
}

struct ValidationReport {
  std::vector<std::string> violations;
  /// Informational remarks; they do not make the subject invalid.
  std::vector<std::string> notes;

  bool ok() const noexcept { return violations.empty(); }
};

inline ValidationReport validate_automaton(const InterfaceAutomaton &a) {
  ValidationReport report;
  auto &v = report.violations;

  if (a.start.size() > 1)
    v.push_back("|S| <= 1 violated: " + std::to_string(a.start.size()) +
                " start states");
  for (const auto &s : a.start)
    if (!a.states.contains(s))
      v.push_back("start state '" + s + "' is not a declared state");
  for (const auto &s : a.states)
    if (s.empty())
      v.push_back("empty state id");

  auto overlap = [&](const ActionSet &x, const ActionSet &y, const char *xs,
                     const char *ys) {
    for (const auto &act : x)
      if (y.contains(act))
        v.push_back(std::string("alphabets not disjoint: '") + act + "' is in " +
                    xs + " and " + ys);
  };
  overlap(a.inputs, a.outputs, "inputs", "outputs");
  overlap(a.inputs, a.internals, "inputs", "internals");
  overlap(a.outputs, a.internals, "outputs", "internals");
  for (const auto &act : a.alphabet())
    if (act.empty())
      v.push_back("empty action name");

  std::map<CompositeName, std::string> action_of;
  for (const auto &t : a.transitions) {
    const auto label = "transition " + t.name.str();
    if (t.name.empty())
      v.push_back("transition with an empty name");
    for (const auto &atom : t.name.atoms())
      if (atom.empty())
        v.push_back(label + ": empty atom");
    if (!a.states.contains(t.from))
      v.push_back(label + ": source '" + t.from + "' is not a declared state");
    if (!a.states.contains(t.to))
      v.push_back(label + ": target '" + t.to + "' is not a declared state");
    if (!a.has_action(t.action))
      v.push_back(label + ": action '" + t.action + "' is not in the alphabet");
    auto [it, fresh] = action_of.emplace(t.name, t.action);
    if (!fresh && it->second != t.action)
      v.push_back("duplicate transition name " + t.name.str() + " with actions '" +
                  it->second + "' and '" + t.action + "'");
  }
  return report;
}

inline void require_state(const InterfaceAutomaton &a, const StateId &q) {
  if (!a.states.contains(q))
    throw unknown_state(q);
}

inline void require_actions(const InterfaceAutomaton &a, const ActionTrace &trace) {
  for (const auto &act : trace)
    if (!a.has_action(act))
      throw unknown_action(act);
}

inline std::vector<Transition> enabled(const InterfaceAutomaton &a, const StateId &q) {
  require_state(a, q);
  std::vector<Transition> out;
  for (const auto &t : a.transitions)
    if (t.from == q)
      out.push_back(t);
  return out;
}

/// Outgoing transitions grouped by source state and action.
class TransitionIndex {
public:
  explicit TransitionIndex(const InterfaceAutomaton &a) {
    for (const auto &t : a.transitions)
      by_source_[t.from][t.action].push_back(&t);
  }

  const std::vector<const Transition *> &from(const StateId &q,
                                              const std::string &action) const {
    static const std::vector<const Transition *> none;
    auto s = by_source_.find(q);
    if (s == by_source_.end())
      return none;
    auto t = s->second.find(action);
    return t == s->second.end() ? none : t->second;
  }

  bool can(const StateId &q, const std::string &action) const {
    return !from(q, action).empty();
  }

  StateSet step(const StateSet &current, const std::string &action) const {
    StateSet next;
    for (const auto &q : current)
      for (const auto *t : from(q, action))
        next.insert(t->to);
    return next;
  }

private:
  std::map<StateId, std::map<std::string, std::vector<const Transition *>>> by_source_;
};

/// Run existence: every state accepts, so the language is prefix-closed.
/// With no start state nothing is accepted, not even the empty trace.
inline bool accepts_actions(const InterfaceAutomaton &a, const ActionTrace &trace) {
  require_actions(a, trace);
  if (a.start.empty())
    return false;
  const TransitionIndex index(a);
  StateSet current = a.start;
  for (const auto &act : trace) {
    current = index.step(current, act);
    if (current.empty())
      return false;
  }
  return true;
}

inline std::set<TransitionTrace> run_of_actions(const InterfaceAutomaton &a,
                                                const ActionTrace &trace) {
  require_actions(a, trace);
  std::set<TransitionTrace> runs;
  const TransitionIndex index(a);
  TransitionTrace prefix;
  auto extend = [&](auto &self, const StateId &q, std::size_t i) -> void {
    if (i == trace.size()) {
      runs.insert(prefix);
      return;
    }
    for (const auto *t : index.from(q, trace[i])) {
      prefix.push_back(t->name);
      self(self, t->to, i + 1);
      prefix.pop_back();
    }
  };
  for (const auto &s : a.start)
    extend(extend, s, 0);
  return runs;
}

inline StateSet reachable(const InterfaceAutomaton &a) {
  std::map<StateId, std::vector<StateId>> succ;
  for (const auto &t : a.transitions)
    succ[t.from].push_back(t.to);
  StateSet seen;
  std::deque<StateId> work;
  for (const auto &s : a.start)
    if (seen.insert(s).second)
      work.push_back(s);
  while (!work.empty()) {
    auto q = std::move(work.front());
    work.pop_front();
    for (const auto &n : succ[q])
      if (seen.insert(n).second)
        work.push_back(n);
  }
  return seen;
}

/// Restriction to the forward-reachable part.
inline InterfaceAutomaton trim(const InterfaceAutomaton &a) {
  InterfaceAutomaton out = a;
  out.states = reachable(a);
  std::erase_if(out.transitions,
                [&](const Transition &t) { return !out.states.contains(t.from); });
  return out;
}

} // namespace casys
