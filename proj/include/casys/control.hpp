#pragma once

#include <casys/automaton.hpp>

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace casys {

struct ControlTransition {
  StateId from;
  std::string terminal;
  StateId to;

  friend bool operator==(const ControlTransition &, const ControlTransition &) = default;
  friend auto operator<=>(const ControlTransition &, const ControlTransition &) = default;
};

/// An automaton whose terminals are the transition names of a subject
/// automaton. Terminals absent from the transition relation are blocked.
struct ControllingAutomaton {
  std::string name;
  std::string subject;
  StateSet states;
  std::set<std::string> terminals;
  std::set<ControlTransition> transitions;
  StateSet start;

  friend bool operator==(const ControllingAutomaton &, const ControllingAutomaton &) = default;
};

/// Invariants that hold independently of the subject automaton.
inline ValidationReport validate_controller(const ControllingAutomaton &c) {
  ValidationReport report;
  auto &v = report.violations;
  if (c.start.empty())
    v.push_back("start set must be nonempty");
  for (const auto &s : c.start)
    if (!c.states.contains(s))
      v.push_back("start state '" + s + "' is not a declared state");
  for (const auto &t : c.transitions) {
    const auto label = "transition (" + t.from + ", " + t.terminal + ", " + t.to + ")";
    if (!c.states.contains(t.from))
      v.push_back(label + ": source is not a declared state");
    if (!c.states.contains(t.to))
      v.push_back(label + ": target is not a declared state");
    if (!c.terminals.contains(t.terminal))
      v.push_back(label + ": terminal '" + t.terminal + "' is not declared");
  }
  return report;
}

inline ValidationReport validate_controlling(const InterfaceAutomaton &a,
                                             const ControllingAutomaton &c) {
  ValidationReport report = validate_controller(c);
  auto &v = report.violations;
  const auto atoms = a.atoms();

  if (c.subject != a.name)
    v.push_back("subject mismatch: controller '" + c.name + "' is over '" + c.subject +
                "', not '" + a.name + "'");
  for (const auto &s : c.states)
    if (a.states.contains(s))
      v.push_back("state '" + s + "' is not disjoint from the subject's states");

  std::set<std::string> used;
  for (const auto &t : c.transitions)
    used.insert(t.terminal);
  std::set<std::string> mentioned = c.terminals;
  mentioned.insert(used.begin(), used.end());
  for (const auto &t : mentioned)
    if (!atoms.contains(t))
      v.push_back("unknown terminal '" + t + "'");
  for (const auto &atom : atoms)
    if (!used.contains(atom))
      report.notes.push_back("subject transition " + atom + " is never enabled");
  return report;
}

/// Adds a self-loop (q, t, q) for every state q and every t in `scope`
/// that has no outgoing transition on t from q.
inline ControllingAutomaton complete_selfloops(ControllingAutomaton c,
                                               const std::set<std::string> &scope) {
  for (const auto &t : scope)
    if (!c.terminals.contains(t))
      throw unknown_terminal(t);
  std::set<std::pair<StateId, std::string>> has_out;
  for (const auto &t : c.transitions)
    has_out.emplace(t.from, t.terminal);
  for (const auto &q : c.states)
    for (const auto &t : scope)
      if (!has_out.contains({q, t}))
        c.transitions.insert({q, t, q});
  return c;
}

/// Widens the terminal alphabet of `c` to every atom of `a`, the full
/// transition set of its subject. Atoms that `c` never mentions stay blocked.
inline ControllingAutomaton bind_to_subject(const InterfaceAutomaton &a,
                                            ControllingAutomaton c) {
  const auto atoms = a.atoms();
  c.terminals.insert(atoms.begin(), atoms.end());
  return c;
}

/// The single-state controller that allows every transition of `a`.
inline ControllingAutomaton universal_controller(const InterfaceAutomaton &a) {
  StateId q = "u";
  while (a.states.contains(q))
    q += '\'';
  const auto atoms = a.atoms();
  ControllingAutomaton c{.name = "universal", .subject = a.name, .states = {q},
                         .terminals = atoms, .start = {q}};
  return complete_selfloops(std::move(c), atoms);
}

/// Where a transition of the meta-composition comes from.
struct Provenance {
  Transition subject;
  /// One controller step per atom, all between the same pair of states.
  std::vector<ControlTransition> controller;
};

struct MetaComposition {
  InterfaceAutomaton automaton;
  std::string subject;
  std::string controller;
  std::map<StateId, std::pair<StateId, StateId>> components;
  std::map<Transition, Provenance> provenance;
};

namespace detail {

// Controller states reachable from q in one step that consumes every atom
// of `name` between the same pair of states.
inline StateSet joint_successors(
    const std::map<std::pair<StateId, std::string>, StateSet> &succ, const StateId &q,
    const CompositeName &name) {
  StateSet targets;
  bool first = true;
  for (const auto &atom : name.atoms()) {
    auto it = succ.find({q, atom});
    if (it == succ.end())
      return {};
    if (first) {
      targets = it->second;
      first = false;
      continue;
    }
    std::erase_if(targets, [&](const StateId &s) { return !it->second.contains(s); });
    if (targets.empty())
      break;
  }
  return targets;
}

inline std::map<std::pair<StateId, std::string>, StateSet>
successor_map(const ControllingAutomaton &c) {
  std::map<std::pair<StateId, std::string>, StateSet> succ;
  for (const auto &t : c.transitions)
    succ[{t.from, t.terminal}].insert(t.to);
  return succ;
}

} // namespace detail

/// C = A ·→ Â. A transition named p_I fires from (q, q̂) to (q', q̂') iff
/// A has it from q to q' and Â has (q̂, p_k, q̂') for every atom k of I.
/// Single-atom names are the plain single-automaton case.
inline MetaComposition meta_compose(const InterfaceAutomaton &a,
                                    const ControllingAutomaton &c) {
  if (auto report = validate_controlling(a, c); !report.ok())
    throw validation_failed(std::move(report.violations));

  MetaComposition m{.subject = a.name, .controller = c.name};
  auto &out = m.automaton;
  out.name = a.name + "->" + c.name;
  out.inputs = a.inputs;
  out.outputs = a.outputs;
  out.internals = a.internals;
  for (const auto &q : a.states)
    for (const auto &k : c.states) {
      auto id = pair_state(q, k);
      out.states.insert(id);
      m.components.emplace(id, std::pair{q, k});
    }
  for (const auto &s : a.start)
    for (const auto &k : c.start)
      out.start.insert(pair_state(s, k));

  const auto succ = detail::successor_map(c);
  for (const auto &t : a.transitions)
    for (const auto &k : c.states)
      for (const auto &k2 : detail::joint_successors(succ, k, t.name)) {
        Transition mt{t.name, pair_state(t.from, k), t.action, pair_state(t.to, k2)};
        Provenance prov{.subject = t};
        for (const auto &atom : t.name.atoms())
          prov.controller.push_back({k, atom, k2});
        out.transitions.insert(mt);
        m.provenance.emplace(std::move(mt), std::move(prov));
      }
  return m;
}

} // namespace casys
