#pragma once

#include <casys/automaton.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace casys {

inline ActionSet shared(const InterfaceAutomaton &a, const InterfaceAutomaton &b) {
  ActionSet out;
  for (const auto &act : a.alphabet())
    if (b.has_action(act))
      out.insert(act);
  return out;
}

struct Composability {
  bool composable = true;
  std::vector<std::string> reasons;

  explicit operator bool() const noexcept { return composable; }
};

inline Composability composable(const InterfaceAutomaton &a, const InterfaceAutomaton &b) {
  Composability result;
  auto clause = [&](const ActionSet &x, auto &&in_y, const std::string &text) {
    for (const auto &act : x)
      if (in_y(act))
        result.reasons.push_back(text + " (shares '" + act + "')");
  };
  clause(a.internals, [&](const std::string &x) { return b.has_action(x); },
         "internals of " + a.name + " meet the alphabet of " + b.name);
  clause(a.inputs, [&](const std::string &x) { return b.inputs.contains(x); },
         "inputs of " + a.name + " and " + b.name + " overlap");
  clause(a.outputs, [&](const std::string &x) { return b.outputs.contains(x); },
         "outputs of " + a.name + " and " + b.name + " overlap");
  clause(b.internals, [&](const std::string &x) { return a.has_action(x); },
         "internals of " + b.name + " meet the alphabet of " + a.name);
  result.composable = result.reasons.empty();
  return result;
}

/// A ⊗ B together with what is needed to reason about its operands.
struct ProductAutomaton {
  InterfaceAutomaton automaton;
  InterfaceAutomaton left;
  InterfaceAutomaton right;
  ActionSet shared_actions;
  std::map<StateId, std::pair<StateId, StateId>> components;
};

inline ProductAutomaton product(const InterfaceAutomaton &a, const InterfaceAutomaton &b) {
  if (auto c = composable(a, b); !c)
    throw not_composable(std::move(c.reasons));

  ProductAutomaton p{.left = a, .right = b, .shared_actions = shared(a, b)};
  const auto &sh = p.shared_actions;
  auto &out = p.automaton;
  out.name = a.name + "*" + b.name;

  for (const auto &v : a.states)
    for (const auto &u : b.states) {
      auto id = pair_state(v, u);
      out.states.insert(id);
      p.components.emplace(id, std::pair{v, u});
    }

  auto keep_unshared = [&](const ActionSet &x, const ActionSet &y, ActionSet &into) {
    for (const auto *set : {&x, &y})
      for (const auto &act : *set)
        if (!sh.contains(act))
          into.insert(act);
  };
  keep_unshared(a.inputs, b.inputs, out.inputs);
  keep_unshared(a.outputs, b.outputs, out.outputs);
  out.internals = a.internals;
  out.internals.insert(b.internals.begin(), b.internals.end());
  out.internals.insert(sh.begin(), sh.end());

  for (const auto &t : a.transitions) {
    if (sh.contains(t.action))
      continue;
    for (const auto &u : b.states)
      out.transitions.insert({t.name, pair_state(t.from, u), t.action, pair_state(t.to, u)});
  }
  for (const auto &t : b.transitions) {
    if (sh.contains(t.action))
      continue;
    for (const auto &v : a.states)
      out.transitions.insert({t.name, pair_state(v, t.from), t.action, pair_state(v, t.to)});
  }
  for (const auto &ta : a.transitions) {
    if (!sh.contains(ta.action))
      continue;
    for (const auto &tb : b.transitions)
      if (tb.action == ta.action)
        out.transitions.insert({merge(ta.name, tb.name), pair_state(ta.from, tb.from),
                                ta.action, pair_state(ta.to, tb.to)});
  }

  for (const auto &s : a.start)
    for (const auto &r : b.start)
      out.start.insert(pair_state(s, r));
  return p;
}

/// Pair states where one side can emit a shared output the other side
/// cannot currently receive.
inline StateSet illegal_states(const ProductAutomaton &p) {
  const TransitionIndex left(p.left);
  const TransitionIndex right(p.right);
  StateSet out;
  for (const auto &[id, pair] : p.components) {
    const auto &[v, u] = pair;
    for (const auto &act : p.shared_actions) {
      bool bad = (p.left.outputs.contains(act) && left.can(v, act) &&
                  !(p.right.inputs.contains(act) && right.can(u, act))) ||
                 (p.right.outputs.contains(act) && right.can(u, act) &&
                  !(p.left.inputs.contains(act) && left.can(v, act)));
      if (bad) {
        out.insert(id);
        break;
      }
    }
  }
  return out;
}

// The environment controls only the product's inputs. A state is
// incompatible once an output or internal step can carry it into an
// incompatible state, so Cmp is the complement of the backward closure
// of the illegal states under those steps.
inline StateSet compatible_states(const ProductAutomaton &p) {
  const auto &aut = p.automaton;
  StateSet bad = illegal_states(p);
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto &t : aut.transitions) {
      if (aut.inputs.contains(t.action) || bad.contains(t.from) || !bad.contains(t.to))
        continue;
      bad.insert(t.from);
      changed = true;
    }
  }
  StateSet good;
  for (const auto &s : aut.states)
    if (!bad.contains(s))
      good.insert(s);
  return good;
}

/// A || B: the product restricted to its compatible states. The start set
/// is empty when the product's start state is incompatible.
inline InterfaceAutomaton compose(const InterfaceAutomaton &a, const InterfaceAutomaton &b) {
  const auto p = product(a, b);
  const auto cmp = compatible_states(p);
  InterfaceAutomaton out = p.automaton;
  out.name = a.name + "||" + b.name;
  out.states = cmp;
  std::erase_if(out.transitions, [&](const Transition &t) {
    return !cmp.contains(t.from) || !cmp.contains(t.to);
  });
  std::erase_if(out.start, [&](const StateId &s) { return !cmp.contains(s); });
  return out;
}

} // namespace casys
