#pragma once

#include <casys/automaton.hpp>
#include <casys/control.hpp>

#include <nlohmann/json.hpp>

#include <cstddef>
#include <initializer_list>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>

namespace casys {

namespace detail {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                       std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

inline json parse_json(std::string_view text) {
  try {
    return json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error &e) {
    auto [line, column] = line_column(text, e.byte);
    std::string what = e.what();
    if (auto pos = what.find("syntax error"); pos != std::string::npos)
      what = what.substr(pos);
    throw parse_error(what, line, column);
  }
}

[[noreturn]] inline void structural(const std::string &path, const std::string &message) {
  throw parse_error(path + ": " + message, 0, 0);
}

inline void only_keys(const json &obj, const std::string &path,
                      std::initializer_list<std::string_view> allowed) {
  if (!obj.is_object())
    structural(path.empty() ? "/" : path, "expected an object");
  for (const auto &[key, value] : obj.items()) {
    bool known = false;
    for (auto k : allowed)
      known = known || k == key;
    if (!known)
      structural(path + "/" + key, "unknown key");
  }
}

inline const json &member(const json &obj, const std::string &path, const char *key) {
  auto it = obj.find(key);
  if (it == obj.end())
    structural(path + "/" + key, "missing key");
  return *it;
}

inline std::string string_at(const json &value, const std::string &path) {
  if (!value.is_string())
    structural(path, "expected a string");
  return value.get<std::string>();
}

inline std::set<std::string> string_set(const json &value, const std::string &path) {
  if (!value.is_array())
    structural(path, "expected an array of strings");
  std::set<std::string> out;
  for (std::size_t i = 0; i < value.size(); ++i) {
    auto item = string_at(value[i], path + "/" + std::to_string(i));
    if (!out.insert(item).second)
      structural(path + "/" + std::to_string(i), "duplicate entry '" + item + "'");
  }
  return out;
}

inline std::set<std::string> optional_set(const json &obj, const std::string &path,
                                          const char *key) {
  auto it = obj.find(key);
  return it == obj.end() ? std::set<std::string>{} : string_set(*it, path + "/" + key);
}

inline CompositeName name_at(const json &value, const std::string &path) {
  if (value.is_string())
    return CompositeName(value.get<std::string>());
  auto atoms = string_set(value, path);
  if (atoms.empty())
    structural(path, "transition name needs at least one atom");
  return CompositeName(std::move(atoms));
}

inline ordered_json name_json(const CompositeName &name) {
  if (name.is_atomic())
    return *name.atoms().begin();
  return ordered_json(name.atoms());
}

} // namespace detail

/// Reads an automaton document. Only the document shape is checked here;
/// semantic rules are left to validate_automaton().
inline InterfaceAutomaton parse_automaton(std::string_view text) {
  using namespace detail;
  const auto doc = parse_json(text);
  only_keys(doc, "",
            {"name", "states", "start", "inputs", "outputs", "internals", "transitions"});

  InterfaceAutomaton a;
  a.name = string_at(member(doc, "", "name"), "/name");
  a.states = string_set(member(doc, "", "states"), "/states");
  a.start = string_set(member(doc, "", "start"), "/start");
  a.inputs = optional_set(doc, "", "inputs");
  a.outputs = optional_set(doc, "", "outputs");
  a.internals = optional_set(doc, "", "internals");

  const auto &ts = member(doc, "", "transitions");
  if (!ts.is_array())
    structural("/transitions", "expected an array");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto path = "/transitions/" + std::to_string(i);
    only_keys(ts[i], path, {"name", "from", "action", "to"});
    Transition t{name_at(member(ts[i], path, "name"), path + "/name"),
                 string_at(member(ts[i], path, "from"), path + "/from"),
                 string_at(member(ts[i], path, "action"), path + "/action"),
                 string_at(member(ts[i], path, "to"), path + "/to")};
    const auto label = t.name.str();
    if (!a.transitions.insert(std::move(t)).second)
      structural(path, "duplicate transition name " + label);
  }
  return a;
}

inline std::string serialize_automaton(const InterfaceAutomaton &a) {
  detail::ordered_json doc;
  doc["name"] = a.name;
  doc["states"] = a.states;
  doc["start"] = a.start;
  doc["inputs"] = a.inputs;
  doc["outputs"] = a.outputs;
  doc["internals"] = a.internals;
  auto ts = detail::ordered_json::array();
  for (const auto &t : a.transitions) {
    detail::ordered_json item;
    item["name"] = detail::name_json(t.name);
    item["from"] = t.from;
    item["action"] = t.action;
    item["to"] = t.to;
    ts.push_back(std::move(item));
  }
  doc["transitions"] = std::move(ts);
  return doc.dump(2) + "\n";
}

/// Reads a controller document. Terminals are the names the document
/// mentions; `allow_elsewhere` is expanded into self-loops.
inline ControllingAutomaton parse_controller(std::string_view text) {
  using namespace detail;
  const auto doc = parse_json(text);
  only_keys(doc, "", {"name", "subject", "states", "start", "transitions", "allow_elsewhere"});

  ControllingAutomaton c;
  c.name = string_at(member(doc, "", "name"), "/name");
  c.subject = string_at(member(doc, "", "subject"), "/subject");
  c.states = string_set(member(doc, "", "states"), "/states");
  c.start = string_set(member(doc, "", "start"), "/start");

  const auto &ts = member(doc, "", "transitions");
  if (!ts.is_array())
    structural("/transitions", "expected an array");
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const auto path = "/transitions/" + std::to_string(i);
    only_keys(ts[i], path, {"from", "terminal", "to"});
    ControlTransition t{string_at(member(ts[i], path, "from"), path + "/from"),
                        string_at(member(ts[i], path, "terminal"), path + "/terminal"),
                        string_at(member(ts[i], path, "to"), path + "/to")};
    c.terminals.insert(t.terminal);
    if (!c.transitions.insert(std::move(t)).second)
      structural(path, "duplicate transition");
  }
  const auto elsewhere = optional_set(doc, "", "allow_elsewhere");
  c.terminals.insert(elsewhere.begin(), elsewhere.end());
  return complete_selfloops(std::move(c), elsewhere);
}

inline std::string serialize_controller(const ControllingAutomaton &c) {
  detail::ordered_json doc;
  doc["name"] = c.name;
  doc["subject"] = c.subject;
  doc["states"] = c.states;
  doc["start"] = c.start;
  auto ts = detail::ordered_json::array();
  for (const auto &t : c.transitions)
    ts.push_back({{"from", t.from}, {"terminal", t.terminal}, {"to", t.to}});
  doc["transitions"] = std::move(ts);
  return doc.dump(2) + "\n";
}

namespace detail {

inline std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"' || ch == '\\')
      out += '\\';
    out += ch;
  }
  return out + "\"";
}

} // namespace detail

/// Graphviz rendering. Edges read "name: action" followed by the polarity
/// suffix; start states get an entry arrow from an invisible point node.
inline std::string to_dot(const InterfaceAutomaton &a) {
  using detail::dot_quote;
  std::ostringstream out;
  out << "digraph " << dot_quote(a.name) << " {\n";
  out << "  rankdir=LR;\n";
  out << "  node [shape=circle];\n";
  std::size_t entry = 0;
  for (const auto &s : a.start) {
    const auto id = "__start" + std::to_string(entry++);
    out << "  " << dot_quote(id) << " [shape=point, label=\"\"];\n";
    out << "  " << dot_quote(id) << " -> " << dot_quote(s) << ";\n";
  }
  for (const auto &s : a.states)
    out << "  " << dot_quote(s) << ";\n";

  // Order edges by source state, then by name, independent of Transition's ordering.
  std::set<std::tuple<StateId, CompositeName, std::string, StateId>> edges;
  for (const auto &t : a.transitions)
    edges.emplace(t.from, t.name, t.action, t.to);
  for (const auto &[from, name, action, to] : edges) {
    std::string label = name.str() + ": " + action;
    if (auto p = a.polarity(action))
      label += polarity_suffix(*p);
    out << "  " << dot_quote(from) << " -> " << dot_quote(to)
        << " [label=" << dot_quote(label) << "];\n";
  }
  out << "}\n";
  return out.str();
}

inline std::string to_dot(const MetaComposition &m) { return to_dot(m.automaton); }

} // namespace casys
