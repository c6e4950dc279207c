#pragma once

// Command-line front end. Each subcommand reads documents, calls one
// library operation and prints its result.
//
// Exit codes: 0 success, 1 the analysis found a violation (invalid model,
// rejected trace, counterexample), 2 usage or input error.

#include <casys/casys.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace casys::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_input = 2;

class io_error : public error {
public:
  using error::error;
};

inline std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw io_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_file(const std::string &path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw io_error("cannot write '" + path + "'");
  out << content;
}

inline InterfaceAutomaton load_automaton(const std::string &path) {
  return parse_automaton(read_file(path));
}

inline ControllingAutomaton load_controller(const std::string &path) {
  return parse_controller(read_file(path));
}

inline bool is_controller_document(const std::string &text) {
  try {
    auto doc = nlohmann::json::parse(text, nullptr, false, true);
    return doc.is_object() && doc.contains("subject");
  } catch (...) {
    return false;
  }
}

inline std::string join(const std::vector<std::string> &items, const char *sep = " ") {
  std::string out;
  for (const auto &item : items) {
    if (!out.empty())
      out += sep;
    out += item;
  }
  return out;
}

inline std::string trace_text(const ActionTrace &t) {
  return t.empty() ? std::string("ε") : join(t);
}

inline std::string trace_text(const TransitionTrace &t) {
  if (t.empty())
    return "ε";
  std::vector<std::string> names;
  for (const auto &n : t)
    names.push_back(n.str());
  return join(names);
}

inline nlohmann::json trace_json(const TransitionTrace &t) {
  auto out = nlohmann::json::array();
  for (const auto &n : t)
    out.push_back(n.is_atomic() ? nlohmann::json(*n.atoms().begin())
                                : nlohmann::json(n.atoms()));
  return out;
}

inline std::vector<std::string> split_actions(const std::string &list) {
  std::vector<std::string> out;
  if (list.empty())
    return out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    out.push_back(item);
  return out;
}

// Shortest first, then lexicographic.
inline std::vector<ActionTrace> by_length(const std::set<ActionTrace> &traces) {
  std::vector<ActionTrace> out(traces.begin(), traces.end());
  std::stable_sort(out.begin(), out.end(), [](const auto &x, const auto &y) {
    return x.size() < y.size();
  });
  return out;
}

inline void emit(std::ostream &out, const std::optional<std::string> &path,
                 const std::string &content) {
  if (path)
    write_file(*path, content);
  else
    out << content;
}

inline void print_report(std::ostream &out, const ValidationReport &report, bool json) {
  if (json) {
    nlohmann::json doc{{"valid", report.ok()},
                       {"violations", report.violations},
                       {"notes", report.notes}};
    out << doc.dump(2) << "\n";
    return;
  }
  out << (report.ok() ? "valid" : "invalid") << "\n";
  for (const auto &v : report.violations)
    out << "violation: " << v << "\n";
  for (const auto &n : report.notes)
    out << "note: " << n << "\n";
}

inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Interface automata, controlling automata and meta-composition", "casys"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Machine-readable report");

  std::string file_a, file_b, subject_file, actions, study, dir;
  std::optional<std::string> output;
  std::size_t max_len = 6;

  auto *validate = app.add_subcommand("validate", "Check an automaton or controller document");
  validate->add_option("file", file_a)->required();
  validate->add_option("--subject", subject_file, "Subject automaton of a controller");

  auto *prod = app.add_subcommand("product", "Product of two automata");
  auto *comp = app.add_subcommand("compose", "Composition of two automata");
  for (auto *sub : {prod, comp}) {
    sub->add_option("a", file_a)->required();
    sub->add_option("b", file_b)->required();
    sub->add_option("-o,--output", output);
  }

  auto *meta = app.add_subcommand("metacompose", "Meta-compose a system with its controller");
  meta->add_option("system", file_a)->required();
  meta->add_option("controller", file_b)->required();
  meta->add_option("-o,--output", output);

  auto *trace = app.add_subcommand("check-trace", "Check an action trace against an automaton");
  trace->add_option("automaton", file_a)->required();
  trace->add_option("--actions", actions, "Comma-separated actions")->required();

  auto *enumerate = app.add_subcommand("enumerate", "List the bounded action language");
  enumerate->add_option("automaton", file_a)->required();
  enumerate->add_option("--max-len", max_len);

  auto *theorem = app.add_subcommand("check-theorem1",
                                     "Check the trace characterization of a meta-composition");
  theorem->add_option("system", file_a)->required();
  theorem->add_option("controller", file_b)->required();
  theorem->add_option("--max-len", max_len);

  auto *diag = app.add_subcommand("diagnose", "Report transitions eliminated by a controller");
  diag->add_option("system", file_a)->required();
  diag->add_option("controller", file_b)->required();

  auto *dot = app.add_subcommand("dot", "Export an automaton as Graphviz");
  dot->add_option("file", file_a)->required();
  dot->add_option("-o,--output", output);

  auto *example = app.add_subcommand("example", "Write the documents of a built-in case study");
  example->add_option("study", study)->required()->check(CLI::IsMember({"reactor", "candy"}));
  example->add_option("--dir", dir)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp &e) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::ParseError &e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }

  try {
    if (*validate) {
      const auto text = read_file(file_a);
      if (is_controller_document(text)) {
        const auto c = parse_controller(text);
        const auto report = subject_file.empty()
                                ? validate_controller(c)
                                : validate_controlling(load_automaton(subject_file), c);
        print_report(out, report, json);
        return report.ok() ? exit_ok : exit_violation;
      }
      const auto report = validate_automaton(parse_automaton(text));
      print_report(out, report, json);
      return report.ok() ? exit_ok : exit_violation;
    }

    if (*prod || *comp) {
      const auto a = load_automaton(file_a);
      const auto b = load_automaton(file_b);
      const auto result = *prod ? product(a, b).automaton : compose(a, b);
      emit(out, output, serialize_automaton(result));
      return exit_ok;
    }

    if (*meta) {
      const auto m = meta_compose(load_automaton(file_a), load_controller(file_b));
      emit(out, output, serialize_automaton(m.automaton));
      return exit_ok;
    }

    if (*trace) {
      const auto a = load_automaton(file_a);
      const auto t = split_actions(actions);
      const bool ok = accepts_actions(a, t);
      const auto runs = run_of_actions(a, t);
      if (json) {
        auto rs = nlohmann::json::array();
        for (const auto &r : runs)
          rs.push_back(trace_json(r));
        out << nlohmann::json{{"accepted", ok}, {"runs", rs}}.dump(2) << "\n";
      } else {
        out << (ok ? "accepted" : "rejected") << "\n";
        for (const auto &r : runs)
          out << "run: " << trace_text(r) << "\n";
      }
      return ok ? exit_ok : exit_violation;
    }

    if (*enumerate) {
      const auto language = enumerate_action_language(load_automaton(file_a), max_len);
      const auto ordered = by_length(language);
      if (json)
        out << nlohmann::json(ordered).dump(2) << "\n";
      else
        for (const auto &t : ordered)
          out << trace_text(t) << "\n";
      return exit_ok;
    }

    if (*theorem) {
      const auto result =
          check_theorem1(load_automaton(file_a), load_controller(file_b), max_len);
      if (json) {
        nlohmann::json doc{{"holds", result.holds()},
                           {"traces_checked", result.traces_checked},
                           {"max_len", max_len}};
        if (const auto &cx = result.counterexample)
          doc["counterexample"] = {{"trace", cx->trace},
                                   {"accepted_by_composition", cx->accepted_by_composition},
                                   {"accepted_by_pair", cx->accepted_by_pair}};
        out << doc.dump(2) << "\n";
      } else if (result.holds()) {
        out << "holds: " << result.traces_checked << " traces up to length " << max_len
            << "\n";
      } else {
        const auto &cx = *result.counterexample;
        out << "counterexample: " << trace_text(cx.trace) << "\n"
            << "  meta-composition accepts: " << (cx.accepted_by_composition ? "yes" : "no")
            << "\n"
            << "  system and controller accept: " << (cx.accepted_by_pair ? "yes" : "no")
            << "\n";
      }
      return result.holds() ? exit_ok : exit_violation;
    }

    if (*diag) {
      const auto report = diagnose(load_automaton(file_a), load_controller(file_b));
      if (json) {
        out << nlohmann::json{{"eliminated", report.eliminated},
                              {"retained", report.retained},
                              {"unreachable_subject_states",
                               report.unreachable_subject_states}}
                   .dump(2)
            << "\n";
      } else {
        auto line = [&](const char *label, const std::set<std::string> &items) {
          out << label << ":";
          for (const auto &item : items)
            out << " " << item;
          out << "\n";
        };
        line("eliminated", report.eliminated);
        line("retained", report.retained);
        line("unreachable subject states", report.unreachable_subject_states);
      }
      return exit_ok;
    }

    if (*dot) {
      emit(out, output, to_dot(load_automaton(file_a)));
      return exit_ok;
    }

    if (*example) {
      std::filesystem::create_directories(dir);
      for (const auto &[file, content] : case_studies::documents(study)) {
        const auto path = (std::filesystem::path(dir) / file).string();
        write_file(path, content);
        out << path << "\n";
      }
      return exit_ok;
    }
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return exit_input;
  }
  return exit_input;
}

inline int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i)
    args.emplace_back(argv[i]);
  return run(args, out, err);
}

} // namespace casys::cli
