#include <casys/automaton.hpp>
#include <casys/case_studies.hpp>

#include "support/random_models.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace casys;

namespace {

bool mentions(const ValidationReport &r, const std::string &needle) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [&](const auto &v) { return v.find(needle) != std::string::npos; });
}

InterfaceAutomaton two_way() {
  return {.name = "nd",
          .states = {"s", "t", "u"},
          .outputs = {"a"},
          .transitions = {{"p1", "s", "a", "t"}, {"p2", "s", "a", "u"}},
          .start = {"s"}};
}

} // namespace

TEST(Validate, ReactorIsValid) {
  const auto report = validate_automaton(case_studies::reactor());
  EXPECT_TRUE(report.ok());
  EXPECT_TRUE(report.violations.empty());
}

TEST(Validate, OverlappingAlphabets) {
  InterfaceAutomaton a{.name = "a", .states = {"s"}, .inputs = {"x"}, .outputs = {"x"},
                       .start = {"s"}};
  const auto report = validate_automaton(a);
  EXPECT_FALSE(report.ok());
  EXPECT_TRUE(mentions(report, "alphabets not disjoint"));
}

TEST(Validate, TooManyStartStates) {
  InterfaceAutomaton a{.name = "a", .states = {"q0", "q1"}, .start = {"q0", "q1"}};
  EXPECT_TRUE(mentions(validate_automaton(a), "|S| <= 1"));
}

TEST(Validate, DanglingReferences) {
  InterfaceAutomaton a{.name = "a", .states = {"q0"}, .outputs = {"x"},
                       .transitions = {{"p1", "q0", "y", "q9"}}, .start = {"q7"}};
  const auto report = validate_automaton(a);
  EXPECT_TRUE(mentions(report, "start state 'q7'"));
  EXPECT_TRUE(mentions(report, "target 'q9'"));
  EXPECT_TRUE(mentions(report, "action 'y'"));
}

TEST(Validate, NameReusedWithDifferentAction) {
  InterfaceAutomaton a{.name = "a", .states = {"q0", "q1"}, .outputs = {"x", "y"},
                       .transitions = {{"p1", "q0", "x", "q1"}, {"p1", "q1", "y", "q0"}},
                       .start = {"q0"}};
  EXPECT_TRUE(mentions(validate_automaton(a), "duplicate transition name p1"));
}

TEST(Validate, EmptyAutomatonIsValid) {
  EXPECT_TRUE(validate_automaton(InterfaceAutomaton{.name = "empty"}).ok());
}

TEST(Enabled, ReactorStates) {
  const auto a = case_studies::reactor();
  EXPECT_EQ(enabled(a, "q0"), (std::vector<Transition>{{"p1", "q0", "c", "q1"},
                                                       {"p3", "q0", "l", "q2"}}));
  EXPECT_EQ(enabled(a, "q1"), (std::vector<Transition>{{"p2", "q1", "w", "q0"},
                                                       {"p4", "q1", "l", "q2"}}));
  EXPECT_TRUE(enabled(a, "q4").empty());
  EXPECT_THROW(enabled(a, "nowhere"), unknown_state);
}

TEST(Accepts, ReactorHazardTrace) {
  const auto a = case_studies::reactor();
  EXPECT_TRUE(accepts_actions(a, {"c", "w", "c", "l", "a", "e"}));
  EXPECT_TRUE(accepts_actions(a, {}));
  EXPECT_FALSE(accepts_actions(a, {"w"}));
  EXPECT_THROW(accepts_actions(a, {"c", "zap"}), unknown_action);
}

TEST(Accepts, EmptyStartAcceptsNothing) {
  auto a = case_studies::reactor();
  a.start.clear();
  EXPECT_FALSE(accepts_actions(a, {}));
  EXPECT_FALSE(accepts_actions(a, {"c"}));
  EXPECT_TRUE(run_of_actions(a, {}).empty());
  EXPECT_TRUE(reachable(a).empty());
}

TEST(Runs, ReactorHazardTrace) {
  const auto runs = run_of_actions(case_studies::reactor(), {"c", "w", "c", "l", "a", "e"});
  EXPECT_EQ(runs, (std::set<TransitionTrace>{{"p1", "p2", "p1", "p4", "p5", "p6"}}));
}

TEST(Runs, EmptyTraceHasTheEmptyRun) {
  EXPECT_EQ(run_of_actions(case_studies::reactor(), {}), std::set<TransitionTrace>{{}});
}

TEST(Runs, NondeterministicBranches) {
  EXPECT_EQ(run_of_actions(two_way(), {"a"}),
            (std::set<TransitionTrace>{{"p1"}, {"p2"}}));
}

TEST(Reachable, ReactorAndIsolatedState) {
  auto a = case_studies::reactor();
  EXPECT_EQ(reachable(a), a.states);
  a.states.insert("z");
  EXPECT_FALSE(reachable(a).contains("z"));
  EXPECT_EQ(trim(a).states, case_studies::reactor().states);
}

TEST(CompositeNameTest, RenderingAndMerge) {
  EXPECT_EQ(CompositeName("p1").str(), "p1");
  EXPECT_EQ(merge(CompositeName("p13"), CompositeName("p1")).str(), "{p1,p13}");
  EXPECT_TRUE(CompositeName({"p1", "p13"}).contains("p13"));
}

// Invariants over random automata.

TEST(AutomatonProperties, AcceptanceMatchesRunsAndIsPrefixClosed) {
  testkit::ModelGenerator gen(101);
  for (int i = 0; i < 150; ++i) {
    const auto a = gen.automaton({});
    const auto sigma = a.alphabet();
    if (sigma.empty())
      continue;
    for (int k = 0; k < 10; ++k) {
      ActionTrace t;
      const int len = gen.uniform(0, 5);
      for (int j = 0; j < len; ++j)
        t.push_back(gen.pick(sigma));
      const bool ok = accepts_actions(a, t);
      EXPECT_EQ(ok, !run_of_actions(a, t).empty());
      if (ok) {
        for (std::size_t n = 0; n <= t.size(); ++n)
          EXPECT_TRUE(accepts_actions(a, ActionTrace(t.begin(), t.begin() + n)));
      }
    }
  }
}

TEST(AutomatonProperties, EnabledPartitionsTransitions) {
  testkit::ModelGenerator gen(102);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.automaton({});
    std::size_t total = 0;
    for (const auto &q : a.states)
      for (const auto &t : enabled(a, q)) {
        EXPECT_EQ(t.from, q);
        ++total;
      }
    EXPECT_EQ(total, a.transitions.size());
  }
}

TEST(AutomatonProperties, ReachableIsAFixedPoint) {
  testkit::ModelGenerator gen(103);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.automaton({});
    const auto r = reachable(a);
    for (const auto &t : a.transitions)
      EXPECT_TRUE(!r.contains(t.from) || r.contains(t.to));
    for (const auto &s : a.start)
      EXPECT_TRUE(r.contains(s));
  }
}
