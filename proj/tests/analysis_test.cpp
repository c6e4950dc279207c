#include <casys/analysis.hpp>
#include <casys/case_studies.hpp>
#include <casys/composition.hpp>

#include "support/oracles.hpp"
#include "support/random_models.hpp"

#include <gtest/gtest.h>

#include <cstdlib>

using namespace casys;

namespace {

InterfaceAutomaton candy_system() {
  return compose(case_studies::candy_machine(), case_studies::candy_user());
}

class ScopedEnv {
public:
  ScopedEnv(const char *name, const char *value) : name_(name) { setenv(name, value, 1); }
  ~ScopedEnv() { unsetenv(name_); }

private:
  const char *name_;
};

} // namespace

TEST(Enumerate, ReactorShortTraces) {
  const auto l = enumerate_action_language(case_studies::reactor(), 2);
  EXPECT_TRUE(l.contains({"c"}));
  EXPECT_TRUE(l.contains({"c", "w"}));
  EXPECT_FALSE(l.contains({"w"}));
  // ε, c, l, cw, cl, la
  EXPECT_EQ(l.size(), 6u);
}

TEST(Enumerate, ZeroBoundAndEmptyStart) {
  auto a = case_studies::reactor();
  EXPECT_EQ(enumerate_action_language(a, 0), std::set<ActionTrace>{{}});
  a.start.clear();
  EXPECT_TRUE(enumerate_action_language(a, 3).empty());
}

TEST(Enumerate, BoundCap) {
  const auto a = case_studies::reactor();
  EXPECT_THROW(enumerate_action_language(a, default_enumeration_cap + 1), bound_exceeded);
  {
    ScopedEnv env("CASYS_MAX_ENUM", "3");
    EXPECT_EQ(enumeration_cap(), 3u);
    EXPECT_THROW(enumerate_action_language(a, 4), bound_exceeded);
    EXPECT_NO_THROW(enumerate_action_language(a, 3));
  }
  EXPECT_EQ(enumeration_cap(), default_enumeration_cap);
}

TEST(TransitionTraces, ReactorController) {
  const auto c = bind_to_subject(case_studies::reactor(), case_studies::reactor_controller());
  EXPECT_FALSE(accepts_transition_trace(c, {"p1", "p2", "p1", "p4", "p5", "p6"}));
  EXPECT_TRUE(accepts_transition_trace(c, {"p1", "p2"}));
  EXPECT_TRUE(accepts_transition_trace(c, {}));
  EXPECT_FALSE(accepts_transition_trace(c, {"p1", "p1"}));
  EXPECT_THROW(accepts_transition_trace(c, {"p77"}), unknown_terminal);
}

TEST(TransitionTraces, UnboundControllerOnlyKnowsMentionedNames) {
  EXPECT_THROW(accepts_transition_trace(case_studies::reactor_controller(), {"p4"}),
               unknown_terminal);
}

TEST(TransitionTraces, CompositeNameUsesOneStep) {
  const auto c = bind_to_subject(candy_system(), case_studies::candy_controller());
  EXPECT_TRUE(accepts_transition_trace(c, {CompositeName{"p3", "p9"}, CompositeName{"p1", "p13"}}));
  EXPECT_FALSE(accepts_transition_trace(c, {CompositeName{"p3", "p9"}, CompositeName{"p5", "p11"}}));
  // p9 moves k0 -> k1 while p5 only loops, so no common target exists.
  EXPECT_FALSE(accepts_transition_trace(c, {CompositeName{"p5", "p9"}}));
}

TEST(Theorem1, Reactor) {
  const auto r = check_theorem1(case_studies::reactor(), case_studies::reactor_controller(), 6);
  EXPECT_TRUE(r.holds());
  EXPECT_GT(r.traces_checked, 0u);
}

TEST(Theorem1, UniversalController) {
  const auto a = candy_system();
  EXPECT_TRUE(check_theorem1(a, universal_controller(a), 6).holds());
}

TEST(Theorem1, RandomInstancesAgainstNaiveEnumerator) {
  testkit::ModelGenerator gen(401);
  for (int i = 0; i < 200; ++i) {
    const auto a = gen.subject();
    const auto c = gen.controller(a);
    const auto r = check_theorem1(a, c, 5);
    ASSERT_TRUE(r.holds()) << "instance " << i;
    const auto m = meta_compose(a, c);
    const auto expected = testkit::naive_controlled_language(a, c, 5);
    EXPECT_EQ(enumerate_action_language(m.automaton, 5), expected) << "instance " << i;
    EXPECT_EQ(testkit::naive_language(m.automaton, 5), expected) << "instance " << i;
  }
}

TEST(Containment, CaseStudies) {
  const auto a = case_studies::reactor();
  EXPECT_TRUE(check_containment(meta_compose(a, case_studies::reactor_controller()), a, 8));
  const auto s = candy_system();
  EXPECT_TRUE(check_containment(meta_compose(s, case_studies::candy_controller()), s, 8));
}

TEST(Containment, MismatchedProvenance) {
  const auto m = meta_compose(case_studies::reactor(), case_studies::reactor_controller());
  EXPECT_THROW(check_containment(m, candy_system(), 3), provenance_mismatch);
}

TEST(Containment, ReportsWitness) {
  const auto a = case_studies::reactor();
  auto m = meta_compose(a, case_studies::reactor_controller());
  auto smaller = a;
  smaller.transitions.erase({"p6", "q3", "e", "q4"});
  smaller.name = a.name;
  const auto r = check_containment(m, smaller, 8);
  EXPECT_FALSE(r.contained);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->back(), "e");
}

TEST(Diagnose, Reactor) {
  const auto d = diagnose(case_studies::reactor(), case_studies::reactor_controller());
  EXPECT_EQ(d.eliminated, std::set<std::string>{"p4"});
  EXPECT_EQ(d.retained, (std::set<std::string>{"p1", "p2", "p3", "p5", "p6"}));
  EXPECT_TRUE(d.unreachable_subject_states.empty());
}

TEST(Diagnose, Candy) {
  const auto d = diagnose(candy_system(), case_studies::candy_controller());
  EXPECT_TRUE(d.eliminated.contains("p11"));
  EXPECT_TRUE(d.eliminated.contains("p12"));
  EXPECT_TRUE(d.retained.contains("p1"));
  EXPECT_TRUE(d.retained.contains("p13"));
  // Already unreachable in the uncontrolled system.
  EXPECT_EQ(d.unreachable_subject_states, (StateSet{"(m0,u1)", "(m1,u0)", "(m2,u0)"}));
  EXPECT_EQ(reachable(candy_system()).size(), 3u);
}

TEST(Diagnose, UniversalControllerEliminatesOnlyUnreachable) {
  auto a = case_studies::reactor();
  a.states.insert("q9");
  a.transitions.insert({"p7", "q9", "e", "q0"});
  const auto d = diagnose(a, universal_controller(a));
  EXPECT_EQ(d.eliminated, std::set<std::string>{"p7"});
  EXPECT_EQ(d.unreachable_subject_states, StateSet{"q9"});
}

TEST(AnalysisProperties, EnumerationIsPrefixClosedAndMonotone) {
  testkit::ModelGenerator gen(402);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.subject();
    const auto l4 = enumerate_action_language(a, 4);
    const auto l5 = enumerate_action_language(a, 5);
    EXPECT_EQ(l5, testkit::naive_language(a, 5));
    for (const auto &t : l4) {
      EXPECT_TRUE(l5.contains(t));
      EXPECT_TRUE(t.empty() || l4.contains(ActionTrace(t.begin(), t.end() - 1)));
    }
  }
}

TEST(AnalysisProperties, EliminatedAtomsNeverFire) {
  testkit::ModelGenerator gen(403);
  for (int i = 0; i < 100; ++i) {
    const auto a = gen.subject();
    const auto c = gen.controller(a);
    const auto d = diagnose(a, c);
    std::set<std::string> all = d.eliminated;
    all.insert(d.retained.begin(), d.retained.end());
    EXPECT_EQ(all, a.atoms());
    for (const auto &atom : d.eliminated)
      EXPECT_FALSE(d.retained.contains(atom));

    // No run of the meta-composition up to length 5 fires an eliminated atom.
    const auto m = meta_compose(a, c);
    for (const auto &t : enumerate_action_language(m.automaton, 5))
      for (const auto &run : run_of_actions(m.automaton, t))
        for (const auto &name : run)
          for (const auto &atom : name.atoms())
            EXPECT_FALSE(d.eliminated.contains(atom)) << atom;

    const auto u = diagnose(a, universal_controller(a));
    const auto live = reachable(a);
    for (const auto &t : a.transitions) {
      if (!live.contains(t.from))
        continue;
      for (const auto &atom : t.name.atoms())
        EXPECT_FALSE(u.eliminated.contains(atom));
    }
  }
}
