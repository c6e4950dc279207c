#pragma once

// Built-in case studies: a batch chemical reactor controller with an
// ordering constraint on its valves, and a candy machine used by a greedy
// customer. The documents below are shipped verbatim under fixtures/.

#include <casys/automaton.hpp>
#include <casys/control.hpp>
#include <casys/io.hpp>

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace casys::case_studies {

inline constexpr std::string_view reactor_document = R"json(// Reactor control computer.
//   input    l  low oil level in the gearbox
//   outputs  c  open the catalyst flow
//            w  open the cooling water flow
//            a  sound the alarm
//   internal e  end all operations
// Normal operation alternates p1 (c) and p2 (w) between q0 and q1. Both
// q0 (p3) and q1 (p4) react to l by moving to q2, which sounds the alarm
// (p5) and then ends (p6). Reconstruction choice: p6 leads to a separate
// final state q4 with no outgoing transitions.
{
  "name": "reactor",
  "states": ["q0", "q1", "q2", "q3", "q4"],
  "start": ["q0"],
  "inputs": ["l"],
  "outputs": ["a", "c", "w"],
  "internals": ["e"],
  "transitions": [
    {"name": "p1", "from": "q0", "action": "c", "to": "q1"},
    {"name": "p2", "from": "q1", "action": "w", "to": "q0"},
    {"name": "p3", "from": "q0", "action": "l", "to": "q2"},
    {"name": "p4", "from": "q1", "action": "l", "to": "q2"},
    {"name": "p5", "from": "q2", "action": "a", "to": "q3"},
    {"name": "p6", "from": "q3", "action": "e", "to": "q4"}
  ]
}
)json";

inline constexpr std::string_view reactor_controller_document = R"json(// Safety constraint over the reactor: once the catalyst flow is opened
// (p1), the next transition must open the water flow (p2). k1 waits for
// p2. p4 appears nowhere, so it is never enabled.
{
  "name": "reactor-control",
  "subject": "reactor",
  "states": ["k0", "k1"],
  "start": ["k0"],
  "transitions": [
    {"from": "k0", "terminal": "p1", "to": "k1"},
    {"from": "k1", "terminal": "p2", "to": "k0"},
    {"from": "k0", "terminal": "p3", "to": "k0"},
    {"from": "k0", "terminal": "p5", "to": "k0"},
    {"from": "k0", "terminal": "p6", "to": "k0"}
  ]
}
)json";

inline constexpr std::string_view candy_machine_document = R"json(// Candy machine. Buttons b1 and b2 are inputs; it dispenses a SKYBAR (s)
// or an ALMONDJOY (a). m1 and m2 remember the last button pressed, and
// further presses only change the selection before a candy is delivered.
// Reconstruction choice: the machine accepts both buttons in every state.
{
  "name": "machine",
  "states": ["m0", "m1", "m2"],
  "start": ["m0"],
  "inputs": ["b1", "b2"],
  "outputs": ["a", "s"],
  "internals": [],
  "transitions": [
    {"name": "p1", "from": "m1", "action": "s", "to": "m0"},
    {"name": "p2", "from": "m2", "action": "a", "to": "m0"},
    {"name": "p3", "from": "m0", "action": "b1", "to": "m1"},
    {"name": "p4", "from": "m0", "action": "b2", "to": "m2"},
    {"name": "p5", "from": "m1", "action": "b1", "to": "m1"},
    {"name": "p6", "from": "m1", "action": "b2", "to": "m2"},
    {"name": "p7", "from": "m2", "action": "b1", "to": "m1"},
    {"name": "p8", "from": "m2", "action": "b2", "to": "m2"}
  ]
}
)json";

inline constexpr std::string_view candy_user_document = R"json(// Greedy customer. p9 and p10 push a button; in u1 the customer may push
// again (p11, p12) instead of waiting for the candy (p13, p14).
// Reconstruction choice: p15 and p16 let an idle customer take a candy, so
// the customer can always receive what the machine emits and the product
// with the machine has no illegal states.
{
  "name": "user",
  "states": ["u0", "u1"],
  "start": ["u0"],
  "inputs": ["a", "s"],
  "outputs": ["b1", "b2"],
  "internals": [],
  "transitions": [
    {"name": "p9", "from": "u0", "action": "b1", "to": "u1"},
    {"name": "p10", "from": "u0", "action": "b2", "to": "u1"},
    {"name": "p11", "from": "u1", "action": "b1", "to": "u1"},
    {"name": "p12", "from": "u1", "action": "b2", "to": "u1"},
    {"name": "p13", "from": "u1", "action": "s", "to": "u0"},
    {"name": "p14", "from": "u1", "action": "a", "to": "u0"},
    {"name": "p15", "from": "u0", "action": "s", "to": "u0"},
    {"name": "p16", "from": "u0", "action": "a", "to": "u0"}
  ]
}
)json";

inline constexpr std::string_view candy_controller_document = R"json(// Constraint over machine||user: after pushing a button (p9, p10) the
// customer must wait for a candy (p13, p14) and may not push again
// (p11, p12 never appear). A synchronized step fires only when all of its
// atoms move between the same pair of controller states, so the machine
// side of each handshake (p3/p4 with the pushes, p1/p2 with the
// deliveries) is listed explicitly. Every other machine transition is
// allowed in place.
{
  "name": "candy-control",
  "subject": "machine||user",
  "states": ["k0", "k1"],
  "start": ["k0"],
  "transitions": [
    {"from": "k0", "terminal": "p9", "to": "k1"},
    {"from": "k0", "terminal": "p3", "to": "k1"},
    {"from": "k0", "terminal": "p10", "to": "k1"},
    {"from": "k0", "terminal": "p4", "to": "k1"},
    {"from": "k1", "terminal": "p13", "to": "k0"},
    {"from": "k1", "terminal": "p1", "to": "k0"},
    {"from": "k1", "terminal": "p14", "to": "k0"},
    {"from": "k1", "terminal": "p2", "to": "k0"}
  ],
  "allow_elsewhere": ["p1", "p2", "p3", "p4", "p5", "p6", "p7", "p8"]
}
)json";

inline InterfaceAutomaton reactor() { return parse_automaton(reactor_document); }
inline ControllingAutomaton reactor_controller() {
  return parse_controller(reactor_controller_document);
}
inline InterfaceAutomaton candy_machine() { return parse_automaton(candy_machine_document); }
inline InterfaceAutomaton candy_user() { return parse_automaton(candy_user_document); }
inline ControllingAutomaton candy_controller() {
  return parse_controller(candy_controller_document);
}

using Document = std::pair<std::string, std::string_view>;

/// File name and contents of every document of a case study, or an empty
/// list for an unknown name.
inline std::vector<Document> documents(std::string_view study) {
  if (study == "reactor")
    return {{"reactor.ia.json", reactor_document},
            {"reactor-control.ca.json", reactor_controller_document}};
  if (study == "candy")
    return {{"candy-machine.ia.json", candy_machine_document},
            {"candy-user.ia.json", candy_user_document},
            {"candy-control.ca.json", candy_controller_document}};
  return {};
}

} // namespace casys::case_studies
