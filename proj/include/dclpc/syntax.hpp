#ifndef DCLPC_SYNTAX_HPP_
#define DCLPC_SYNTAX_HPP_

// Concrete syntax.
//
// Formulas, lowest to highest precedence:
//   a <-> b        (left-assoc)
//   a -> b         (right-assoc)
//   a | b          (left-assoc)
//   a & b          (left-assoc)
//   ~a  dia{C}a  box{C}a  <prog>a  [prog]a
//   p  true  false  controls(C, a)  CONTROLS(i, a)  (a)
//
// Programs, lowest to highest precedence:
//   s + t          choice (left-assoc)
//   s ; t          sequence (left-assoc)
//   s*             iteration
//   give(i,p,j)  (a)?  test(a)  skip  fail  giveall(i)  giveall(C -> D)
//   if a then s else t   while a do s   repeat s until a   (s)
//
// A coalition C is `{i, j, ...}` (possibly empty) or a single agent name.
// The bodies of if/while/repeat extend as far to the right as possible.
//
// Everything is desugared while parsing. `controls` is a macro. `giveall` and
// `CONTROLS` expand over a signature and are rejected when none is given.
//
// Model files are line-oriented:
//   agents: 1 2
//   vars: p q r
//   owns 1: p q
//   owns 2: r
//   true: p q
// `#` starts a comment; identifiers may be separated by blanks or commas.

#include <string>
#include <string_view>

#include "dclpc/formula.hpp"
#include "dclpc/model.hpp"

namespace dclpc {

/// Throws ParseError with a 1-based line and column.
Formula parse_formula(std::string_view text, const Signature* sig = nullptr);
Program parse_program(std::string_view text, const Signature* sig = nullptr);
DirectModel parse_model(std::string_view text);

/// Prints with minimal parentheses; parse(render(x)) == x. Common derived
/// shapes (false, &, box, [prog], controls, skip, fail) are printed in their
/// sugared form, which parses back to the identical core tree.
std::string render(const Formula& f);
std::string render(const Program& p);

/// Canonical model-file text (sorted identifiers, every agent listed).
std::string render_model(const DirectModel& m);

/// Comma-separated identifier list, e.g. "1,2". Throws ParseError on
/// malformed names.
std::vector<std::string> parse_identifier_list(std::string_view text);

}  // namespace dclpc

#endif  // DCLPC_SYNTAX_HPP_
