#ifndef DCLPC_FORMULA_HPP_
#define DCLPC_FORMULA_HPP_

// Core abstract syntax of formulas and transfer programs.
//
// Only the core constructors exist here: every derived connective and every
// derived program construct is expressed through the helper functions at the
// bottom of this header, which build core trees. Nodes are immutable and
// shared, so copying a Formula or Program is cheap.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace dclpc {

using AgentId = std::string;
using PropId = std::string;

/// A set of agents. Ordered so that printing and comparison are canonical.
using Coalition = std::set<AgentId>;

struct FormulaNode;
struct ProgramNode;
class Program;

class Formula {
 public:
  enum class Kind : std::uint8_t { kTop, kAtom, kNot, kOr, kDia, kDiaProg };

  static Formula top();
  static Formula atom(PropId name);
  static Formula negation(Formula operand);
  static Formula disjunction(Formula lhs, Formula rhs);
  static Formula dia(Coalition coalition, Formula operand);
  static Formula dia_prog(Program program, Formula operand);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  // Accessors are only meaningful for the matching kind; calling one on the
  // wrong kind throws std::logic_error.
  const PropId& atom_name() const;       // kAtom
  const Formula& operand() const;        // kNot, kDia, kDiaProg
  const Formula& lhs() const;            // kOr
  const Formula& rhs() const;            // kOr
  const Coalition& coalition() const;    // kDia
  const Program& program() const;        // kDiaProg

  /// Number of AST nodes, counting nested programs and their tests.
  std::size_t size() const;
  /// Modal and Boolean nesting depth; atoms and Top have depth 0.
  int depth() const;
  /// True iff no Dia or DiaProg occurs.
  bool objective() const;

  /// Stable address of the shared node, usable as a memo key.
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  explicit Formula(std::shared_ptr<const FormulaNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const FormulaNode> node_;
};

class Program {
 public:
  enum class Kind : std::uint8_t { kGive, kSeq, kChoice, kStar, kTest };

  static Program give(AgentId from, PropId var, AgentId to);
  static Program seq(Program first, Program second);
  static Program choice(Program lhs, Program rhs);
  static Program star(Program body);
  static Program test(Formula condition);

  Kind kind() const;
  bool is(Kind k) const { return kind() == k; }

  const AgentId& giver() const;     // kGive
  const PropId& var() const;        // kGive
  const AgentId& receiver() const;  // kGive
  const Program& lhs() const;       // kSeq, kChoice
  const Program& rhs() const;       // kSeq, kChoice
  const Program& body() const;      // kStar
  const Formula& condition() const; // kTest

  std::size_t size() const;
  int depth() const;
  const void* identity() const { return node_.get(); }

  friend bool operator==(const Program& a, const Program& b);

 private:
  explicit Program(std::shared_ptr<const ProgramNode> node) : node_(std::move(node)) {}
  std::shared_ptr<const ProgramNode> node_;
};

// --- Derived connectives -------------------------------------------------

Formula bottom();
Formula conj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula iff(Formula a, Formula b);
Formula box(Coalition coalition, Formula operand);
Formula box_prog(Program program, Formula operand);
Formula dia(const AgentId& agent, Formula operand);
Formula box(const AgentId& agent, Formula operand);

/// Left-folded disjunction; the empty disjunction is bottom.
Formula disjoin(std::span<const Formula> items);
/// Left-folded conjunction; the empty conjunction is top.
Formula conjoin(std::span<const Formula> items);

/// Exactly one of `items` holds: the disjunction of all items conjoined with
/// the pairwise exclusions not(a & b) for every unordered pair.
Formula exactly_one(std::span<const Formula> items);

/// `controls(C, f)`: C can make f true and can make f false.
Formula controls(Coalition coalition, Formula f);
Formula controls(const AgentId& agent, Formula f);

// --- Derived programs ----------------------------------------------------

Program skip();
Program fail();
Program if_then_else(Formula condition, Program then_branch, Program else_branch);
Program while_do(Formula condition, Program body);
Program repeat_until(Program body, Formula condition);
/// Left-folded choice over a non-empty list.
Program choose(std::span<const Program> items);
/// Left-folded sequence over a non-empty list.
Program sequence(std::span<const Program> items);
/// `body` composed with itself `times` times; zero times is skip.
Program power(const Program& body, std::size_t times);

// --- Syntactic signature -------------------------------------------------

/// Atoms occurring anywhere in a formula (including programs and tests; the
/// variable of a Give counts) and every agent named in coalitions or programs.
struct SyntacticSignature {
  std::set<PropId> vars;
  std::set<AgentId> agents;
};

SyntacticSignature signature_of(const Formula& f);
SyntacticSignature signature_of(const Program& p);

}  // namespace dclpc

#endif  // DCLPC_FORMULA_HPP_
