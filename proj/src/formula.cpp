#include "dclpc/formula.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace dclpc {

struct FormulaNode {
  Formula::Kind kind;
  PropId atom;
  Coalition coalition;
  std::optional<Formula> left;
  std::optional<Formula> right;
  std::optional<Program> program;
};

struct ProgramNode {
  Program::Kind kind;
  AgentId giver;
  PropId var;
  AgentId receiver;
  std::optional<Program> left;
  std::optional<Program> right;
  std::optional<Formula> condition;
};

namespace {

[[noreturn]] void wrong_kind(const char* accessor) {
  throw std::logic_error(std::string("accessor ") + accessor + " used on wrong node kind");
}

}  // namespace

// --- Formula ---------------------------------------------------------------

Formula Formula::top() {
  static const Formula kTop(std::make_shared<const FormulaNode>(FormulaNode{Kind::kTop, {}, {}, {}, {}, {}}));
  return kTop;
}

Formula Formula::atom(PropId name) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kAtom, std::move(name), {}, {}, {}, {}}));
}

Formula Formula::negation(Formula operand) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kNot, {}, {}, std::move(operand), {}, {}}));
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kOr, {}, {}, std::move(lhs), std::move(rhs), {}}));
}

Formula Formula::dia(Coalition coalition, Formula operand) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kDia, {}, std::move(coalition), std::move(operand), {}, {}}));
}

Formula Formula::dia_prog(Program program, Formula operand) {
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kDiaProg, {}, {}, std::move(operand), {}, std::move(program)}));
}

Formula::Kind Formula::kind() const { return node_->kind; }

const PropId& Formula::atom_name() const {
  if (kind() != Kind::kAtom) wrong_kind("atom_name");
  return node_->atom;
}

const Formula& Formula::operand() const {
  if (kind() != Kind::kNot && kind() != Kind::kDia && kind() != Kind::kDiaProg) wrong_kind("operand");
  return *node_->left;
}

const Formula& Formula::lhs() const {
  if (kind() != Kind::kOr) wrong_kind("lhs");
  return *node_->left;
}

const Formula& Formula::rhs() const {
  if (kind() != Kind::kOr) wrong_kind("rhs");
  return *node_->right;
}

const Coalition& Formula::coalition() const {
  if (kind() != Kind::kDia) wrong_kind("coalition");
  return node_->coalition;
}

const Program& Formula::program() const {
  if (kind() != Kind::kDiaProg) wrong_kind("program");
  return *node_->program;
}

std::size_t Formula::size() const {
  switch (kind()) {
    case Kind::kTop:
    case Kind::kAtom:
      return 1;
    case Kind::kNot:
    case Kind::kDia:
      return 1 + operand().size();
    case Kind::kOr:
      return 1 + lhs().size() + rhs().size();
    case Kind::kDiaProg:
      return 1 + program().size() + operand().size();
  }
  return 1;
}

int Formula::depth() const {
  switch (kind()) {
    case Kind::kTop:
    case Kind::kAtom:
      return 0;
    case Kind::kNot:
    case Kind::kDia:
      return 1 + operand().depth();
    case Kind::kOr:
      return 1 + std::max(lhs().depth(), rhs().depth());
    case Kind::kDiaProg:
      return 1 + std::max(program().depth(), operand().depth());
  }
  return 0;
}

bool Formula::objective() const {
  switch (kind()) {
    case Kind::kTop:
    case Kind::kAtom:
      return true;
    case Kind::kNot:
      return operand().objective();
    case Kind::kOr:
      return lhs().objective() && rhs().objective();
    case Kind::kDia:
    case Kind::kDiaProg:
      return false;
  }
  return false;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Formula::Kind::kTop:
      return true;
    case Formula::Kind::kAtom:
      return a.atom_name() == b.atom_name();
    case Formula::Kind::kNot:
      return a.operand() == b.operand();
    case Formula::Kind::kOr:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Formula::Kind::kDia:
      return a.coalition() == b.coalition() && a.operand() == b.operand();
    case Formula::Kind::kDiaProg:
      return a.program() == b.program() && a.operand() == b.operand();
  }
  return false;
}

// --- Program ---------------------------------------------------------------

Program Program::give(AgentId from, PropId var, AgentId to) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Kind::kGive, std::move(from), std::move(var), std::move(to), {}, {}, {}}));
}

Program Program::seq(Program first, Program second) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Kind::kSeq, {}, {}, {}, std::move(first), std::move(second), {}}));
}

Program Program::choice(Program lhs, Program rhs) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Kind::kChoice, {}, {}, {}, std::move(lhs), std::move(rhs), {}}));
}

Program Program::star(Program body) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Kind::kStar, {}, {}, {}, std::move(body), {}, {}}));
}

Program Program::test(Formula condition) {
  return Program(std::make_shared<const ProgramNode>(
      ProgramNode{Kind::kTest, {}, {}, {}, {}, {}, std::move(condition)}));
}

Program::Kind Program::kind() const { return node_->kind; }

const AgentId& Program::giver() const {
  if (kind() != Kind::kGive) wrong_kind("giver");
  return node_->giver;
}

const PropId& Program::var() const {
  if (kind() != Kind::kGive) wrong_kind("var");
  return node_->var;
}

const AgentId& Program::receiver() const {
  if (kind() != Kind::kGive) wrong_kind("receiver");
  return node_->receiver;
}

const Program& Program::lhs() const {
  if (kind() != Kind::kSeq && kind() != Kind::kChoice) wrong_kind("lhs");
  return *node_->left;
}

const Program& Program::rhs() const {
  if (kind() != Kind::kSeq && kind() != Kind::kChoice) wrong_kind("rhs");
  return *node_->right;
}

const Program& Program::body() const {
  if (kind() != Kind::kStar) wrong_kind("body");
  return *node_->left;
}

const Formula& Program::condition() const {
  if (kind() != Kind::kTest) wrong_kind("condition");
  return *node_->condition;
}

std::size_t Program::size() const {
  switch (kind()) {
    case Kind::kGive:
      return 1;
    case Kind::kSeq:
    case Kind::kChoice:
      return 1 + lhs().size() + rhs().size();
    case Kind::kStar:
      return 1 + body().size();
    case Kind::kTest:
      return 1 + condition().size();
  }
  return 1;
}

int Program::depth() const {
  switch (kind()) {
    case Kind::kGive:
      return 0;
    case Kind::kSeq:
    case Kind::kChoice:
      return 1 + std::max(lhs().depth(), rhs().depth());
    case Kind::kStar:
      return 1 + body().depth();
    case Kind::kTest:
      return 1 + condition().depth();
  }
  return 0;
}

bool operator==(const Program& a, const Program& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case Program::Kind::kGive:
      return a.giver() == b.giver() && a.var() == b.var() && a.receiver() == b.receiver();
    case Program::Kind::kSeq:
    case Program::Kind::kChoice:
      return a.lhs() == b.lhs() && a.rhs() == b.rhs();
    case Program::Kind::kStar:
      return a.body() == b.body();
    case Program::Kind::kTest:
      return a.condition() == b.condition();
  }
  return false;
}

// --- Derived connectives ---------------------------------------------------

Formula bottom() { return Formula::negation(Formula::top()); }

Formula conj(Formula a, Formula b) {
  return Formula::negation(
      Formula::disjunction(Formula::negation(std::move(a)), Formula::negation(std::move(b))));
}

Formula implies(Formula a, Formula b) {
  return Formula::disjunction(Formula::negation(std::move(a)), std::move(b));
}

Formula iff(Formula a, Formula b) { return conj(implies(a, b), implies(b, a)); }

Formula box(Coalition coalition, Formula operand) {
  return Formula::negation(Formula::dia(std::move(coalition), Formula::negation(std::move(operand))));
}

Formula box_prog(Program program, Formula operand) {
  return Formula::negation(
      Formula::dia_prog(std::move(program), Formula::negation(std::move(operand))));
}

Formula dia(const AgentId& agent, Formula operand) {
  return Formula::dia(Coalition{agent}, std::move(operand));
}

Formula box(const AgentId& agent, Formula operand) {
  return box(Coalition{agent}, std::move(operand));
}

Formula disjoin(std::span<const Formula> items) {
  if (items.empty()) return bottom();
  Formula acc = items.front();
  for (const Formula& f : items.subspan(1)) acc = Formula::disjunction(acc, f);
  return acc;
}

Formula conjoin(std::span<const Formula> items) {
  if (items.empty()) return Formula::top();
  Formula acc = items.front();
  for (const Formula& f : items.subspan(1)) acc = conj(acc, f);
  return acc;
}

Formula exactly_one(std::span<const Formula> items) {
  std::vector<Formula> exclusions;
  for (std::size_t a = 0; a < items.size(); ++a) {
    for (std::size_t b = a + 1; b < items.size(); ++b) {
      exclusions.push_back(Formula::negation(conj(items[a], items[b])));
    }
  }
  return conj(disjoin(items), conjoin(exclusions));
}

Formula controls(Coalition coalition, Formula f) {
  return conj(Formula::dia(coalition, f), Formula::dia(coalition, Formula::negation(f)));
}

Formula controls(const AgentId& agent, Formula f) { return controls(Coalition{agent}, std::move(f)); }

// --- Derived programs ------------------------------------------------------

Program skip() { return Program::test(Formula::top()); }

Program fail() { return Program::test(bottom()); }

Program if_then_else(Formula condition, Program then_branch, Program else_branch) {
  return Program::choice(Program::seq(Program::test(condition), std::move(then_branch)),
                         Program::seq(Program::test(Formula::negation(condition)),
                                      std::move(else_branch)));
}

Program while_do(Formula condition, Program body) {
  return Program::seq(Program::star(Program::seq(Program::test(condition), std::move(body))),
                      Program::test(Formula::negation(condition)));
}

Program repeat_until(Program body, Formula condition) {
  Program loop = Program::star(Program::seq(Program::test(Formula::negation(condition)), body));
  return Program::seq(Program::seq(body, std::move(loop)), Program::test(condition));
}

Program choose(std::span<const Program> items) {
  if (items.empty()) throw std::invalid_argument("choice over an empty set of programs");
  Program acc = items.front();
  for (const Program& p : items.subspan(1)) acc = Program::choice(acc, p);
  return acc;
}

Program sequence(std::span<const Program> items) {
  if (items.empty()) throw std::invalid_argument("sequence of no programs");
  Program acc = items.front();
  for (const Program& p : items.subspan(1)) acc = Program::seq(acc, p);
  return acc;
}

Program power(const Program& body, std::size_t times) {
  if (times == 0) return skip();
  Program acc = body;
  for (std::size_t i = 1; i < times; ++i) acc = Program::seq(acc, body);
  return acc;
}

// --- Syntactic signature ---------------------------------------------------

namespace {

void collect(const Formula& f, SyntacticSignature& out);

void collect(const Program& p, SyntacticSignature& out) {
  switch (p.kind()) {
    case Program::Kind::kGive:
      out.agents.insert(p.giver());
      out.agents.insert(p.receiver());
      out.vars.insert(p.var());
      return;
    case Program::Kind::kSeq:
    case Program::Kind::kChoice:
      collect(p.lhs(), out);
      collect(p.rhs(), out);
      return;
    case Program::Kind::kStar:
      collect(p.body(), out);
      return;
    case Program::Kind::kTest:
      collect(p.condition(), out);
      return;
  }
}

void collect(const Formula& f, SyntacticSignature& out) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      return;
    case Formula::Kind::kAtom:
      out.vars.insert(f.atom_name());
      return;
    case Formula::Kind::kNot:
      collect(f.operand(), out);
      return;
    case Formula::Kind::kOr:
      collect(f.lhs(), out);
      collect(f.rhs(), out);
      return;
    case Formula::Kind::kDia:
      out.agents.insert(f.coalition().begin(), f.coalition().end());
      collect(f.operand(), out);
      return;
    case Formula::Kind::kDiaProg:
      collect(f.program(), out);
      collect(f.operand(), out);
      return;
  }
}

}  // namespace

SyntacticSignature signature_of(const Formula& f) {
  SyntacticSignature out;
  collect(f, out);
  return out;
}

SyntacticSignature signature_of(const Program& p) {
  SyntacticSignature out;
  collect(p, out);
  return out;
}

}  // namespace dclpc
