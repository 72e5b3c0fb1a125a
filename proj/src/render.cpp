#include <string>

#include "dclpc/syntax.hpp"

namespace dclpc {

namespace {

// Binding strength of the printed form; higher binds tighter.
enum Level : int { kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kPrefix = 5, kPrimary = 6 };
enum ProgLevel : int { kChoice = 1, kSeq = 2, kPostfix = 3, kBase = 4 };

std::string coalition_braces(const Coalition& c) {
  std::string out = "{";
  bool first = true;
  for (const auto& a : c) {
    if (!first) out += ",";
    out += a;
    first = false;
  }
  return out + "}";
}

std::string coalition_arg(const Coalition& c) {
  return c.size() == 1 ? *c.begin() : coalition_braces(c);
}

struct Printed {
  std::string text;
  int level;
};

std::string wrap(const Printed& p, int required) {
  return p.level >= required ? p.text : "(" + p.text + ")";
}

Printed print(const Formula& f);
Printed print(const Program& p);

// Not(Or(Not a, Not b)) is how `a & b` desugars.
bool as_conjunction(const Formula& f, const Formula** a, const Formula** b) {
  if (!f.is(Formula::Kind::kNot)) return false;
  const Formula& inner = f.operand();
  if (!inner.is(Formula::Kind::kOr)) return false;
  if (!inner.lhs().is(Formula::Kind::kNot) || !inner.rhs().is(Formula::Kind::kNot)) return false;
  *a = &inner.lhs().operand();
  *b = &inner.rhs().operand();
  return true;
}

// dia{C}(x) & dia{C}(~x) is how `controls(C, x)` desugars.
bool as_controls(const Formula& f, const Coalition** c, const Formula** x) {
  const Formula* a = nullptr;
  const Formula* b = nullptr;
  if (!as_conjunction(f, &a, &b)) return false;
  if (!a->is(Formula::Kind::kDia) || !b->is(Formula::Kind::kDia)) return false;
  if (a->coalition() != b->coalition()) return false;
  if (!b->operand().is(Formula::Kind::kNot) || !(b->operand().operand() == a->operand())) return false;
  *c = &a->coalition();
  *x = &a->operand();
  return true;
}

Printed print(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kTop:
      return {"true", kPrimary};
    case Formula::Kind::kAtom:
      return {f.atom_name(), kPrimary};
    case Formula::Kind::kOr:
      return {wrap(print(f.lhs()), kOr) + " | " + wrap(print(f.rhs()), kAnd), kOr};
    case Formula::Kind::kDia:
      return {"dia" + coalition_braces(f.coalition()) + "(" + print(f.operand()).text + ")", kPrefix};
    case Formula::Kind::kDiaProg:
      return {"<" + print(f.program()).text + ">(" + print(f.operand()).text + ")", kPrefix};
    case Formula::Kind::kNot:
      break;
  }

  const Formula& inner = f.operand();
  if (inner.is(Formula::Kind::kTop)) return {"false", kPrimary};
  const Coalition* c = nullptr;
  const Formula* x = nullptr;
  if (as_controls(f, &c, &x)) {
    return {"controls(" + coalition_arg(*c) + "," + print(*x).text + ")", kPrimary};
  }
  const Formula* a = nullptr;
  const Formula* b = nullptr;
  if (as_conjunction(f, &a, &b)) {
    return {wrap(print(*a), kAnd) + " & " + wrap(print(*b), kPrefix), kAnd};
  }
  if (inner.is(Formula::Kind::kDia) && inner.operand().is(Formula::Kind::kNot)) {
    return {"box" + coalition_braces(inner.coalition()) + "(" + print(inner.operand().operand()).text + ")",
            kPrefix};
  }
  if (inner.is(Formula::Kind::kDiaProg) && inner.operand().is(Formula::Kind::kNot)) {
    return {"[" + print(inner.program()).text + "](" + print(inner.operand().operand()).text + ")", kPrefix};
  }
  return {"~" + wrap(print(inner), kPrefix), kPrefix};
}

Printed print(const Program& p) {
  switch (p.kind()) {
    case Program::Kind::kGive:
      return {"give(" + p.giver() + "," + p.var() + "," + p.receiver() + ")", kBase};
    case Program::Kind::kChoice:
      return {wrap(print(p.lhs()), kChoice) + " + " + wrap(print(p.rhs()), kSeq), kChoice};
    case Program::Kind::kSeq:
      return {wrap(print(p.lhs()), kSeq) + "; " + wrap(print(p.rhs()), kPostfix), kSeq};
    case Program::Kind::kStar:
      return {wrap(print(p.body()), kPostfix) + "*", kPostfix};
    case Program::Kind::kTest: {
      const Formula& c = p.condition();
      if (c.is(Formula::Kind::kTop)) return {"skip", kBase};
      if (c.is(Formula::Kind::kNot) && c.operand().is(Formula::Kind::kTop)) return {"fail", kBase};
      return {"(" + print(c).text + ")?", kBase};
    }
  }
  return {"", kBase};
}

}  // namespace

std::string render(const Formula& f) { return print(f).text; }

std::string render(const Program& p) { return print(p).text; }

}  // namespace dclpc
