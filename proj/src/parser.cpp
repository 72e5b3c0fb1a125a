#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dclpc/control.hpp"
#include "dclpc/errors.hpp"
#include "dclpc/syntax.hpp"

namespace dclpc {

namespace {

enum class Tok {
  kIdent,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kLAngle,
  kRAngle,
  kComma,
  kSemi,
  kPlus,
  kStar,
  kQuestion,
  kTilde,
  kAmp,
  kBar,
  kArrow,
  kIff,
  kEnd,
};

const char* describe(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrace: return "'{'";
    case Tok::kRBrace: return "'}'";
    case Tok::kLBracket: return "'['";
    case Tok::kRBracket: return "']'";
    case Tok::kLAngle: return "'<'";
    case Tok::kRAngle: return "'>'";
    case Tok::kComma: return "','";
    case Tok::kSemi: return "';'";
    case Tok::kPlus: return "'+'";
    case Tok::kStar: return "'*'";
    case Tok::kQuestion: return "'?'";
    case Tok::kTilde: return "'~'";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kIff: return "'<->'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

constexpr std::array kKeywords = {
    "true", "false", "dia",  "box",  "controls", "CONTROLS", "give",  "giveall", "skip",
    "fail", "if",    "then", "else", "while",    "do",       "repeat", "until",  "test",
};

bool is_keyword(std::string_view s) {
  for (const char* k : kKeywords) {
    if (s == k) return true;
  }
  return false;
}

bool ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1;
  int column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, column});
    i += len;
    column += static_cast<int>(len);
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r') {
      ++i;
      ++column;
      continue;
    }
    if (ident_char(c)) {
      std::size_t len = 0;
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      push(Tok::kIdent, len);
      continue;
    }
    const std::string_view rest = text.substr(i);
    if (rest.starts_with("<->")) {
      push(Tok::kIff, 3);
    } else if (rest.starts_with("->")) {
      push(Tok::kArrow, 2);
    } else {
      switch (c) {
        case '(': push(Tok::kLParen, 1); break;
        case ')': push(Tok::kRParen, 1); break;
        case '{': push(Tok::kLBrace, 1); break;
        case '}': push(Tok::kRBrace, 1); break;
        case '[': push(Tok::kLBracket, 1); break;
        case ']': push(Tok::kRBracket, 1); break;
        case '<': push(Tok::kLAngle, 1); break;
        case '>': push(Tok::kRAngle, 1); break;
        case ',': push(Tok::kComma, 1); break;
        case ';': push(Tok::kSemi, 1); break;
        case '+': push(Tok::kPlus, 1); break;
        case '*': push(Tok::kStar, 1); break;
        case '?': push(Tok::kQuestion, 1); break;
        case '~': push(Tok::kTilde, 1); break;
        case '&': push(Tok::kAmp, 1); break;
        case '|': push(Tok::kBar, 1); break;
        default:
          throw ParseError(std::string("unexpected character '") + c + "'", line, column);
      }
    }
  }
  out.push_back({Tok::kEnd, "", line, column});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, const Signature* sig) : tokens_(tokenize(text)), sig_(sig) {}

  Formula whole_formula() {
    Formula f = formula();
    expect_end();
    return f;
  }

  Program whole_program() {
    Program p = program();
    expect_end();
    return p;
  }

 private:
  // --- token helpers -------------------------------------------------------

  const Token& peek() const { return tokens_[pos_]; }
  bool at(Tok t) const { return peek().kind == t; }
  bool at_keyword(std::string_view k) const { return at(Tok::kIdent) && peek().text == k; }

  [[noreturn]] void fail_here(const std::string& message) const {
    throw ParseError(message, peek().line, peek().column);
  }

  [[noreturn]] void fail_expected(const char* what) const {
    std::string found = at(Tok::kEnd) ? "end of input" : "'" + peek().text + "'";
    fail_here(std::string("expected ") + what + ", found " + found);
  }

  bool accept(Tok t) {
    if (!at(t)) return false;
    ++pos_;
    return true;
  }

  bool accept_keyword(std::string_view k) {
    if (!at_keyword(k)) return false;
    ++pos_;
    return true;
  }

  void expect(Tok t) {
    if (!accept(t)) fail_expected(describe(t));
  }

  void expect_keyword(const char* k) {
    if (!accept_keyword(k)) fail_expected((std::string("'") + k + "'").c_str());
  }

  void expect_end() {
    if (!at(Tok::kEnd)) fail_expected("end of input");
  }

  std::string identifier(const char* role) {
    if (!at(Tok::kIdent)) fail_expected(role);
    if (is_keyword(peek().text)) {
      fail_here("keyword '" + peek().text + "' cannot be used as " + role);
    }
    return tokens_[pos_++].text;
  }

  const Signature& require_signature(const char* construct) const {
    if (sig_ == nullptr) {
      fail_here(std::string(construct) + " expands over a signature, but none is in scope");
    }
    return *sig_;
  }

  Coalition coalition_braces() {
    expect(Tok::kLBrace);
    Coalition c;
    if (!at(Tok::kRBrace)) {
      do {
        c.insert(identifier("agent name"));
      } while (accept(Tok::kComma));
    }
    expect(Tok::kRBrace);
    return c;
  }

  /// `{...}` or a bare agent name.
  Coalition coalition_or_agent() {
    if (at(Tok::kLBrace)) return coalition_braces();
    return Coalition{identifier("agent name or '{'")};
  }

  // --- formulas ------------------------------------------------------------

  Formula formula() {
    Formula lhs = implication();
    while (accept(Tok::kIff)) lhs = iff(lhs, implication());
    return lhs;
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (accept(Tok::kArrow)) return implies(lhs, implication());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (accept(Tok::kBar)) lhs = Formula::disjunction(lhs, conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (accept(Tok::kAmp)) lhs = conj(lhs, unary());
    return lhs;
  }

  Formula unary() {
    if (accept(Tok::kTilde)) return Formula::negation(unary());
    if (accept_keyword("dia")) {
      Coalition c = coalition_braces();
      return Formula::dia(std::move(c), unary());
    }
    if (accept_keyword("box")) {
      Coalition c = coalition_braces();
      return box(std::move(c), unary());
    }
    if (accept(Tok::kLAngle)) {
      Program p = program();
      expect(Tok::kRAngle);
      return Formula::dia_prog(std::move(p), unary());
    }
    if (accept(Tok::kLBracket)) {
      Program p = program();
      expect(Tok::kRBracket);
      return box_prog(std::move(p), unary());
    }
    return primary();
  }

  Formula primary() {
    if (accept_keyword("true")) return Formula::top();
    if (accept_keyword("false")) return bottom();
    if (accept_keyword("controls")) {
      expect(Tok::kLParen);
      Coalition c = coalition_or_agent();
      expect(Tok::kComma);
      Formula f = formula();
      expect(Tok::kRParen);
      return controls(std::move(c), std::move(f));
    }
    if (at_keyword("CONTROLS")) {
      const Signature& sig = require_signature("CONTROLS");
      ++pos_;
      expect(Tok::kLParen);
      const Token& agent_tok = peek();
      AgentId agent = identifier("agent name");
      if (!sig.find_agent(agent)) {
        throw ParseError("CONTROLS names agent '" + agent + "' outside the signature", agent_tok.line,
                         agent_tok.column);
      }
      expect(Tok::kComma);
      Formula f = formula();
      expect(Tok::kRParen);
      return second_order_controls(agent, f, sig);
    }
    if (accept(Tok::kLParen)) {
      Formula f = formula();
      expect(Tok::kRParen);
      return f;
    }
    if (at(Tok::kIdent)) return Formula::atom(identifier("variable"));
    fail_expected("formula");
  }

  // --- programs ------------------------------------------------------------

  Program program() {
    Program lhs = sequence_level();
    while (accept(Tok::kPlus)) lhs = Program::choice(lhs, sequence_level());
    return lhs;
  }

  Program sequence_level() {
    Program lhs = postfix();
    while (accept(Tok::kSemi)) lhs = Program::seq(lhs, postfix());
    return lhs;
  }

  Program postfix() {
    Program p = base();
    while (accept(Tok::kStar)) p = Program::star(p);
    return p;
  }

  Program base() {
    if (accept_keyword("give")) {
      expect(Tok::kLParen);
      AgentId from = identifier("agent name");
      expect(Tok::kComma);
      PropId var = identifier("variable");
      expect(Tok::kComma);
      AgentId to = identifier("agent name");
      expect(Tok::kRParen);
      return Program::give(std::move(from), std::move(var), std::move(to));
    }
    if (accept_keyword("skip")) return skip();
    if (accept_keyword("fail")) return fail();
    if (accept_keyword("test")) {
      expect(Tok::kLParen);
      Formula f = formula();
      expect(Tok::kRParen);
      return Program::test(std::move(f));
    }
    if (accept_keyword("if")) {
      Formula cond = formula();
      expect_keyword("then");
      Program then_branch = program();
      expect_keyword("else");
      Program else_branch = program();
      return if_then_else(std::move(cond), std::move(then_branch), std::move(else_branch));
    }
    if (accept_keyword("while")) {
      Formula cond = formula();
      expect_keyword("do");
      return while_do(std::move(cond), program());
    }
    if (accept_keyword("repeat")) {
      Program body = program();
      expect_keyword("until");
      return repeat_until(std::move(body), formula());
    }
    if (at_keyword("giveall")) return giveall();
    if (at(Tok::kLParen)) return parenthesized_program_or_test();
    fail_expected("program");
  }

  Program giveall() {
    const Token start = peek();
    const Signature& sig = require_signature("giveall");
    ++pos_;
    expect(Tok::kLParen);
    Coalition from = coalition_or_agent();
    std::optional<Coalition> to;
    if (accept(Tok::kArrow)) to = coalition_or_agent();
    expect(Tok::kRParen);
    try {
      if (!to) {
        if (from.size() != 1) throw std::invalid_argument("giveall(C) takes a single agent; use giveall(C -> D)");
        return give_program(*from.begin(), sig);
      }
      return give_program(from, *to, sig);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start.line, start.column);
    } catch (const SignatureError& e) {
      throw ParseError(e.what(), start.line, start.column);
    }
  }

  // `(` opens either a test `(f)?` or a parenthesized program. Try the test
  // reading first and fall back; report whichever attempt got further.
  Program parenthesized_program_or_test() {
    const std::size_t start = pos_;
    std::optional<ParseError> test_error;
    try {
      expect(Tok::kLParen);
      Formula f = formula();
      expect(Tok::kRParen);
      expect(Tok::kQuestion);
      return Program::test(std::move(f));
    } catch (const ParseError& e) {
      test_error = e;
    }
    const std::size_t test_reach = pos_;
    pos_ = start;
    try {
      expect(Tok::kLParen);
      Program p = program();
      expect(Tok::kRParen);
      return p;
    } catch (const ParseError&) {
      if (test_reach > pos_) throw *test_error;
      throw;
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  const Signature* sig_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature* sig) {
  return Parser(text, sig).whole_formula();
}

Program parse_program(std::string_view text, const Signature* sig) {
  return Parser(text, sig).whole_program();
}

}  // namespace dclpc
