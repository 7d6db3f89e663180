#include "topal/formula_io.hpp"

#include <cctype>
#include <ostream>

#include "topal/error.hpp"

namespace topal {

namespace {

enum class Tok {
  kEnd, kWord, kTilde, kAmp, kBar, kArrow, kIff, kLParen, kRParen, kLBracket, kRBracket, kLAngle, kRAngle
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t pos;
};

bool is_word_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_alnum_name(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c))) return false;
  return true;
}

bool is_keyword(std::string_view s) { return s == "int" || s == "box" || s == "dia" || s == "false"; }

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }

  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ >= text_.size()) {
      current_ = {Tok::kEnd, {}, pos_};
      return;
    }
    const std::size_t start = pos_;
    const char c = text_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      current_ = {kind, text_.substr(start, 1), start};
    };
    switch (c) {
      case '~': return single(Tok::kTilde);
      case '&': return single(Tok::kAmp);
      case '|': return single(Tok::kBar);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case '[': return single(Tok::kLBracket);
      case ']': return single(Tok::kRBracket);
      case '>': return single(Tok::kRAngle);
      case '-':
        if (text_.substr(pos_, 2) == "->") {
          pos_ += 2;
          current_ = {Tok::kArrow, text_.substr(start, 2), start};
          return;
        }
        throw ParseError("unexpected '-'", start);
      case '<':
        if (text_.substr(pos_, 3) == "<->") {
          pos_ += 3;
          current_ = {Tok::kIff, text_.substr(start, 3), start};
          return;
        }
        return single(Tok::kLAngle);
      default:
        break;
    }
    if (!is_word_char(c)) throw ParseError(std::string("unexpected character '") + c + "'", start);
    while (pos_ < text_.size() && is_word_char(text_[pos_])) ++pos_;
    current_ = {Tok::kWord, text_.substr(start, pos_ - start), start};
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token current_{Tok::kEnd, {}, 0};
};

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (lex_.peek().kind != Tok::kEnd) throw ParseError("unexpected trailing input", lex_.peek().pos);
    return f;
  }

 private:
  void expect(Tok kind, const char* what) {
    if (lex_.peek().kind != kind) throw ParseError(std::string("expected ") + what, lex_.peek().pos);
    lex_.take();
  }

  Formula parse_iff() {
    Formula lhs = parse_implies();
    if (lex_.peek().kind == Tok::kIff) {
      lex_.take();
      return iff(std::move(lhs), parse_iff());
    }
    return lhs;
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (lex_.peek().kind == Tok::kArrow) {
      lex_.take();
      return implies(std::move(lhs), parse_implies());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (lex_.peek().kind == Tok::kBar) {
      lex_.take();
      lhs = disj(std::move(lhs), parse_and());
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (lex_.peek().kind == Tok::kAmp) {
      lex_.take();
      lhs = conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  static std::string agent_after(std::string_view word, std::size_t prefix, std::size_t pos) {
    std::string_view agent = word.substr(prefix);
    if (!is_alnum_name(agent)) throw ParseError("malformed agent id in '" + std::string(word) + "'", pos);
    return std::string(agent);
  }

  Formula parse_unary() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Tok::kTilde:
        lex_.take();
        return neg(parse_unary());
      case Tok::kLParen: {
        lex_.take();
        Formula f = parse_iff();
        expect(Tok::kRParen, "')'");
        return f;
      }
      case Tok::kLBracket: {
        lex_.take();
        Formula announced = parse_iff();
        expect(Tok::kRBracket, "']'");
        return announce(std::move(announced), parse_unary());
      }
      case Tok::kLAngle: {
        lex_.take();
        Formula announced = parse_iff();
        expect(Tok::kRAngle, "'>'");
        return dual_announce(std::move(announced), parse_unary());
      }
      case Tok::kWord:
        break;
      case Tok::kEnd:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + std::string(t.text) + "'", t.pos);
    }
    lex_.take();
    const std::string_view w = t.text;
    if (w.starts_with("Khat_")) return khat(agent_after(w, 5, t.pos), parse_unary());
    if (w.starts_with("K_")) return know(agent_after(w, 2, t.pos), parse_unary());
    if (w == "box") return box(parse_unary());
    if (w == "dia") return diamond(parse_unary());
    if (w == "false") return falsum();
    if (w == "int") {
      expect(Tok::kLParen, "'(' after int");
      Formula f = parse_iff();
      expect(Tok::kRParen, "')'");
      return interior(std::move(f));
    }
    if (w == kFalsumAtom) return atom(std::string(kFalsumAtom));
    if (!is_alnum_name(w)) throw ParseError("malformed proposition id '" + std::string(w) + "'", t.pos);
    return atom(std::string(w));
  }

  Lexer lex_;
};

// Printing precedence levels; higher binds tighter.
constexpr int kIffLevel = 0;
constexpr int kImpliesLevel = 1;
constexpr int kOrLevel = 2;
constexpr int kAndLevel = 3;
constexpr int kUnaryLevel = 4;

class Printer {
 public:
  std::string print(const Formula& f, int min_level) {
    int level = 0;
    std::string s = render(f, level);
    if (level < min_level) return "(" + s + ")";
    return s;
  }

 private:
  static bool is_implication(const Formula& f) {
    return f.op() == Op::kNot && f.arg().op() == Op::kAnd && f.arg().rhs().op() == Op::kNot && !is_falsum(f.arg());
  }

  std::string render(const Formula& f, int& level) {
    level = kUnaryLevel;
    switch (f.op()) {
      case Op::kAtom:
        return f.label();
      case Op::kKnow:
        return "K_" + f.label() + " " + print(f.arg(), kUnaryLevel);
      case Op::kInt:
        return "int(" + print(f.arg(), kIffLevel) + ")";
      case Op::kAnnounce:
        return "[" + print(f.lhs(), kIffLevel) + "] " + print(f.rhs(), kUnaryLevel);
      case Op::kBox:
        return "box " + print(f.arg(), kUnaryLevel);
      case Op::kAnd:
        if (is_falsum(f)) return "false";
        if (is_implication(f.lhs()) && is_implication(f.rhs())) {
          const Formula& a = f.lhs().arg().lhs();
          const Formula& b = f.lhs().arg().rhs().arg();
          if (f.rhs().arg().lhs() == b && f.rhs().arg().rhs().arg() == a) {
            level = kIffLevel;
            return print(a, kImpliesLevel) + " <-> " + print(b, kIffLevel);
          }
        }
        level = kAndLevel;
        return print(f.lhs(), kAndLevel) + " & " + print(f.rhs(), kUnaryLevel);
      case Op::kNot:
        return render_negation(f, level);
    }
    return {};
  }

  std::string render_negation(const Formula& f, int& level) {
    const Formula& g = f.arg();
    switch (g.op()) {
      case Op::kAnd:
        if (is_falsum(g)) break;
        if (g.lhs().op() == Op::kNot && g.rhs().op() == Op::kNot) {
          level = kOrLevel;
          return print(g.lhs().arg(), kOrLevel) + " | " + print(g.rhs().arg(), kAndLevel);
        }
        if (g.rhs().op() == Op::kNot) {
          level = kImpliesLevel;
          return print(g.lhs(), kOrLevel) + " -> " + print(g.rhs().arg(), kImpliesLevel);
        }
        break;
      case Op::kKnow:
        if (g.arg().op() == Op::kNot) return "Khat_" + g.label() + " " + print(g.arg().arg(), kUnaryLevel);
        break;
      case Op::kBox:
        if (g.arg().op() == Op::kNot) return "dia " + print(g.arg().arg(), kUnaryLevel);
        break;
      case Op::kAnnounce:
        if (g.rhs().op() == Op::kNot)
          return "<" + print(g.lhs(), kIffLevel) + "> " + print(g.rhs().arg(), kUnaryLevel);
        break;
      default:
        break;
    }
    level = kUnaryLevel;
    return "~" + print(g, kUnaryLevel);
  }
};

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const Formula& f) { return Printer().print(f, kIffLevel); }

std::ostream& operator<<(std::ostream& os, const Formula& f) { return os << to_string(f); }

bool is_valid_identifier(std::string_view name) { return is_alnum_name(name) && !is_keyword(name); }

}  // namespace topal
