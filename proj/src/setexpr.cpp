#include "pws/setexpr.hpp"

#include <cctype>
#include <charconv>

namespace pws {

namespace {

using Node = std::shared_ptr<const SetExpr>;

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view lit) {
    skip_space();
    if (text_.substr(pos_, lit.size()) != lit) return false;
    pos_ += lit.size();
    return true;
  }

  void expect(std::string_view lit) {
    if (!accept(lit)) fail("expected '" + std::string(lit) + "'");
  }

  Nat number() {
    skip_space();
    Nat value = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ptr == first) fail("expected a number");
    if (ec != std::errc{}) fail("number out of range");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Nat positive() {
    skip_space();
    const std::size_t at = pos_;
    const Nat n = number();
    if (n == 0) fail_at("0 is not in ℕ", at);
    return n;
  }

  static Node make(SetExpr::Kind kind, std::vector<Node> operands, Nat amount = 0) {
    auto e = std::make_shared<SetExpr>();
    e->kind = kind;
    e->operands = std::move(operands);
    e->amount = amount;
    return e;
  }

  Node literal(EpSet value, std::size_t from) {
    auto e = std::make_shared<SetExpr>();
    e->value = std::move(value);
    e->text = std::string(text_.substr(from, pos_ - from));
    return e;
  }

  Node expr() {
    Node left = term();
    while (true) {
      SetExpr::Kind kind;
      if (accept("|")) {
        kind = SetExpr::Kind::unite;
      } else if (accept("&")) {
        kind = SetExpr::Kind::intersect;
      } else if (accept("\\")) {
        kind = SetExpr::Kind::difference;
      } else {
        return left;
      }
      left = make(kind, {left, term()});
    }
  }

  Node term() {
    if (accept("!")) return make(SetExpr::Kind::complement, {term()});
    Node e = atom();
    while (accept("<<")) e = make(SetExpr::Kind::shift, {e}, number());
    return e;
  }

  Node atom() {
    skip_space();
    const std::size_t from = pos_;
    if (accept("res(")) {
      const Nat r = number();
      expect(",");
      skip_space();
      const std::size_t at = pos_;
      const Nat m = number();
      if (m == 0) fail_at("res modulus must be positive", at);
      expect(")");
      return literal(EpSet::residue(r, m), from);
    }
    if (accept("set{")) {
      std::vector<Nat> elems{positive()};
      while (accept(",")) elems.push_back(positive());
      expect("}");
      return literal(EpSet::finite(elems), from);
    }
    if (accept("interval(")) {
      const Nat lo = positive();
      expect(",");
      const Nat hi = positive();
      if (lo > hi) fail_at("interval start exceeds its end", from);
      expect(")");
      return literal(EpSet::interval(lo, hi), from);
    }
    if (text_.substr(pos_, 3) == "ep(") {
      const std::size_t close = text_.find(')', pos_);
      if (close == std::string_view::npos) fail("unterminated ep(...)");
      const std::string_view body = text_.substr(pos_, close + 1 - pos_);
      EpSet value;
      try {
        value = parse_ep(body);
      } catch (const ParseError& e) {
        fail_at(std::string("bad ep literal: ") + e.what(), from + e.position());
      }
      pos_ = close + 1;
      return literal(std::move(value), from);
    }
    if (accept("N")) return literal(EpSet::naturals(), from);
    if (accept("(")) {
      Node e = expr();
      expect(")");
      return e;
    }
    if (pos_ >= text_.size()) fail("unexpected end of input");
    fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::shared_ptr<const SetExpr> parse_expr(std::string_view text) { return Parser(text).parse(); }

EpSet eval(const SetExpr& e) {
  switch (e.kind) {
    case SetExpr::Kind::literal:
      return e.value;
    case SetExpr::Kind::complement:
      return complement(eval(*e.operands[0]));
    case SetExpr::Kind::shift:
      return shift_left(eval(*e.operands[0]), e.amount);
    case SetExpr::Kind::unite:
      return unite(eval(*e.operands[0]), eval(*e.operands[1]));
    case SetExpr::Kind::intersect:
      return intersect(eval(*e.operands[0]), eval(*e.operands[1]));
    case SetExpr::Kind::difference:
      return difference(eval(*e.operands[0]), eval(*e.operands[1]));
  }
  throw Error("unknown expression kind");
}

EpSet eval_expr(std::string_view text) { return eval(*parse_expr(text)); }

std::string to_string(const SetExpr& e) {
  switch (e.kind) {
    case SetExpr::Kind::literal:
      return e.text;
    case SetExpr::Kind::complement:
      return "!" + to_string(*e.operands[0]);
    case SetExpr::Kind::shift:
      return "(" + to_string(*e.operands[0]) + " << " + std::to_string(e.amount) + ")";
    case SetExpr::Kind::unite:
      return "(" + to_string(*e.operands[0]) + " | " + to_string(*e.operands[1]) + ")";
    case SetExpr::Kind::intersect:
      return "(" + to_string(*e.operands[0]) + " & " + to_string(*e.operands[1]) + ")";
    case SetExpr::Kind::difference:
      return "(" + to_string(*e.operands[0]) + " \\ " + to_string(*e.operands[1]) + ")";
  }
  throw Error("unknown expression kind");
}

}  // namespace pws
