#pragma once

// Set expressions over ℕ:
//
//   expr := term (("|" | "&" | "\") term)*
//   term := "!" term | atom ("<<" NAT)*
//   atom := "res(" NAT "," NAT ")" | "set{" NAT ("," NAT)* "}"
//         | "interval(" NAT "," NAT ")" | "N" | "ep(a=" NAT ";w=" BITS ";per=" BITS ")"
//         | "(" expr ")"
//
// Binary operators share one precedence level and associate to the left;
// "!" and "<<" bind tighter. Whitespace between tokens is ignored.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pws/epset.hpp"

namespace pws {

struct SetExpr {
  enum class Kind { literal, complement, shift, unite, intersect, difference };
  Kind kind = Kind::literal;
  EpSet value;       // literal
  std::string text;  // literal source, e.g. "res(0,3)"
  Nat amount = 0;    // shift
  std::vector<std::shared_ptr<const SetExpr>> operands;
};

/// Throws ParseError (with the offending byte offset) on malformed input,
/// res modulus 0, interval(a, b) with a > b, and 0 used as an element of ℕ.
std::shared_ptr<const SetExpr> parse_expr(std::string_view text);

EpSet eval(const SetExpr& e);

/// parse_expr + eval.
EpSet eval_expr(std::string_view text);

/// Fully parenthesized source form; re-parses to an equal expression.
std::string to_string(const SetExpr& e);

}  // namespace pws
