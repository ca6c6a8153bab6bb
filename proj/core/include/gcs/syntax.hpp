#pragma once

// Text form of expressions.
//
//   expr    := term (("+"|"-") term)* ;
//   term    := factor (("*"|"/") factor)* ;
//   factor  := base ("^" exponent)? | "-" factor ;
//   base    := number | "t" | "x" | depvar | depvar "_" digits
//            | ident | "(" expr ")" | ("exp"|"ln") "(" expr ")" ;
//   exponent:= integer | "-" integer | "(" ["-"] integer ["/" integer] ")" ;
//
// depvar_k is the k-th x-derivative of the dependent variable; depvar_0 is
// the variable itself. Other identifiers are parameters.

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "gcs/expr.hpp"

namespace gcs {

struct ParseOptions {
  std::string depvar = "u";
  // When set, identifiers outside this set are rejected.
  std::optional<std::set<std::string>> parameters;
};

Expr parse(std::string_view text, const ParseOptions& options = {});
Expr parse(std::string_view text, std::string_view depvar);

// Prints in the grammar above. Jet variables with t-derivatives, which the
// grammar cannot express, print as depvar_{a,b}.
std::string to_string(const Expr& e, std::string_view depvar = "u");

std::string symbol_name(const Symbol& s, std::string_view depvar = "u");

// True for names the grammar reserves (t, x, exp, ln).
bool is_reserved_name(std::string_view name);

}  // namespace gcs
