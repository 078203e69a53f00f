#pragma once

#include <string>

#include "hybrix/formula.hpp"

namespace hybrix {

// Concrete grammar (ASCII, whitespace-insensitive):
//
//   formula := impl ("<->" formula)?            right-associative
//   impl    := or ("->" impl)?                  right-associative
//   or      := and ("|" and)*
//   and     := unary ("&" unary)*
//   unary   := "~" unary | "<>" unary | "[]" unary | "@"NOM unary
//            | "E" unary | "A" unary | atom
//   atom    := "bot" | "top" | PROP | NOM | "(" formula ")"
//
// PROP names start with 'p', NOM names with 'i' or 'j', both followed by
// [A-Za-z0-9_]*. "bot", "top", "E" and "A" are reserved. ⊤, ∨, →, ↔, □, A
// are sugar and expand during parsing; the returned AST has core nodes only.
FormulaPtr parse(const std::string& text, Lang lang);

// Canonical core-syntax printer; parse(print(f), lang) == f for every core f
// whose names are grammar-valid.
std::string print(const FormulaPtr& f);

}  // namespace hybrix
