#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>

#include "hybrix/errors.hpp"

namespace hybrix {

// ── Languages ───────────────────────────────────────────────────────────────
// The three hybrid languages. The tag only gates which node kinds may occur:
// Sat is specific to H(@), Exists to H(E).

enum class Lang : std::uint8_t { H, HAt, HE };

const char* lang_name(Lang lang);
Lang lang_from_string(const std::string& s);  // accepts H, H@, H_AT, HE, H_E

// ── Formula AST ─────────────────────────────────────────────────────────────
// Core node kinds only. ⊤, ∨, →, ↔, □ and A are parser-level sugar and are
// expanded away before an AST is built, so every semantic clause has exactly
// the core cases. Sat stores the nominal *name* of its subscript.

enum class NodeKind : std::uint8_t { Bot, Prop, Nom, Neg, Conj, Diamond, Sat, Exists };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
    NodeKind kind{};
    std::string name;        // Prop/Nom name; Sat subscript
    FormulaPtr left, right;  // children (unary ops use left)
};

// Core constructors.
FormulaPtr f_bot();
FormulaPtr f_prop(std::string name);
FormulaPtr f_nom(std::string name);
FormulaPtr f_neg(FormulaPtr sub);
FormulaPtr f_conj(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr f_dia(FormulaPtr sub);
FormulaPtr f_sat(std::string nom, FormulaPtr sub);
FormulaPtr f_exists(FormulaPtr sub);

// Sugar constructors; these expand immediately into core nodes.
FormulaPtr f_top();                              // ~bot
FormulaPtr f_or(FormulaPtr lhs, FormulaPtr rhs); // ~(~l & ~r)
FormulaPtr f_impl(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr f_iff(FormulaPtr lhs, FormulaPtr rhs);
FormulaPtr f_box(FormulaPtr sub);                // ~<>~
FormulaPtr f_univ(FormulaPtr sub);               // ~E~
FormulaPtr f_dia_n(FormulaPtr sub, int n);
FormulaPtr f_box_n(FormulaPtr sub, int n);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
std::size_t hash_of(const FormulaPtr& f);

// True iff every node of f is allowed in lang.
bool lang_ok(const FormulaPtr& f, Lang lang);
// Throws LanguageError naming the offending connective.
void require_lang(const FormulaPtr& f, Lang lang);

// ── Equations and substitution ──────────────────────────────────────────────

struct Equation {
    FormulaPtr lhs, rhs;
};

// Finite sorted substitution: formulas for propositional variables, nominal
// names for nominal names; identity elsewhere.
struct SubstitutionMap {
    std::map<std::string, FormulaPtr> props;
    std::map<std::string, std::string> noms;
};

FormulaPtr sorted_substitute(const FormulaPtr& f, const SubstitutionMap& sigma);

// sigma2 after sigma1, as a single map (used by the composition property test).
SubstitutionMap compose(const SubstitutionMap& sigma2, const SubstitutionMap& sigma1);

// True iff the named variable or nominal appears in f, including as a Sat
// subscript. PROP and NOM names never collide (distinct lexical spaces).
bool occurs(const std::string& symbol, const FormulaPtr& f);

void collect_symbols(const FormulaPtr& f, std::set<std::string>& props,
                     std::set<std::string>& noms);

}  // namespace hybrix
