#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hybrix/errors.hpp"

namespace hybrix {

// Elements of a finite Boolean algebra with k atoms are subsets of
// {0..k-1}, encoded as bitmasks. Every finite BA is of this form, so the
// encoding is canonical and collision-free.
using Element = std::uint32_t;

// ── FiniteBAO ───────────────────────────────────────────────────────────────
// A finite Boolean algebra with one normal additive operator. ◇ is stored by
// its action on atoms and extended additively, which bakes in normality
// (◇⊥ = ⊥) and additivity (◇(a∨b) = ◇a∨◇b). The derived atom relation is
// x R y iff x ≤ ◇y.

class FiniteBAO {
  public:
    FiniteBAO(int atom_count, std::vector<Element> diamond_on_atoms);

    int atoms() const { return atom_count_; }
    Element bot() const { return 0; }
    Element top() const { return top_; }
    std::size_t element_count() const { return std::size_t(1) << atom_count_; }

    void require_element(Element a) const;
    bool is_atom(Element a) const { return a != 0 && (a & (a - 1)) == 0; }

    Element meet(Element a, Element b) const;
    Element join(Element a, Element b) const;
    Element complement(Element a) const;
    bool leq(Element a, Element b) const;
    std::vector<int> atoms_below(Element a) const;

    Element diamond(Element a) const;
    Element box(Element a) const;

    // Converse-relation modalities: ◇⁻¹ = ⟨R˘⟩ is the left adjoint of □,
    // □⁻¹ = [R˘] the right adjoint of ◇. Both are computed relationally and
    // re-derived from the pointwise adjoint formulas; a disagreement is an
    // internal invariant breach.
    Element diamond_inv(Element a) const;
    Element box_inv(Element a) const;

    bool rel(int x, int y) const;  // x R y  iff  atom x ≤ ◇(atom y)
    Element diamond_atom(int y) const { return diamond_on_atoms_[y]; }

    // Atom tables of the distinct powers ◇⁰, ◇¹, … until the power sequence
    // of R repeats (finite monoid closure). tables()[n][y] = ◇ⁿ(atom y).
    const std::vector<std::vector<Element>>& diamond_power_tables() const;
    // Same for (◇⁻¹)ⁿ, from the converse relation's powers.
    const std::vector<std::vector<Element>>& diamond_inv_power_tables() const;

    Element apply_table(const std::vector<Element>& atom_table, Element a) const;
    Element box_from_table(const std::vector<Element>& atom_table, Element a) const;

    bool operator==(const FiniteBAO& o) const {
        return atom_count_ == o.atom_count_ && diamond_on_atoms_ == o.diamond_on_atoms_;
    }

  private:
    int atom_count_;
    Element top_;
    std::vector<Element> diamond_on_atoms_;
    mutable std::vector<std::vector<Element>> pow_, inv_pow_;  // lazy caches
};

// ── Hybrid structures ───────────────────────────────────────────────────────
// One carrier type for the paper's four flavours:
//   Hybrid      — designated atoms X ≠ ∅; nominals range over X.
//   Grounded    — nominals range over X ∪ {⊥} (X may be empty).
//   Degenerate  — X = ∅; no nominal values at all.
//   Orthodox    — nominals are constants; optional @ table for the @ language.

enum class Kind : std::uint8_t { Hybrid, Grounded, Degenerate, Orthodox };

const char* kind_name(Kind k);
Kind kind_from_string(const std::string& s);

// @ tables map a subscript element (a designated atom, or an orthodox
// constant value) to a row of 2^k values indexed by element.
using AtTable = std::map<Element, std::vector<Element>>;

struct HybridStructure {
    FiniteBAO bao;
    Element designated = 0;  // atom mask (hybrid/grounded/degenerate kinds)
    Kind kind = Kind::Hybrid;

    // Orthodox mode: constants for the workload's nominals; any other nominal
    // evaluates to default_constant.
    std::map<std::string, Element> constants;
    Element default_constant = 0;  // set to top() by make_orthodox
    std::optional<AtTable> at;     // orthodox @ mode

    bool is_orthodox() const { return kind == Kind::Orthodox; }
    bool has_at() const { return at.has_value(); }
    Element constant(const std::string& nom) const;

    std::vector<int> designated_atoms() const { return bao.atoms_below(designated); }
};

HybridStructure make_hybrid(FiniteBAO bao, Element designated_atoms);
HybridStructure make_degenerate(FiniteBAO bao);
HybridStructure make_orthodox(FiniteBAO bao, std::map<std::string, Element> constants,
                              std::optional<AtTable> at = std::nullopt,
                              std::optional<Element> default_constant = std::nullopt);

// ── Operations ──────────────────────────────────────────────────────────────

// @_x a for a designated atom x: ⊤ if x ≤ a, else ⊥.
Element at_operator(const HybridStructure& h, Element x, Element a);

AtTable canonical_at_table(const FiniteBAO& bao, const std::vector<Element>& subscripts);

struct AtViolation {
    std::string axiom;  // K@ | self-dual | agree | ref | introduction | back
    Element x, y, a, b;
};

// Checks the six hybrid @-algebra axioms for an explicit table whose
// subscripts are the given elements (designated atoms for hybrid structures,
// constant values for orthodox ones).
std::vector<AtViolation> check_at_axioms(const FiniteBAO& bao,
                                         const std::vector<Element>& subscripts,
                                         const AtTable& table);
std::vector<AtViolation> check_at_axioms(const HybridStructure& h, const AtTable& table);

struct PermeationResult {
    bool permeated = true;
    // First failing instance, when not permeated:
    std::optional<Element> witness_a;                  // condition 1: no x ∈ X below a
    std::optional<std::pair<Element, Element>> witness_xa;  // condition 2: (x, a)
};

PermeationResult is_permeated(const HybridStructure& h);

// Product with componentwise ◇ and X_{A×B} = {(x,⊥)} ∪ {(⊥,y)}. Left atoms
// keep their indices; right atoms are shifted by atoms(left).
HybridStructure product(const HybridStructure& a, const HybridStructure& b);

// Adds ⊥ to the nominal range (kind becomes Grounded; idempotent).
HybridStructure grounded(const HybridStructure& h);

// Orthodox Nom schema: ◇ⁿ(s ∧ a) ≤ □ᵐ(¬s ∨ a) for every element a and every
// pair of distinct relational powers (exact; powers enumerated to closure).
bool nom_schema_holds(const HybridStructure& h, const std::string& nominal);
bool nom_schema_holds_all(const HybridStructure& h);  // every stored constant

// Valid @-mode orthodox base: every stored constant is an atom and the table
// satisfies the six @-axioms at the constant subscripts.
bool is_valid_at_base(const HybridStructure& h);

// Atom bijection preserving R_◇ and the designated set, if one exists.
std::optional<std::vector<int>> isomorphic(const HybridStructure& a, const HybridStructure& b);

}  // namespace hybrix
