#include "hybrix/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace hybrix {

// ── FiniteBAO ───────────────────────────────────────────────────────────────

FiniteBAO::FiniteBAO(int atom_count, std::vector<Element> diamond_on_atoms)
    : atom_count_(atom_count), diamond_on_atoms_(std::move(diamond_on_atoms)) {
    if (atom_count_ < 1 || atom_count_ > 16)
        throw InputError("atom count must be between 1 and 16");
    top_ = static_cast<Element>((std::uint64_t(1) << atom_count_) - 1);
    if (diamond_on_atoms_.size() != static_cast<std::size_t>(atom_count_))
        throw InputError("diamond table must have one entry per atom");
    for (Element row : diamond_on_atoms_)
        if (row > top_) throw InputError("diamond table entry out of range");
}

void FiniteBAO::require_element(Element a) const {
    if (a > top_) throw AlgebraMismatch("element out of range for this algebra");
}

Element FiniteBAO::meet(Element a, Element b) const {
    require_element(a);
    require_element(b);
    return a & b;
}

Element FiniteBAO::join(Element a, Element b) const {
    require_element(a);
    require_element(b);
    return a | b;
}

Element FiniteBAO::complement(Element a) const {
    require_element(a);
    return ~a & top_;
}

bool FiniteBAO::leq(Element a, Element b) const {
    require_element(a);
    require_element(b);
    return (a & ~b) == 0;
}

std::vector<int> FiniteBAO::atoms_below(Element a) const {
    require_element(a);
    std::vector<int> out;
    for (int i = 0; i < atom_count_; ++i)
        if (a & (Element(1) << i)) out.push_back(i);
    return out;
}

Element FiniteBAO::diamond(Element a) const {
    require_element(a);
    Element out = 0;
    for (int i = 0; i < atom_count_; ++i)
        if (a & (Element(1) << i)) out |= diamond_on_atoms_[i];
    return out;
}

Element FiniteBAO::box(Element a) const { return complement(diamond(complement(a))); }

bool FiniteBAO::rel(int x, int y) const {
    return (diamond_on_atoms_[y] & (Element(1) << x)) != 0;
}

Element FiniteBAO::diamond_inv(Element a) const {
    require_element(a);
    // ⟨R˘⟩a: atoms x such that ◇x meets a.
    Element out = 0;
    for (int x = 0; x < atom_count_; ++x)
        if (diamond_on_atoms_[x] & a) out |= Element(1) << x;
    // Pointwise left-adjoint formula: ◇⁻¹a = ⋀{b | a ≤ □b}.
    Element pointwise = top_;
    for (Element b = 0; b <= top_; ++b)
        if (leq(a, box(b))) pointwise &= b;
    if (out != pointwise)
        throw InternalInvariantBreach("diamond_inv: relational and adjoint forms disagree");
    return out;
}

Element FiniteBAO::box_inv(Element a) const {
    require_element(a);
    Element relational = complement(diamond_inv(complement(a)));
    // Pointwise right-adjoint formula: □⁻¹a = ⋁{b | ◇b ≤ a}.
    Element pointwise = 0;
    for (Element b = 0; b <= top_; ++b)
        if (leq(diamond(b), a)) pointwise |= b;
    if (relational != pointwise)
        throw InternalInvariantBreach("box_inv: relational and adjoint forms disagree");
    return relational;
}

namespace {

// Composes two atom tables viewed as relations: out[y] = ⟨S⟩(t[y]).
std::vector<Element> compose_tables(const FiniteBAO& bao, const std::vector<Element>& s,
                                    const std::vector<Element>& t) {
    std::vector<Element> out(t.size());
    for (std::size_t y = 0; y < t.size(); ++y) {
        Element acc = 0;
        for (int i = 0; i < bao.atoms(); ++i)
            if (t[y] & (Element(1) << i)) acc |= s[i];
        out[y] = acc;
    }
    return out;
}

std::vector<std::vector<Element>> power_closure(const FiniteBAO& bao,
                                                const std::vector<Element>& step) {
    std::vector<std::vector<Element>> powers;
    std::vector<Element> identity(bao.atoms());
    for (int i = 0; i < bao.atoms(); ++i) identity[i] = Element(1) << i;
    powers.push_back(identity);
    for (;;) {
        std::vector<Element> next = compose_tables(bao, step, powers.back());
        if (std::find(powers.begin(), powers.end(), next) != powers.end()) break;
        powers.push_back(next);
    }
    return powers;
}

}  // namespace

const std::vector<std::vector<Element>>& FiniteBAO::diamond_power_tables() const {
    if (pow_.empty()) pow_ = power_closure(*this, diamond_on_atoms_);
    return pow_;
}

const std::vector<std::vector<Element>>& FiniteBAO::diamond_inv_power_tables() const {
    if (inv_pow_.empty()) {
        // ⟨R˘⟩ atom table: (◇⁻¹)(atom y) = {x | y ≤ ◇x}.
        std::vector<Element> step(atom_count_);
        for (int y = 0; y < atom_count_; ++y) {
            Element acc = 0;
            for (int x = 0; x < atom_count_; ++x)
                if (diamond_on_atoms_[x] & (Element(1) << y)) acc |= Element(1) << x;
            step[y] = acc;
        }
        inv_pow_ = power_closure(*this, step);
    }
    return inv_pow_;
}

Element FiniteBAO::apply_table(const std::vector<Element>& atom_table, Element a) const {
    require_element(a);
    Element out = 0;
    for (int i = 0; i < atom_count_; ++i)
        if (a & (Element(1) << i)) out |= atom_table[i];
    return out;
}

Element FiniteBAO::box_from_table(const std::vector<Element>& atom_table, Element a) const {
    return complement(apply_table(atom_table, complement(a)));
}

// ── Hybrid structures ───────────────────────────────────────────────────────

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::Hybrid: return "hybrid";
        case Kind::Grounded: return "grounded";
        case Kind::Degenerate: return "degenerate";
        case Kind::Orthodox: return "orthodox";
    }
    return "?";
}

Kind kind_from_string(const std::string& s) {
    if (s == "hybrid") return Kind::Hybrid;
    if (s == "grounded") return Kind::Grounded;
    if (s == "degenerate") return Kind::Degenerate;
    if (s == "orthodox") return Kind::Orthodox;
    throw InputError("unknown kind: " + s);
}

Element HybridStructure::constant(const std::string& nom) const {
    if (!is_orthodox()) throw KindError("constants are only defined in orthodox mode");
    auto it = constants.find(nom);
    return it == constants.end() ? default_constant : it->second;
}

HybridStructure make_hybrid(FiniteBAO bao, Element designated_atoms) {
    bao.require_element(designated_atoms);
    if (designated_atoms == 0)
        throw KindError("a hybrid algebra needs a non-empty set of designated atoms");
    HybridStructure h{std::move(bao), designated_atoms, Kind::Hybrid, {}, 0, std::nullopt};
    return h;
}

HybridStructure make_degenerate(FiniteBAO bao) {
    return HybridStructure{std::move(bao), 0, Kind::Degenerate, {}, 0, std::nullopt};
}

HybridStructure make_orthodox(FiniteBAO bao, std::map<std::string, Element> constants,
                              std::optional<AtTable> at, std::optional<Element> default_constant) {
    for (const auto& [name, value] : constants) bao.require_element(value);
    Element dflt = default_constant.value_or(bao.top());
    bao.require_element(dflt);
    if (at) {
        for (const auto& [sub, row] : *at) {
            bao.require_element(sub);
            if (row.size() != bao.element_count())
                throw InputError("@ table row must cover every element");
            for (Element v : row) bao.require_element(v);
        }
    }
    HybridStructure h{std::move(bao), 0, Kind::Orthodox, std::move(constants), dflt,
                      std::move(at)};
    return h;
}

// ── @ operator ──────────────────────────────────────────────────────────────

Element at_operator(const HybridStructure& h, Element x, Element a) {
    h.bao.require_element(a);
    if (!h.bao.is_atom(x) || !h.bao.leq(x, h.designated))
        throw NotDesignated("@ subscript must be a designated atom");
    return h.bao.leq(x, a) ? h.bao.top() : h.bao.bot();
}

AtTable canonical_at_table(const FiniteBAO& bao, const std::vector<Element>& subscripts) {
    AtTable table;
    for (Element x : subscripts) {
        std::vector<Element> row(bao.element_count());
        for (Element a = 0; a <= bao.top(); ++a) row[a] = bao.leq(x, a) ? bao.top() : bao.bot();
        table[x] = std::move(row);
    }
    return table;
}

std::vector<AtViolation> check_at_axioms(const FiniteBAO& bao,
                                         const std::vector<Element>& subscripts,
                                         const AtTable& table) {
    std::vector<AtViolation> out;
    auto at = [&](Element x, Element a) -> Element {
        auto it = table.find(x);
        if (it == table.end()) throw InputError("@ table has no row for a subscript");
        return it->second.at(a);
    };
    for (Element x : subscripts) {
        for (Element a = 0; a <= bao.top(); ++a) {
            for (Element b = 0; b <= bao.top(); ++b) {
                Element lhs = at(x, bao.join(bao.complement(a), b));
                Element rhs = bao.join(bao.complement(at(x, a)), at(x, b));
                if (!bao.leq(lhs, rhs)) out.push_back({"K@", x, 0, a, b});
            }
            if (bao.complement(at(x, a)) != at(x, bao.complement(a)))
                out.push_back({"self-dual", x, 0, a, 0});
            for (Element y : subscripts)
                if (!bao.leq(at(x, at(y, a)), at(y, a))) out.push_back({"agree", x, y, a, 0});
            if (!bao.leq(bao.meet(x, a), at(x, a))) out.push_back({"introduction", x, 0, a, 0});
            if (!bao.leq(bao.diamond(at(x, a)), at(x, a))) out.push_back({"back", x, 0, a, 0});
        }
        if (at(x, x) != bao.top()) out.push_back({"ref", x, 0, x, 0});
    }
    return out;
}

std::vector<AtViolation> check_at_axioms(const HybridStructure& h, const AtTable& table) {
    std::vector<Element> subscripts;
    if (h.is_orthodox()) {
        for (const auto& [name, value] : h.constants) subscripts.push_back(value);
        std::sort(subscripts.begin(), subscripts.end());
        subscripts.erase(std::unique(subscripts.begin(), subscripts.end()), subscripts.end());
    } else {
        for (int i : h.designated_atoms()) subscripts.push_back(Element(1) << i);
    }
    return check_at_axioms(h.bao, subscripts, table);
}

// ── Permeation ──────────────────────────────────────────────────────────────

PermeationResult is_permeated(const HybridStructure& h) {
    if (h.kind != Kind::Hybrid)
        throw KindError(std::string("is_permeated needs a hybrid-kind structure, got ") +
                        kind_name(h.kind));
    PermeationResult res;
    const FiniteBAO& bao = h.bao;
    // Every nonzero element bounds a designated atom.
    for (Element a = 1; a <= bao.top(); ++a) {
        if ((a & h.designated) == 0) {
            res.permeated = false;
            res.witness_a = a;
            return res;
        }
    }
    // ◇-witnesses can be chosen designated.
    for (int xi : bao.atoms_below(h.designated)) {
        Element x = Element(1) << xi;
        for (Element a = 0; a <= bao.top(); ++a) {
            if (!bao.leq(x, bao.diamond(a))) continue;
            bool found = false;
            for (int yi : bao.atoms_below(a & h.designated)) {
                Element y = Element(1) << yi;
                if (bao.leq(x, bao.diamond(y))) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                res.permeated = false;
                res.witness_xa = {x, a};
                return res;
            }
        }
    }
    return res;
}

// ── Product and grounding ───────────────────────────────────────────────────

HybridStructure product(const HybridStructure& a, const HybridStructure& b) {
    if (a.is_orthodox() || b.is_orthodox() || a.kind == Kind::Grounded || b.kind == Kind::Grounded)
        throw KindError("product is defined for hybrid and degenerate structures");
    int ka = a.bao.atoms(), kb = b.bao.atoms();
    std::vector<Element> table(ka + kb);
    for (int i = 0; i < ka; ++i) table[i] = a.bao.diamond_atom(i);
    for (int i = 0; i < kb; ++i)
        table[ka + i] = static_cast<Element>(b.bao.diamond_atom(i)) << ka;
    FiniteBAO bao(ka + kb, std::move(table));
    Element designated = a.designated | (b.designated << ka);
    if (designated == 0) return make_degenerate(std::move(bao));
    return make_hybrid(std::move(bao), designated);
}

HybridStructure grounded(const HybridStructure& h) {
    if (h.is_orthodox()) throw KindError("cannot ground an orthodox interpretation");
    HybridStructure out = h;
    out.kind = Kind::Grounded;
    return out;
}

// ── Nom schema ──────────────────────────────────────────────────────────────

static bool nom_schema_for_element(const HybridStructure& h, Element s) {
    const FiniteBAO& bao = h.bao;
    const auto& dpow = bao.diamond_power_tables();
    for (const auto& dn : dpow) {
        for (const auto& dm : dpow) {
            for (Element a = 0; a <= bao.top(); ++a) {
                Element lhs = bao.apply_table(dn, bao.meet(s, a));
                Element rhs = bao.box_from_table(dm, bao.join(bao.complement(s), a));
                if (!bao.leq(lhs, rhs)) return false;
            }
        }
    }
    return true;
}

bool nom_schema_holds(const HybridStructure& h, const std::string& nominal) {
    if (!h.is_orthodox()) throw KindError("the Nom schema concerns orthodox interpretations");
    return nom_schema_for_element(h, h.constant(nominal));
}

bool nom_schema_holds_all(const HybridStructure& h) {
    if (!h.is_orthodox()) throw KindError("the Nom schema concerns orthodox interpretations");
    for (const auto& [name, value] : h.constants)
        if (!nom_schema_for_element(h, value)) return false;
    return true;
}

bool is_valid_at_base(const HybridStructure& h) {
    if (!h.is_orthodox() || !h.has_at()) return false;
    std::vector<Element> subscripts;
    for (const auto& [name, value] : h.constants) {
        if (!h.bao.is_atom(value)) return false;
        subscripts.push_back(value);
    }
    std::sort(subscripts.begin(), subscripts.end());
    subscripts.erase(std::unique(subscripts.begin(), subscripts.end()), subscripts.end());
    return check_at_axioms(h.bao, subscripts, *h.at).empty();
}

// ── Isomorphism ─────────────────────────────────────────────────────────────

std::optional<std::vector<int>> isomorphic(const HybridStructure& a, const HybridStructure& b) {
    if (a.kind != b.kind) return std::nullopt;
    int k = a.bao.atoms();
    if (k != b.bao.atoms()) return std::nullopt;
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int x = 0; x < k && ok; ++x) {
            if (((a.designated >> x) & 1) != ((b.designated >> perm[x]) & 1)) ok = false;
            for (int y = 0; y < k && ok; ++y)
                if (a.bao.rel(x, y) != b.bao.rel(perm[x], perm[y])) ok = false;
        }
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace hybrix
