#include "hybrix/formula.hpp"

#include <functional>

namespace hybrix {

const char* lang_name(Lang lang) {
    switch (lang) {
        case Lang::H: return "H";
        case Lang::HAt: return "H@";
        case Lang::HE: return "HE";
    }
    return "?";
}

Lang lang_from_string(const std::string& s) {
    if (s == "H") return Lang::H;
    if (s == "H@" || s == "H_AT" || s == "HAT" || s == "H@A") return Lang::HAt;
    if (s == "HE" || s == "H_E" || s == "HE)") return Lang::HE;
    throw InputError("unknown language tag: " + s);
}

static FormulaPtr make(NodeKind kind, std::string name, FormulaPtr l, FormulaPtr r) {
    auto f = std::make_shared<Formula>();
    f->kind = kind;
    f->name = std::move(name);
    f->left = std::move(l);
    f->right = std::move(r);
    return f;
}

FormulaPtr f_bot() {
    static const FormulaPtr bot = make(NodeKind::Bot, "", nullptr, nullptr);
    return bot;
}

FormulaPtr f_prop(std::string name) {
    if (name.empty()) throw InputError("empty proposition name");
    return make(NodeKind::Prop, std::move(name), nullptr, nullptr);
}

FormulaPtr f_nom(std::string name) {
    if (name.empty()) throw InputError("empty nominal name");
    return make(NodeKind::Nom, std::move(name), nullptr, nullptr);
}

FormulaPtr f_neg(FormulaPtr sub) { return make(NodeKind::Neg, "", std::move(sub), nullptr); }

FormulaPtr f_conj(FormulaPtr lhs, FormulaPtr rhs) {
    return make(NodeKind::Conj, "", std::move(lhs), std::move(rhs));
}

FormulaPtr f_dia(FormulaPtr sub) { return make(NodeKind::Diamond, "", std::move(sub), nullptr); }

FormulaPtr f_sat(std::string nom, FormulaPtr sub) {
    if (nom.empty()) throw InputError("empty nominal name");
    return make(NodeKind::Sat, std::move(nom), std::move(sub), nullptr);
}

FormulaPtr f_exists(FormulaPtr sub) { return make(NodeKind::Exists, "", std::move(sub), nullptr); }

FormulaPtr f_top() { return f_neg(f_bot()); }

FormulaPtr f_or(FormulaPtr lhs, FormulaPtr rhs) {
    return f_neg(f_conj(f_neg(std::move(lhs)), f_neg(std::move(rhs))));
}

FormulaPtr f_impl(FormulaPtr lhs, FormulaPtr rhs) {
    return f_neg(f_conj(std::move(lhs), f_neg(std::move(rhs))));
}

FormulaPtr f_iff(FormulaPtr lhs, FormulaPtr rhs) {
    return f_conj(f_impl(lhs, rhs), f_impl(rhs, lhs));
}

FormulaPtr f_box(FormulaPtr sub) { return f_neg(f_dia(f_neg(std::move(sub)))); }

FormulaPtr f_univ(FormulaPtr sub) { return f_neg(f_exists(f_neg(std::move(sub)))); }

FormulaPtr f_dia_n(FormulaPtr sub, int n) {
    for (int i = 0; i < n; ++i) sub = f_dia(std::move(sub));
    return sub;
}

FormulaPtr f_box_n(FormulaPtr sub, int n) {
    for (int i = 0; i < n; ++i) sub = f_box(std::move(sub));
    return sub;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->kind != b->kind || a->name != b->name) return false;
    return equal(a->left, b->left) && equal(a->right, b->right);
}

std::size_t hash_of(const FormulaPtr& f) {
    if (!f) return 0;
    std::size_t h = static_cast<std::size_t>(f->kind) * 0x9e3779b97f4a7c15ULL;
    h ^= std::hash<std::string>{}(f->name) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= hash_of(f->left) + 0x9e3779b9 + (h << 6) + (h >> 2);
    h ^= hash_of(f->right) + 0x9e3779b9 + (h << 6) + (h >> 2);
    return h;
}

bool lang_ok(const FormulaPtr& f, Lang lang) {
    if (!f) return true;
    if (f->kind == NodeKind::Sat && lang != Lang::HAt) return false;
    if (f->kind == NodeKind::Exists && lang != Lang::HE) return false;
    return lang_ok(f->left, lang) && lang_ok(f->right, lang);
}

void require_lang(const FormulaPtr& f, Lang lang) {
    if (!f) return;
    if (f->kind == NodeKind::Sat && lang != Lang::HAt)
        throw LanguageError(std::string("@ is not in language ") + lang_name(lang));
    if (f->kind == NodeKind::Exists && lang != Lang::HE)
        throw LanguageError(std::string("E is not in language ") + lang_name(lang));
    require_lang(f->left, lang);
    require_lang(f->right, lang);
}

FormulaPtr sorted_substitute(const FormulaPtr& f, const SubstitutionMap& sigma) {
    switch (f->kind) {
        case NodeKind::Bot: return f;
        case NodeKind::Prop: {
            auto it = sigma.props.find(f->name);
            return it == sigma.props.end() ? f : it->second;
        }
        case NodeKind::Nom: {
            auto it = sigma.noms.find(f->name);
            return it == sigma.noms.end() ? f : f_nom(it->second);
        }
        case NodeKind::Neg: return f_neg(sorted_substitute(f->left, sigma));
        case NodeKind::Conj:
            return f_conj(sorted_substitute(f->left, sigma), sorted_substitute(f->right, sigma));
        case NodeKind::Diamond: return f_dia(sorted_substitute(f->left, sigma));
        case NodeKind::Sat: {
            auto it = sigma.noms.find(f->name);
            std::string nom = it == sigma.noms.end() ? f->name : it->second;
            return f_sat(std::move(nom), sorted_substitute(f->left, sigma));
        }
        case NodeKind::Exists: return f_exists(sorted_substitute(f->left, sigma));
    }
    throw InternalInvariantBreach("unknown node kind");
}

SubstitutionMap compose(const SubstitutionMap& sigma2, const SubstitutionMap& sigma1) {
    SubstitutionMap out;
    for (const auto& [p, body] : sigma1.props) out.props[p] = sorted_substitute(body, sigma2);
    for (const auto& [p, body] : sigma2.props)
        if (!out.props.count(p)) out.props[p] = body;
    for (const auto& [i, j] : sigma1.noms) {
        auto it = sigma2.noms.find(j);
        out.noms[i] = it == sigma2.noms.end() ? j : it->second;
    }
    for (const auto& [i, j] : sigma2.noms)
        if (!out.noms.count(i)) out.noms[i] = j;
    return out;
}

bool occurs(const std::string& symbol, const FormulaPtr& f) {
    if (!f) return false;
    if ((f->kind == NodeKind::Prop || f->kind == NodeKind::Nom || f->kind == NodeKind::Sat) &&
        f->name == symbol)
        return true;
    return occurs(symbol, f->left) || occurs(symbol, f->right);
}

void collect_symbols(const FormulaPtr& f, std::set<std::string>& props,
                     std::set<std::string>& noms) {
    if (!f) return;
    if (f->kind == NodeKind::Prop) props.insert(f->name);
    if (f->kind == NodeKind::Nom) noms.insert(f->name);
    if (f->kind == NodeKind::Sat) noms.insert(f->name);
    collect_symbols(f->left, props, noms);
    collect_symbols(f->right, props, noms);
}

}  // namespace hybrix
