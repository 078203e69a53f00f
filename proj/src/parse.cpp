#include "hybrix/parse.hpp"

#include <cctype>
#include <vector>

namespace hybrix {

namespace {

enum class Tok {
    End, Neg, Diamond, Box, At, ExistsKw, UnivKw, And, Or, Impl, Iff,
    LParen, RParen, BotKw, TopKw, PropName, NomName
};

struct Token {
    Tok kind;
    std::string text;
    std::size_t pos;
};

bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        switch (c) {
            case '~': out.push_back({Tok::Neg, "~", start}); ++i; continue;
            case '&': out.push_back({Tok::And, "&", start}); ++i; continue;
            case '|': out.push_back({Tok::Or, "|", start}); ++i; continue;
            case '(': out.push_back({Tok::LParen, "(", start}); ++i; continue;
            case ')': out.push_back({Tok::RParen, ")", start}); ++i; continue;
            case '@': out.push_back({Tok::At, "@", start}); ++i; continue;
            case '[':
                if (i + 1 < s.size() && s[i + 1] == ']') {
                    out.push_back({Tok::Box, "[]", start});
                    i += 2;
                    continue;
                }
                throw SyntaxError(start, "expected \"[]\"");
            case '<':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Tok::Diamond, "<>", start});
                    i += 2;
                    continue;
                }
                if (i + 2 < s.size() && s[i + 1] == '-' && s[i + 2] == '>') {
                    out.push_back({Tok::Iff, "<->", start});
                    i += 3;
                    continue;
                }
                throw SyntaxError(start, "expected \"<>\" or \"<->\"");
            case '-':
                if (i + 1 < s.size() && s[i + 1] == '>') {
                    out.push_back({Tok::Impl, "->", start});
                    i += 2;
                    continue;
                }
                throw SyntaxError(start, "expected \"->\"");
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < s.size() && ident_char(s[j])) ++j;
            std::string word = s.substr(i, j - i);
            i = j;
            if (word == "bot") out.push_back({Tok::BotKw, word, start});
            else if (word == "top") out.push_back({Tok::TopKw, word, start});
            else if (word == "E") out.push_back({Tok::ExistsKw, word, start});
            else if (word == "A") out.push_back({Tok::UnivKw, word, start});
            else if (word[0] == 'p') out.push_back({Tok::PropName, word, start});
            else if (word[0] == 'i' || word[0] == 'j') out.push_back({Tok::NomName, word, start});
            else throw SyntaxError(start, "unknown identifier \"" + word + "\"");
            continue;
        }
        throw SyntaxError(start, std::string("unexpected character '") + c + "'");
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
  public:
    Parser(std::vector<Token> toks, Lang lang) : toks_(std::move(toks)), lang_(lang) {}

    FormulaPtr run() {
        FormulaPtr f = iff();
        if (cur().kind != Tok::End) throw SyntaxError(cur().pos, "trailing input");
        return f;
    }

  private:
    const Token& cur() const { return toks_[idx_]; }
    Token take() { return toks_[idx_++]; }
    bool eat(Tok k) {
        if (cur().kind == k) {
            ++idx_;
            return true;
        }
        return false;
    }

    FormulaPtr iff() {
        FormulaPtr lhs = impl();
        if (eat(Tok::Iff)) return f_iff(lhs, iff());
        return lhs;
    }

    FormulaPtr impl() {
        FormulaPtr lhs = disj();
        if (eat(Tok::Impl)) return f_impl(lhs, impl());
        return lhs;
    }

    FormulaPtr disj() {
        FormulaPtr lhs = conj();
        while (eat(Tok::Or)) lhs = f_or(lhs, conj());
        return lhs;
    }

    FormulaPtr conj() {
        FormulaPtr lhs = unary();
        while (eat(Tok::And)) lhs = f_conj(lhs, unary());
        return lhs;
    }

    FormulaPtr unary() {
        const Token t = cur();
        switch (t.kind) {
            case Tok::Neg: ++idx_; return f_neg(unary());
            case Tok::Diamond: ++idx_; return f_dia(unary());
            case Tok::Box: ++idx_; return f_box(unary());
            case Tok::At: {
                ++idx_;
                if (lang_ != Lang::HAt)
                    throw LanguageError(std::string("@ is not in language ") + lang_name(lang_));
                if (cur().kind != Tok::NomName)
                    throw SyntaxError(cur().pos, "@ must be followed by a nominal");
                std::string nom = take().text;
                return f_sat(std::move(nom), unary());
            }
            case Tok::ExistsKw:
                ++idx_;
                if (lang_ != Lang::HE)
                    throw LanguageError(std::string("E is not in language ") + lang_name(lang_));
                return f_exists(unary());
            case Tok::UnivKw:
                ++idx_;
                if (lang_ != Lang::HE)
                    throw LanguageError(std::string("A is not in language ") + lang_name(lang_));
                return f_univ(unary());
            default: return atom();
        }
    }

    FormulaPtr atom() {
        const Token t = take();
        switch (t.kind) {
            case Tok::BotKw: return f_bot();
            case Tok::TopKw: return f_top();
            case Tok::PropName: return f_prop(t.text);
            case Tok::NomName: return f_nom(t.text);
            case Tok::LParen: {
                FormulaPtr f = iff();
                if (!eat(Tok::RParen)) throw SyntaxError(cur().pos, "expected ')'");
                return f;
            }
            default: throw SyntaxError(t.pos, "expected a formula");
        }
    }

    std::vector<Token> toks_;
    Lang lang_;
    std::size_t idx_ = 0;
};

// Operands of unary connectives and right operands of & need parentheses
// exactly when they are conjunctions.
std::string print_sub(const FormulaPtr& f, bool parenthesize_conj) {
    if (parenthesize_conj && f->kind == NodeKind::Conj) return "(" + print(f) + ")";
    return print(f);
}

}  // namespace

FormulaPtr parse(const std::string& text, Lang lang) {
    if (text.empty()) throw SyntaxError(0, "empty input");
    return Parser(tokenize(text), lang).run();
}

std::string print(const FormulaPtr& f) {
    switch (f->kind) {
        case NodeKind::Bot: return "bot";
        case NodeKind::Prop:
        case NodeKind::Nom: return f->name;
        case NodeKind::Neg: return "~" + print_sub(f->left, true);
        case NodeKind::Conj:
            return print_sub(f->left, false) + " & " + print_sub(f->right, true);
        case NodeKind::Diamond: return "<> " + print_sub(f->left, true);
        case NodeKind::Sat: return "@" + f->name + " " + print_sub(f->left, true);
        case NodeKind::Exists: return "E " + print_sub(f->left, true);
    }
    throw InternalInvariantBreach("unknown node kind");
}

}  // namespace hybrix
