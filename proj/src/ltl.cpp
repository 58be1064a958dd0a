#include "ccgs/ltl.hpp"

#include <cctype>

namespace ccgs::ltl {

namespace {

Formula node(Op op, std::string atom, Formula lhs, Formula rhs) {
    auto n = std::make_shared<Node>();
    n->op = op;
    n->atom = std::move(atom);
    n->lhs = std::move(lhs);
    n->rhs = std::move(rhs);
    return n;
}

}  // namespace

Formula mk_true() {
    static Formula t = node(Op::True, "", nullptr, nullptr);
    return t;
}
Formula mk_false() {
    static Formula f = node(Op::False, "", nullptr, nullptr);
    return f;
}
Formula mk_atom(const std::string& name) { return node(Op::Atom, name, nullptr, nullptr); }
Formula mk_not(Formula f) { return node(Op::Not, "", std::move(f), nullptr); }
Formula mk_and(Formula a, Formula b) { return node(Op::And, "", std::move(a), std::move(b)); }
Formula mk_or(Formula a, Formula b) { return node(Op::Or, "", std::move(a), std::move(b)); }
Formula mk_next(Formula f) { return node(Op::Next, "", std::move(f), nullptr); }
Formula mk_until(Formula a, Formula b) { return node(Op::Until, "", std::move(a), std::move(b)); }
Formula mk_eventually(Formula f) { return mk_until(mk_true(), std::move(f)); }
Formula mk_always(Formula f) { return mk_not(mk_eventually(mk_not(std::move(f)))); }

Formula conj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return mk_true();
    Formula out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = mk_and(out, fs[i]);
    return out;
}

Formula disj_all(const std::vector<Formula>& fs) {
    if (fs.empty()) return mk_false();
    Formula out = fs[0];
    for (std::size_t i = 1; i < fs.size(); ++i) out = mk_or(out, fs[i]);
    return out;
}

namespace {

// Recursive-descent parser. Precedence, loose to tight:
//   <->  ->  |  &  U (right-assoc)  unary (! X F G)
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    Formula run() {
        Formula f = iff();
        skip_ws();
        if (pos_ != text_.size())
            throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool eat(const std::string& tok) {
        skip_ws();
        if (text_.compare(pos_, tok.size(), tok) != 0) return false;
        // Lowercase word tokens must not run into an identifier tail.
        // (Operators X U F G are uppercase and atoms are lowercase-only, so
        // they never need the boundary check.)
        if (std::islower(static_cast<unsigned char>(tok[0]))) {
            std::size_t end = pos_ + tok.size();
            if (end < text_.size()) {
                char c = text_[end];
                if (std::islower(static_cast<unsigned char>(c)) ||
                    std::isdigit(static_cast<unsigned char>(c)) || c == '_')
                    return false;
            }
        }
        pos_ += tok.size();
        return true;
    }

    Formula iff() {
        Formula lhs = impl();
        while (eat("<->")) {
            Formula rhs = impl();
            lhs = mk_or(mk_and(lhs, rhs), mk_and(mk_not(lhs), mk_not(rhs)));
        }
        return lhs;
    }

    Formula impl() {
        Formula lhs = disj();
        if (eat("->")) return mk_or(mk_not(lhs), impl());
        return lhs;
    }

    Formula disj() {
        Formula lhs = conj();
        while (true) {
            skip_ws();
            // Do not consume the '|' of nothing, nor mistake '->' handled above.
            if (pos_ < text_.size() && text_[pos_] == '|') {
                ++pos_;
                lhs = mk_or(lhs, conj());
            } else {
                return lhs;
            }
        }
    }

    Formula conj() {
        Formula lhs = until();
        while (eat("&")) lhs = mk_and(lhs, until());
        return lhs;
    }

    Formula until() {
        Formula lhs = unary();
        if (eat("U")) return mk_until(lhs, until());
        return lhs;
    }

    Formula unary() {
        if (eat("!")) return mk_not(unary());
        if (eat("X")) return mk_next(unary());
        if (eat("F")) return mk_eventually(unary());
        if (eat("G")) return mk_always(unary());
        return atom();
    }

    Formula atom() {
        skip_ws();
        if (eat("(")) {
            Formula f = iff();
            if (!eat(")")) throw ParseError("expected ')'", pos_);
            return f;
        }
        if (eat("true")) return mk_true();
        if (eat("false")) return mk_false();
        if (pos_ >= text_.size())
            throw ParseError("unexpected end of formula", pos_);
        char c = text_[pos_];
        if (!std::islower(static_cast<unsigned char>(c)))
            throw ParseError(std::string("unexpected character '") + c + "'", pos_);
        std::size_t start = pos_;
        while (pos_ < text_.size()) {
            char d = text_[pos_];
            if (std::islower(static_cast<unsigned char>(d)) ||
                std::isdigit(static_cast<unsigned char>(d)) || d == '_')
                ++pos_;
            else
                break;
        }
        return mk_atom(text_.substr(start, pos_ - start));
    }
};

void to_string_rec(const Formula& f, std::string& out) {
    switch (f->op) {
        case Op::True: out += "true"; break;
        case Op::False: out += "false"; break;
        case Op::Atom: out += f->atom; break;
        case Op::Not:
            out += "!";
            to_string_rec(f->lhs, out);
            break;
        case Op::Next:
            out += "X ";
            to_string_rec(f->lhs, out);
            break;
        case Op::And:
            out += "(";
            to_string_rec(f->lhs, out);
            out += " & ";
            to_string_rec(f->rhs, out);
            out += ")";
            break;
        case Op::Or:
            out += "(";
            to_string_rec(f->lhs, out);
            out += " | ";
            to_string_rec(f->rhs, out);
            out += ")";
            break;
        case Op::Until:
            out += "(";
            to_string_rec(f->lhs, out);
            out += " U ";
            to_string_rec(f->rhs, out);
            out += ")";
            break;
    }
}

}  // namespace

Formula parse(const std::string& text) { return Parser(text).run(); }

std::string to_string(const Formula& f) {
    std::string out;
    to_string_rec(f, out);
    return out;
}

std::set<std::string> atoms_of(const Formula& f) {
    std::set<std::string> out;
    std::vector<Formula> stack{f};
    while (!stack.empty()) {
        Formula cur = stack.back();
        stack.pop_back();
        if (!cur) continue;
        if (cur->op == Op::Atom) out.insert(cur->atom);
        stack.push_back(cur->lhs);
        stack.push_back(cur->rhs);
    }
    return out;
}

int formula_size(const Formula& f) {
    if (!f) return 0;
    return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

bool structurally_equal(const Formula& a, const Formula& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    if (a->op != b->op || a->atom != b->atom) return false;
    return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

}  // namespace ccgs::ltl
