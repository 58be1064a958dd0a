#pragma once

#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ccgs::ltl {

// Core connectives after parse-time expansion. F, G, ->, <-> are rewritten
// away by the parser so evaluators only deal with this set.
enum class Op { True, False, Atom, Not, And, Or, Next, Until };

struct Node;
using Formula = std::shared_ptr<const Node>;

struct Node {
    Op op;
    std::string atom;  // Op::Atom only
    Formula lhs, rhs;  // unary connectives use lhs
};

Formula mk_true();
Formula mk_false();
Formula mk_atom(const std::string& name);
Formula mk_not(Formula f);
Formula mk_and(Formula a, Formula b);
Formula mk_or(Formula a, Formula b);
Formula mk_next(Formula f);
Formula mk_until(Formula a, Formula b);
Formula mk_eventually(Formula f);  // true U f
Formula mk_always(Formula f);      // !(true U !f)

// Conjunction/disjunction over a list; empty list yields true/false.
Formula conj_all(const std::vector<Formula>& fs);
Formula disj_all(const std::vector<Formula>& fs);

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at offset " + std::to_string(pos) + ")"),
          position(pos) {}
};

// Concrete syntax: atoms [a-z][a-z0-9_]*, ! & | -> <-> X U F G true false,
// parentheses. Precedence: unary > U (right-assoc) > & > | > -> > <->.
Formula parse(const std::string& text);

std::string to_string(const Formula& f);
std::set<std::string> atoms_of(const Formula& f);
int formula_size(const Formula& f);
bool structurally_equal(const Formula& a, const Formula& b);

}  // namespace ccgs::ltl
