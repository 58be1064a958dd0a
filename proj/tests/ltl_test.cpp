#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <set>

#include "ccgs/ltl.hpp"

using namespace ccgs::ltl;

TEST_CASE("atoms and constants") {
    CHECK(to_string(parse("p")) == "p");
    CHECK(to_string(parse("true")) == "true");
    CHECK(to_string(parse("false")) == "false");
    CHECK(parse("true") == mk_true());   // singletons
    CHECK(parse("false") == mk_false());
    CHECK(atoms_of(parse("p U (q & r_2)")) ==
          std::set<std::string>{"p", "q", "r_2"});
}

TEST_CASE("precedence and associativity") {
    // unary > U > & > | > -> > <->
    CHECK(structurally_equal(parse("!p U q"), parse("(!p) U q")));
    CHECK(structurally_equal(parse("p U q & r"), parse("(p U q) & r")));
    CHECK(structurally_equal(parse("p & q | r"), parse("(p & q) | r")));
    CHECK(structurally_equal(parse("p | q -> r"), parse("(p | q) -> r")));
    CHECK(structurally_equal(parse("p -> q <-> r"), parse("(p -> q) <-> r")));
    // U is right-associative
    CHECK(structurally_equal(parse("p U q U r"), parse("p U (q U r)")));
    CHECK_FALSE(structurally_equal(parse("p U q U r"), parse("(p U q) U r")));
}

TEST_CASE("derived operators expand at parse time") {
    CHECK(structurally_equal(parse("F p"), parse("true U p")));
    CHECK(structurally_equal(parse("G p"), parse("!(true U !p)")));
    CHECK(structurally_equal(parse("p -> q"), parse("!p | q")));
    CHECK(structurally_equal(parse("p <-> q"), parse("(p & q) | (!p & !q)")));
    // Only the core connectives remain after parsing.
    std::function<void(const Formula&)> core_only = [&](const Formula& f) {
        if (f->op == Op::Atom) CHECK(!f->atom.empty());
        if (f->lhs) core_only(f->lhs);
        if (f->rhs) core_only(f->rhs);
    };
    core_only(parse("F G (p <-> X q)"));
}

TEST_CASE("operator names do not swallow adjacent atoms") {
    // Uppercase operators bind without whitespace; atoms are lowercase.
    CHECK(structurally_equal(parse("p Uq"), parse("p U q")));
    CHECK(structurally_equal(parse("Xp"), parse("X p")));
    CHECK(structurally_equal(parse("FGp"), parse("F (G p)")));
    // 'trueish' is one atom, not the constant followed by junk.
    CHECK(atoms_of(parse("trueish")) == std::set<std::string>{"trueish"});
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("p &"), ParseError);
    CHECK_THROWS_AS(parse("(p"), ParseError);
    CHECK_THROWS_AS(parse("p q"), ParseError);
    CHECK_THROWS_AS(parse("P"), ParseError);  // uppercase is not an atom
    CHECK_THROWS_AS(parse("p U"), ParseError);
    try {
        parse("p & & q");
    } catch (const ParseError& e) {
        CHECK(e.position > 0);
    }
}

TEST_CASE("to_string round trips structurally") {
    const char* samples[] = {
        "p",
        "!p & q",
        "p U (q U r)",
        "X (p | !q)",
        "F G p",
        "G (p -> X q)",
        "(p <-> q) U r",
        "true U (false | x1)",
    };
    for (const char* s : samples) {
        Formula f = parse(s);
        CHECK(structurally_equal(f, parse(to_string(f))));
    }
}

TEST_CASE("formula size counts nodes") {
    CHECK(formula_size(parse("p")) == 1);
    CHECK(formula_size(parse("!p")) == 2);
    CHECK(formula_size(parse("p & q")) == 3);
    CHECK(formula_size(parse("p U q")) == 3);
}

TEST_CASE("conj and disj over lists") {
    CHECK(conj_all({}) == mk_true());
    CHECK(disj_all({}) == mk_false());
    Formula p = mk_atom("p");
    CHECK(structurally_equal(conj_all({p}), p));
    CHECK(structurally_equal(conj_all({p, mk_atom("q")}), parse("p & q")));
}
