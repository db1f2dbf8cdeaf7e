#ifndef LPA_TEXTIO_HPP
#define LPA_TEXTIO_HPP

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "lpa/element.hpp"
#include "lpa/printer.hpp"

namespace lpa {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- quiver files ----------------------------------------------------------
//
//   # comment
//   vertices: v1 v2
//   arrow a : v1 -> v2
//   special v1 a

inline QuiverDescription parse_quiver_file(std::istream& in) {
    QuiverDescription d;
    std::string line;
    std::size_t lineno = 0;
    bool saw_vertices = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = "line " + std::to_string(lineno);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "vertices:") {
            std::string v;
            while (ls >> v) d.vertices.push_back(v);
            saw_vertices = true;
        } else if (tok == "arrow") {
            std::string name, colon, src, arrowsym, dst;
            if (!(ls >> name >> colon >> src >> arrowsym >> dst) || colon != ":" ||
                arrowsym != "->")
                throw ParseError(where + ": expected 'arrow <name> : <src> -> <dst>'");
            d.arrows.push_back({name, src, dst});
        } else if (tok == "special") {
            std::string v, a;
            if (!(ls >> v >> a)) throw ParseError(where + ": expected 'special <vertex> <arrow>'");
            d.special.emplace_back(v, a);
        } else {
            throw ParseError(where + ": unknown directive '" + tok + "'");
        }
        std::string extra;
        if (ls >> extra && extra[0] != '#')
            throw ParseError(where + ": trailing token '" + extra + "'");
    }
    if (!saw_vertices) throw ParseError("missing 'vertices:' line");
    return d;
}

inline QuiverDescription parse_quiver_string(const std::string& s) {
    std::istringstream in(s);
    return parse_quiver_file(in);
}

// Canonical file form; parse . print . parse is the identity.
inline std::string print_quiver_file(const Quiver& q) {
    std::string s = "vertices:";
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) s += " " + q.vertex_name(v);
    s += "\n";
    for (std::uint32_t a = 0; a < q.num_arrows(); ++a)
        s += "arrow " + q.arrow_name(a) + " : " + q.vertex_name(q.source(a)) + " -> " +
             q.vertex_name(q.target(a)) + "\n";
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v)
        if (q.special_arrow(v) != Quiver::kNoSpecial)
            s += "special " + q.vertex_name(v) + " " +
                 q.arrow_name(static_cast<std::uint32_t>(q.special_arrow(v))) + "\n";
    return s;
}

// --- expression grammar ----------------------------------------------------
//
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := scalar | atom | '(' expr ')'
//   atom   := 'e(' vertex ')' | arrow | arrow "'"
//
// Ghost marker is the postfix apostrophe; `*` in a term multiplies right
// to left in application order.

class ExprParser {
public:
    ExprParser(const std::string& src, const Quiver& q, Field f) : src_(src), q_(q), field_(f) {}

    Element parse() {
        Element e = expr();
        skip_ws();
        if (pos_ != src_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& msg) const {
        throw ParseError("column " + std::to_string(pos + 1) + ": " + msg);
    }

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    Element expr() {
        bool neg = eat('-');
        Element e = term();
        if (neg) e = -e;
        for (;;) {
            if (eat('+'))
                e = e + term();
            else if (eat('-'))
                e = e - term();
            else
                return e;
        }
    }

    Element term() {
        Element e = factor();
        while (eat('*')) e = multiply(e, factor());
        return e;
    }

    Element factor() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return scalar_factor();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return atom();
        fail("expected scalar, atom or '('");
    }

    Element scalar_factor() {
        mpq_class num(integer());
        mpq_class den(1);
        if (eat('/')) {
            den = integer();
            if (den <= 0) fail("denominator must be positive");
        }
        Element e(q_, field_);
        Scalar s(field_, num / den);
        // a scalar multiplies whatever it meets; standing alone it scales
        // the sum of all local units
        for (std::uint32_t v = 0; v < q_.num_vertices(); ++v)
            e.add_term(Word::trivial_at(v), s);
        return e;
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer");
        return mpz_class(src_.substr(start, pos_ - start));
    }

    Element atom() {
        std::size_t start = pos_;
        while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                      src_[pos_] == '_'))
            ++pos_;
        std::string name = src_.substr(start, pos_ - start);
        if (name == "e" && pos_ < src_.size() && src_[pos_] == '(') {
            ++pos_;
            skip_ws();
            std::size_t vstart = pos_;
            while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                          src_[pos_] == '_'))
                ++pos_;
            std::string vname = src_.substr(vstart, pos_ - vstart);
            if (!eat(')')) fail("expected ')' after vertex name");
            auto v = q_.vertex(vname);
            if (!v) fail_at(vstart, "unknown vertex '" + vname + "'");
            return Element::idempotent(q_, field_, *v);
        }
        auto a = q_.arrow(name);
        if (!a) fail_at(start, "unknown arrow '" + name + "'");
        bool ghost_flag = pos_ < src_.size() && src_[pos_] == '\'';
        if (ghost_flag) ++pos_;
        return Element::letter(q_, field_, Letter{*a, ghost_flag});
    }

    const std::string& src_;
    const Quiver& q_;
    Field field_;
    std::size_t pos_ = 0;
};

inline Element parse_expr(const std::string& src, const Quiver& q, Field f) {
    return ExprParser(src, q, f).parse();
}

}  // namespace lpa

#endif
