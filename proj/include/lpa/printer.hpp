#ifndef LPA_PRINTER_HPP
#define LPA_PRINTER_HPP

#include <string>

#include "lpa/tensor.hpp"

namespace lpa {

// Ghost letters print with a postfix apostrophe; `*` is multiplication
// only. Application order is right to left, so a word prints with its
// last-applied letter first.
inline std::string print_word(const Quiver& q, const Word& w) {
    if (w.trivial()) return "e(" + q.vertex_name(w.src) + ")";
    std::string s;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
        if (!s.empty()) s += " * ";
        s += q.arrow_name(it->arrow);
        if (it->ghost) s += "'";
    }
    return s;
}

namespace detail {

// Shared term-list layout: "t1 - t2 + t3", unit coefficients dropped.
template <class Terms, class PrintBody>
std::string print_terms(const Terms& terms, PrintBody&& body) {
    if (terms.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [key, coeff] : terms) {
        Scalar c = coeff;
        bool neg = false;
        if (c.field().is_rational() && c.raw() < 0) {
            neg = true;
            c = -c;
        }
        if (first) {
            if (neg) s += "-";
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        if (!c.is_one()) s += c.str() + " * ";
        s += body(key);
    }
    return s;
}

}  // namespace detail

inline std::string print_canonical(const Element& x) {
    return detail::print_terms(x.terms(),
                               [&](const Word& w) { return print_word(x.quiver(), w); });
}

inline std::string print_tensor(const TensorElement& t) {
    return detail::print_terms(t.terms(), [&](const std::vector<Word>& tp) {
        std::string s;
        for (const Word& w : tp) {
            if (!s.empty()) s += " (x) ";
            s += print_word(t.quiver(), w);
        }
        return s;
    });
}

}  // namespace lpa

#endif
