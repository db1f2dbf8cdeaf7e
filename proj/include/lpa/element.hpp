#ifndef LPA_ELEMENT_HPP
#define LPA_ELEMENT_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <utility>

#include "lpa/quiver.hpp"
#include "lpa/scalar.hpp"

namespace lpa {

// A finite k-linear combination of composable words over the double quiver.
// Zero coefficients are never stored; the zero element is the empty map.
class Element {
public:
    Element(const Quiver& q, Field f) : q_(&q), field_(f) {}

    const Quiver& quiver() const { return *q_; }
    Field field() const { return field_; }

    static Element zero(const Quiver& q, Field f) { return Element(q, f); }

    static Element monomial(const Quiver& q, Field f, const Word& w, Scalar c) {
        Element e(q, f);
        e.add_term(w, c);
        return e;
    }
    static Element monomial(const Quiver& q, Field f, const Word& w) {
        return monomial(q, f, w, Scalar::one(f));
    }

    static Element idempotent(const Quiver& q, Field f, std::uint32_t v) {
        return monomial(q, f, Word::trivial_at(v));
    }
    static Element letter(const Quiver& q, Field f, Letter l) {
        return monomial(q, f, Word::from_letters(q, {l}));
    }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Word, Scalar>& terms() const { return terms_; }

    void add_term(const Word& w, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(w, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Element operator+(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, c);
        return r;
    }
    Element operator-(const Element& o) const {
        Element r = *this;
        for (const auto& [w, c] : o.terms_) r.add_term(w, -c);
        return r;
    }
    Element operator-() const {
        Element r(*q_, field_);
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
        return r;
    }
    Element operator*(const Scalar& s) const {
        Element r(*q_, field_);
        if (s.is_zero()) return r;
        for (const auto& [w, c] : terms_) r.terms_.emplace(w, c * s);
        return r;
    }

    bool operator==(const Element& o) const { return terms_ == o.terms_; }

private:
    const Quiver* q_;
    Field field_;
    std::map<Word, Scalar> terms_;
};

// Bilinear extension of concatenation-or-zero in the free algebra of the
// double quiver.
inline Element multiply(const Element& x, const Element& y) {
    Element r(x.quiver(), x.field());
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms())
            if (auto w = concat(wx, wy)) r.add_term(*w, cx * cy);
    return r;
}

// Finite vertex sets absorbing x on the left and right.
inline std::pair<std::set<std::uint32_t>, std::set<std::uint32_t>> local_unit_action(
    const Element& x) {
    std::set<std::uint32_t> left, right;
    for (const auto& [w, c] : x.terms()) {
        left.insert(w.dst);
        right.insert(w.src);
    }
    return {left, right};
}

// Decomposition into homogeneous parts of the Z-grading
// deg = (#real letters) - (#ghost letters).
inline std::map<int, Element> degree_split(const Element& x) {
    std::map<int, Element> parts;
    for (const auto& [w, c] : x.terms()) {
        auto [it, fresh] = parts.emplace(w.degree(), Element::zero(x.quiver(), x.field()));
        it->second.add_term(w, c);
    }
    return parts;
}

}  // namespace lpa

#endif
