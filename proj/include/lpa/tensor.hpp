#ifndef LPA_TENSOR_HPP
#define LPA_TENSOR_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "lpa/normal_form.hpp"

namespace lpa {

struct GluingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A finite sum of n-fold simple tensors over S, kept fully expanded: every
// stored tuple consists of normal-form monomials glued end to end
// (source(w_j) = target(w_{j+1}); the tuple reads left to right as the
// tensor does). Tuples violating the gluing are zero in the tensor product
// over S and are never stored.
class TensorElement {
public:
    TensorElement(const Quiver& q, Field f, std::size_t arity)
        : q_(&q), field_(f), arity_(arity) {
        if (arity < 2) throw std::invalid_argument("tensor arity must be >= 2");
    }

    const Quiver& quiver() const { return *q_; }
    Field field() const { return field_; }
    std::size_t arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<Word>, Scalar>& terms() const { return terms_; }

    static TensorElement zero(const Quiver& q, Field f, std::size_t arity) {
        return TensorElement(q, f, arity);
    }

    static bool glued(const std::vector<Word>& tuple) {
        for (std::size_t j = 0; j + 1 < tuple.size(); ++j)
            if (tuple[j].src != tuple[j + 1].dst) return false;
        return true;
    }

    void add_term(const std::vector<Word>& tuple, const Scalar& c) {
        if (tuple.size() != arity_) throw std::invalid_argument("tuple arity mismatch");
        if (c.is_zero() || !glued(tuple)) return;
        auto [it, fresh] = terms_.emplace(tuple, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Canonicalized simple tensor x_1 (x) ... (x) x_n: factors are put in
    // normal form and expanded distributively; only glued monomial tuples
    // survive.
    static TensorElement simple(const std::vector<Element>& factors) {
        if (factors.size() < 2) throw std::invalid_argument("tensor arity must be >= 2");
        const Quiver& q = factors.front().quiver();
        Field f = factors.front().field();
        TensorElement t(q, f, factors.size());
        std::vector<Element> nf;
        nf.reserve(factors.size());
        for (const Element& x : factors) nf.push_back(normal_form(x));
        std::vector<Word> tuple(factors.size(), Word::trivial_at(0));
        t.expand(nf, 0, tuple, Scalar::one(f));
        return t;
    }

    TensorElement operator+(const TensorElement& o) const {
        require_compatible(o);
        TensorElement r = *this;
        for (const auto& [tp, c] : o.terms_) r.add_term(tp, c);
        return r;
    }
    TensorElement operator-(const TensorElement& o) const {
        require_compatible(o);
        TensorElement r = *this;
        for (const auto& [tp, c] : o.terms_) r.add_term(tp, -c);
        return r;
    }
    TensorElement operator-() const { return *this * -Scalar::one(field_); }
    TensorElement operator*(const Scalar& s) const {
        TensorElement r(*q_, field_, arity_);
        if (s.is_zero()) return r;
        for (const auto& [tp, c] : terms_) r.terms_.emplace(tp, c * s);
        return r;
    }

    bool operator==(const TensorElement& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

private:
    void require_compatible(const TensorElement& o) const {
        if (arity_ != o.arity_) throw std::invalid_argument("tensor arity mismatch");
    }

    void expand(const std::vector<Element>& nf, std::size_t j, std::vector<Word>& tuple,
                const Scalar& acc) {
        if (j == nf.size()) {
            add_term(tuple, acc);
            return;
        }
        for (const auto& [w, c] : nf[j].terms()) {
            if (j > 0 && tuple[j - 1].src != w.dst) continue;
            tuple[j] = w;
            expand(nf, j + 1, tuple, acc * c);
        }
    }

    const Quiver* q_;
    Field field_;
    std::size_t arity_;
    std::map<std::vector<Word>, Scalar> terms_;
};

// l . t . r — multiply the outer factors, renormalize, re-expand.
inline TensorElement bimodule_act(const Element& l, const TensorElement& t, const Element& r) {
    const Quiver& q = t.quiver();
    Field f = t.field();
    TensorElement out(q, f, t.arity());
    for (const auto& [tp, c] : t.terms()) {
        Element left = leavitt_multiply(l, Element::monomial(q, f, tp.front()));
        Element right = leavitt_multiply(Element::monomial(q, f, tp.back()), r);
        for (const auto& [wl, cl] : left.terms())
            for (const auto& [wr, cr] : right.terms()) {
                std::vector<Word> ntp = tp;
                ntp.front() = wl;
                ntp.back() = wr;
                out.add_term(ntp, c * cl * cr);
            }
    }
    return out;
}

// Multiply factors i and i+1 together (arity drops by one).
inline TensorElement contract(const TensorElement& t, std::size_t i) {
    const Quiver& q = t.quiver();
    Field f = t.field();
    if (i + 1 >= t.arity()) throw std::invalid_argument("contract index out of range");
    TensorElement out(q, f, t.arity() - 1);
    for (const auto& [tp, c] : t.terms()) {
        Element prod = leavitt_multiply(Element::monomial(q, f, tp[i]),
                                        Element::monomial(q, f, tp[i + 1]));
        for (const auto& [w, cw] : prod.terms()) {
            std::vector<Word> ntp;
            ntp.reserve(tp.size() - 1);
            ntp.assign(tp.begin(), tp.begin() + i);
            ntp.push_back(w);
            ntp.insert(ntp.end(), tp.begin() + i + 2, tp.end());
            out.add_term(ntp, c * cw);
        }
    }
    return out;
}

// The multiplication map m: L (x)_S L -> L.
inline Element mult_map(const TensorElement& t) {
    if (t.arity() != 2) throw std::invalid_argument("mult_map expects arity 2");
    const Quiver& q = t.quiver();
    Field f = t.field();
    Element r(q, f);
    for (const auto& [tp, c] : t.terms()) {
        Element prod = leavitt_multiply(Element::monomial(q, f, tp[0]),
                                        Element::monomial(q, f, tp[1]));
        for (const auto& [w, cw] : prod.terms()) r.add_term(w, c * cw);
    }
    return r;
}

// Component of an arity-2 tensor supported on regular gluing vertices —
// the projective generator P = (+)_{i regular} Le_i (x) e_iL. In strict
// mode a nonzero component at a sink gluing is an error.
inline TensorElement p_project(const TensorElement& t, bool strict = false) {
    if (t.arity() != 2) throw std::invalid_argument("p_project expects arity 2");
    TensorElement out(t.quiver(), t.field(), 2);
    for (const auto& [tp, c] : t.terms()) {
        if (t.quiver().is_regular(tp[0].src)) {
            out.add_term(tp, c);
        } else if (strict) {
            throw GluingError("nonzero component at sink gluing vertex " +
                              t.quiver().vertex_name(tp[0].src));
        }
    }
    return out;
}

inline bool is_p_element(const TensorElement& t) {
    if (t.arity() != 2) return false;
    for (const auto& [tp, c] : t.terms())
        if (!t.quiver().is_regular(tp[0].src)) return false;
    return true;
}

}  // namespace lpa

#endif
