#ifndef LPA_DERIVATION_HPP
#define LPA_DERIVATION_HPP

#include <map>
#include <stdexcept>
#include <vector>

#include "lpa/tensor.hpp"

namespace lpa {

// l . m . r for algebra-valued derivations (the three-argument tensor
// overload lives in tensor.hpp).
inline Element bimodule_act(const Element& l, const Element& m, const Element& r) {
    return leavitt_multiply(leavitt_multiply(l, m), r);
}

namespace detail {

inline std::pair<std::uint32_t, std::uint32_t> value_support(const Element& m) {
    // (target, source) support of a single monomial term
    const Word& w = m.terms().begin()->first;
    return {w.dst, w.src};
}
inline bool value_supported_at(const Element& m, std::uint32_t tgt, std::uint32_t src) {
    for (const auto& [w, c] : m.terms())
        if (w.dst != tgt || w.src != src) return false;
    return true;
}
inline bool value_supported_at(const TensorElement& m, std::uint32_t tgt, std::uint32_t src) {
    for (const auto& [tp, c] : m.terms())
        if (tp.front().dst != tgt || tp.back().src != src) return false;
    return true;
}

}  // namespace detail

// Values of a derivation on the letters of the double quiver; vertices map
// to 0 implicitly (S-derivations kill S). The target bimodule M is L
// itself (M = Element) or a tensor power / P (M = TensorElement).
template <class M>
struct GeneratorValues {
    const Quiver* q;
    Field field;
    M zero;
    std::map<Letter, M> values;

    GeneratorValues(const Quiver& quiver, Field f, M zero_value)
        : q(&quiver), field(f), zero(std::move(zero_value)) {}

    void set(Letter l, M v) {
        if (!detail::value_supported_at(v, letter_target(*q, l), letter_source(*q, l)))
            throw std::invalid_argument("generator value not supported in e_t(l) M e_s(l)");
        values.insert_or_assign(l, std::move(v));
    }

    const M& value(Letter l) const {
        auto it = values.find(l);
        return it == values.end() ? zero : it->second;
    }
};

// Leibniz extension: for each word l_k ... l_1 (application order l_1
// first), sum over j of (l_k...l_{j+1}) . v(l_j) . (l_{j-1}...l_1).
template <class M>
M leibniz_extend(const GeneratorValues<M>& v, const Element& x) {
    const Quiver& q = *v.q;
    Field f = v.field;
    M result = v.zero;
    for (const auto& [w, c] : x.terms()) {
        for (std::size_t j = 0; j < w.letters.size(); ++j) {
            Letter l = w.letters[j];
            Element prefix =
                j + 1 < w.letters.size()
                    ? Element::monomial(q, f,
                                        Word::from_letters(q, {w.letters.begin() + j + 1,
                                                               w.letters.end()}))
                    : Element::idempotent(q, f, letter_target(q, l));
            Element suffix =
                j > 0 ? Element::monomial(
                            q, f, Word::from_letters(q, {w.letters.begin(), w.letters.begin() + j}))
                      : Element::idempotent(q, f, letter_source(q, l));
            result = result + bimodule_act(prefix, v.value(l), suffix) * c;
        }
    }
    return result;
}

// Lemma-style descent check: the Leibniz extension kills every
// Cuntz-Krieger relation iff the derivation is well defined on L. Returns
// the violated relations (empty = certificate).
template <class M>
std::vector<Element> check_descends(const GeneratorValues<M>& v) {
    std::vector<Element> violated;
    for (const Element& t : cuntz_krieger_relations(*v.q, v.field)) {
        M image = leibniz_extend(v, t);
        if (!(image == v.zero)) violated.push_back(t);
    }
    return violated;
}

// A derivation of L given by generator values plus its descent certificate.
template <class M>
class Derivation {
public:
    static Derivation certify(GeneratorValues<M> v) {
        std::vector<Element> bad = check_descends(v);
        return Derivation(std::move(v), bad.empty());
    }
    static Derivation precertified(GeneratorValues<M> v) { return Derivation(std::move(v), true); }

    bool certified() const { return certified_; }
    const GeneratorValues<M>& values() const { return values_; }

    M operator()(const Element& x) const {
        if (!certified_) throw std::logic_error("uncertified descent to L");
        return leibniz_extend(values_, normal_form(x));
    }

private:
    Derivation(GeneratorValues<M> v, bool ok) : values_(std::move(v)), certified_(ok) {}
    GeneratorValues<M> values_;
    bool certified_;
};

// The universal S-derivation Delta(a) = a (x) e_i - e_j (x) a for
// a in e_j L e_i, landing in ker m.
inline TensorElement universal_delta(const Element& x) {
    const Quiver& q = x.quiver();
    Field f = x.field();
    TensorElement out(q, f, 2);
    Element nx = normal_form(x);
    for (const auto& [w, c] : nx.terms()) {
        out.add_term({w, Word::trivial_at(w.src)}, c);
        out.add_term({Word::trivial_at(w.dst), w}, -c);
    }
    return out;
}

// Generator values of the derivation D: D(alpha) = alpha (x) e_{s(alpha)},
// D(alpha*) = -e_{s(alpha)} (x) alpha*.
inline GeneratorValues<TensorElement> d_generator_values(const Quiver& q, Field f) {
    GeneratorValues<TensorElement> v(q, f, TensorElement::zero(q, f, 2));
    for (std::uint32_t a = 0; a < q.num_arrows(); ++a) {
        Word wa = Word::from_letters(q, {Letter{a, false}});
        Word ws = Word::trivial_at(q.source(a));
        TensorElement da(q, f, 2);
        da.add_term({wa, ws}, Scalar::one(f));
        v.set(Letter{a, false}, da);
        TensorElement dg(q, f, 2);
        dg.add_term({ws, ghost(wa)}, -Scalar::one(f));
        v.set(Letter{a, true}, dg);
    }
    return v;
}

// D on a Leavitt element; the image lands in P, so the strict projection
// never fires on correct input.
inline TensorElement derivation_D(const Element& x) {
    GeneratorValues<TensorElement> v = d_generator_values(x.quiver(), x.field());
    return p_project(leibniz_extend(v, normal_form(x)), /*strict=*/true);
}

// Der_S(L, L) from components c(i) in e_i L e_i over the regular vertices:
// x -> f(D(x)) where f sends e_i (x) e_i to c(i).
class ComponentDerivation {
public:
    ComponentDerivation(const Quiver& q, Field f, std::map<std::uint32_t, Element> components)
        : q_(&q), field_(f), components_(std::move(components)) {
        for (const auto& [i, ci] : components_) {
            if (!q.is_regular(i))
                throw std::invalid_argument("component at non-regular vertex " + q.vertex_name(i));
            if (!detail::value_supported_at(normal_form(ci), i, i))
                throw std::invalid_argument("component not supported in e_i L e_i");
        }
    }

    Element operator()(const Element& x) const {
        TensorElement dx = derivation_D(x);
        Element out(*q_, field_);
        for (const auto& [tp, c] : dx.terms()) {
            auto it = components_.find(tp[0].src);
            if (it == components_.end()) continue;
            Element piece = bimodule_act(Element::monomial(*q_, field_, tp[0]), it->second,
                                         Element::monomial(*q_, field_, tp[1]));
            out = out + piece * c;
        }
        return out;
    }

    const std::map<std::uint32_t, Element>& components() const { return components_; }

private:
    const Quiver* q_;
    Field field_;
    std::map<std::uint32_t, Element> components_;
};

}  // namespace lpa

#endif
