#ifndef LPA_COHOMOLOGY_HPP
#define LPA_COHOMOLOGY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lpa/derivation.hpp"
#include "lpa/matrix.hpp"
#include "lpa/resolution.hpp"

namespace lpa {

struct CenterReport {
    std::optional<std::size_t> length_bound;  // nullopt = full (finite-dimensional L)
    std::vector<Element> basis;
    std::size_t dim = 0;
};

// HH^0 via the generator commutant: z is central iff it commutes with
// every e_i, alpha, alpha*, and commutators of length-<=N elements with
// letters live in length <= N+1, so the system below is exact — the result
// is exactly center(L) intersected with the length-<=N span.
inline CenterReport center(const Quiver& q, Field f, std::optional<std::size_t> length_bound) {
    std::vector<Word> span_basis, row_basis;
    if (length_bound) {
        span_basis = basis_up_to(q, *length_bound);
        row_basis = basis_up_to(q, *length_bound + 1);
    } else {
        if (!q.is_acyclic())
            throw std::invalid_argument("full center requires a finite-dimensional algebra");
        span_basis = full_basis(q);
        row_basis = span_basis;
    }
    std::map<Word, std::size_t> row_index;
    for (std::size_t i = 0; i < row_basis.size(); ++i) row_index.emplace(row_basis[i], i);

    std::vector<Element> gens;
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) gens.push_back(Element::idempotent(q, f, v));
    for (Letter l : double_quiver_alphabet(q)) gens.push_back(Element::letter(q, f, l));

    Matrix sys(gens.size() * row_basis.size(), span_basis.size(), f);
    for (std::size_t c = 0; c < span_basis.size(); ++c) {
        Element b = Element::monomial(q, f, span_basis[c]);
        for (std::size_t g = 0; g < gens.size(); ++g) {
            Element comm = normal_form(multiply(b, gens[g]) - multiply(gens[g], b));
            for (const auto& [w, coeff] : comm.terms())
                sys.at(g * row_basis.size() + row_index.at(w), c) = coeff;
        }
    }
    CenterReport rep;
    rep.length_bound = length_bound;
    for (const auto& v : kernel_basis(sys)) {
        Element z(q, f);
        for (std::size_t i = 0; i < v.size(); ++i) z.add_term(span_basis[i], v[i]);
        rep.basis.push_back(std::move(z));
    }
    rep.dim = rep.basis.size();
    return rep;
}

// Coordinates for the component map Phi of HH^1: the source is
// (+)_{i in Q0} e_i L e_i, the target (+)_{j regular} e_j L e_j, and
// Phi((m_i)_i)_j = m_j - sum_{s(alpha)=j} alpha* m_{t(alpha)} alpha.
struct ComponentSpace {
    std::vector<std::pair<std::uint32_t, Word>> basis;  // (vertex, diagonal monomial)
    std::map<std::pair<std::uint32_t, Word>, std::size_t> index;
};

inline ComponentSpace diagonal_space(const Quiver& q, const std::vector<Word>& algebra_basis,
                                     bool regular_only) {
    ComponentSpace cs;
    for (const Word& w : algebra_basis) {
        if (w.src != w.dst) continue;
        if (regular_only && !q.is_regular(w.src)) continue;
        cs.index.emplace(std::make_pair(w.src, w), cs.basis.size());
        cs.basis.emplace_back(w.src, w);
    }
    return cs;
}

struct HH1Report {
    std::size_t source_dim = 0, target_dim = 0, rank = 0, dim_hh1 = 0;
    // representing outer-derivation components, one per cokernel dimension
    std::vector<std::map<std::uint32_t, Element>> representatives;
};

namespace detail {

inline Matrix phi_matrix(const Quiver& q, Field f, const ComponentSpace& src,
                         const ComponentSpace& tgt) {
    Matrix phi(tgt.basis.size(), src.basis.size(), f);
    for (std::size_t c = 0; c < src.basis.size(); ++c) {
        auto [i, u] = src.basis[c];
        Element mu = Element::monomial(q, f, u);
        // component at j: delta_{ij} u - sum_{s(alpha)=j, t(alpha)=i} alpha* u alpha
        for (std::uint32_t j = 0; j < q.num_vertices(); ++j) {
            if (!q.is_regular(j)) continue;
            Element img(q, f);
            if (j == i) img = img + mu;
            for (std::uint32_t a : q.out_arrows(j)) {
                if (q.target(a) != i) continue;
                Element wa = Element::letter(q, f, Letter{a, false});
                Element wg = Element::letter(q, f, Letter{a, true});
                img = img - bimodule_act(wg, mu, wa);
            }
            for (const auto& [w, coeff] : img.terms())
                phi.at(tgt.index.at(std::make_pair(j, w)), c) = coeff;
        }
    }
    return phi;
}

}  // namespace detail

// dim HH^1 = dim coker Phi, the Hom-dual of the boundary map of the
// resolution. Finite acyclic quivers only.
inline HH1Report hh1(const Quiver& q, Field f) {
    if (!q.is_acyclic()) throw std::invalid_argument("hh1 requires a finite acyclic quiver");
    std::vector<Word> basis = full_basis(q);
    ComponentSpace src = diagonal_space(q, basis, false);
    ComponentSpace tgt = diagonal_space(q, basis, true);
    Matrix phi = detail::phi_matrix(q, f, src, tgt);

    HH1Report rep;
    rep.source_dim = src.basis.size();
    rep.target_dim = tgt.basis.size();
    rep.rank = rank(phi);
    rep.dim_hh1 = rep.target_dim - rep.rank;

    // cokernel representatives: standard basis vectors of the target that
    // are independent of the column space
    Matrix aug(rep.target_dim, src.basis.size() + rep.target_dim, f);
    for (std::size_t r = 0; r < rep.target_dim; ++r) {
        for (std::size_t c = 0; c < src.basis.size(); ++c) aug.at(r, c) = phi.at(r, c);
        aug.at(r, src.basis.size() + r) = Scalar::one(f);
    }
    for (std::size_t pc : rref(std::move(aug)).pivot_cols) {
        if (pc < src.basis.size()) continue;
        std::size_t k = pc - src.basis.size();
        std::map<std::uint32_t, Element> comp;
        auto [j, w] = tgt.basis[k];
        comp.emplace(j, Element::monomial(q, f, w));
        rep.representatives.push_back(std::move(comp));
    }
    return rep;
}

struct InnernessVerdict {
    bool inner = false;
    // u with d = [., u] when inner
    std::optional<Element> implementing_element;
};

// Decide whether the derivation with the given components is inner, i.e.
// whether the components lie in the image of Phi.
inline InnernessVerdict outer_derivation_witness(const Quiver& q, Field f,
                                                 const std::map<std::uint32_t, Element>& c) {
    if (!q.is_acyclic())
        throw std::invalid_argument("innerness decision requires a finite acyclic quiver");
    ComponentDerivation check(q, f, c);  // validates supports
    std::vector<Word> basis = full_basis(q);
    ComponentSpace src = diagonal_space(q, basis, false);
    ComponentSpace tgt = diagonal_space(q, basis, true);
    Matrix phi = detail::phi_matrix(q, f, src, tgt);

    std::vector<Scalar> b(tgt.basis.size(), Scalar::zero(f));
    for (const auto& [j, cj] : c) {
        Element ncj = normal_form(cj);
        for (const auto& [w, coeff] : ncj.terms())
            b[tgt.index.at(std::make_pair(j, w))] = coeff;
    }

    InnernessVerdict v;
    if (auto x = solve(phi, b)) {
        v.inner = true;
        Element u(q, f);
        for (std::size_t k = 0; k < x->size(); ++k)
            if (!(*x)[k].is_zero()) u.add_term(src.basis[k].second, (*x)[k]);
        v.implementing_element = u;
    }
    return v;
}

}  // namespace lpa

#endif
