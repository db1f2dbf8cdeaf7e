#ifndef LPA_NORMAL_FORM_HPP
#define LPA_NORMAL_FORM_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "lpa/element.hpp"

namespace lpa {

struct FuelExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultFuel = 1'000'000;

// The Cuntz-Krieger relations of Q, as elements of the free algebra:
//   CK1: alpha beta* - delta_{alpha,beta} e_{t(alpha)}, s(alpha) = s(beta)
//   CK2: sum_{s(alpha)=i} alpha* alpha - e_i, i regular
inline std::vector<Element> cuntz_krieger_relations(const Quiver& q, Field f) {
    std::vector<Element> rels;
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) {
        const auto& out = q.out_arrows(v);
        for (std::uint32_t a : out)
            for (std::uint32_t b : out) {
                Element r = Element::monomial(
                    q, f, Word::from_letters(q, {Letter{b, true}, Letter{a, false}}));
                if (a == b) r.add_term(Word::trivial_at(q.target(a)), -Scalar::one(f));
                rels.push_back(std::move(r));
            }
        if (!out.empty()) {
            Element r(q, f);
            for (std::uint32_t a : out)
                r.add_term(Word::from_letters(q, {Letter{a, false}, Letter{a, true}}),
                           Scalar::one(f));
            r.add_term(Word::trivial_at(v), -Scalar::one(f));
            rels.push_back(std::move(r));
        }
    }
    return rels;
}

// A rewritable adjacent pair at position pos (application order):
//   R1: ghost letter followed by a real letter  (alpha beta* site)
//   R2: special arrow followed by its own ghost (gamma* gamma site)
struct Redex {
    std::size_t pos;
    bool r1;
};

inline std::vector<Redex> find_redexes(const Quiver& q, const Word& w) {
    std::vector<Redex> rs;
    for (std::size_t j = 0; j + 1 < w.letters.size(); ++j) {
        Letter a = w.letters[j], b = w.letters[j + 1];
        if (a.ghost && !b.ghost) {
            rs.push_back(Redex{j, true});
        } else if (!a.ghost && b.ghost && a.arrow == b.arrow && q.is_special(a.arrow)) {
            rs.push_back(Redex{j, false});
        }
    }
    return rs;
}

inline bool is_normal_monomial(const Quiver& q, const Word& w) {
    return find_redexes(q, w).empty();
}

namespace detail {

inline Word splice(const Word& w, std::size_t pos, const std::vector<Letter>& repl) {
    Word r;
    r.letters.reserve(w.letters.size() - 2 + repl.size());
    r.letters.assign(w.letters.begin(), w.letters.begin() + pos);
    r.letters.insert(r.letters.end(), repl.begin(), repl.end());
    r.letters.insert(r.letters.end(), w.letters.begin() + pos + 2, w.letters.end());
    r.src = w.src;
    r.dst = w.dst;
    return r;
}

}  // namespace detail

// One rewrite step; the result replaces the monomial (empty = zero).
inline std::vector<std::pair<Word, Scalar>> apply_redex(const Quiver& q, Field f, const Word& w,
                                                        Redex r) {
    std::vector<std::pair<Word, Scalar>> out;
    if (r.r1) {
        Letter bstar = w.letters[r.pos], alpha = w.letters[r.pos + 1];
        if (alpha.arrow != bstar.arrow) return out;  // alpha beta* = 0
        out.emplace_back(detail::splice(w, r.pos, {}), Scalar::one(f));
    } else {
        std::uint32_t gamma = w.letters[r.pos].arrow;
        std::uint32_t i = q.source(gamma);
        out.emplace_back(detail::splice(w, r.pos, {}), Scalar::one(f));
        for (std::uint32_t a : q.out_arrows(i)) {
            if (a == gamma) continue;
            out.emplace_back(
                detail::splice(w, r.pos, {Letter{a, false}, Letter{a, true}}),
                -Scalar::one(f));
        }
    }
    return out;
}

using RedexChooser = std::function<std::size_t(const std::vector<Redex>&)>;

// Rewrite to normal form with a pluggable redex choice; the deterministic
// strategy is leftmost-first (R1 and R2 sites never share a position).
inline Element normal_form_with_chooser(const Element& x, const RedexChooser& choose,
                                        std::uint64_t fuel = kDefaultFuel) {
    const Quiver& q = x.quiver();
    Field f = x.field();
    Element result(q, f);
    std::vector<std::pair<Word, Scalar>> stack(x.terms().begin(), x.terms().end());
    while (!stack.empty()) {
        auto [w, c] = std::move(stack.back());
        stack.pop_back();
        std::vector<Redex> rs = find_redexes(q, w);
        if (rs.empty()) {
            result.add_term(w, c);
            continue;
        }
        if (fuel == 0) throw FuelExhausted("rewrite fuel exhausted");
        --fuel;
        Redex r = rs[choose(rs)];
        for (auto& [w2, c2] : apply_redex(q, f, w, r)) stack.emplace_back(std::move(w2), c * c2);
    }
    return result;
}

// Canonical normal form against the Cuntz-Krieger relations; idempotent.
inline Element normal_form(const Element& x, std::uint64_t fuel = kDefaultFuel) {
    return normal_form_with_chooser(
        x, [](const std::vector<Redex>&) -> std::size_t { return 0; }, fuel);
}

inline Element leavitt_multiply(const Element& x, const Element& y) {
    return normal_form(multiply(x, y));
}

inline bool leavitt_equal(const Element& x, const Element& y) {
    return normal_form(x - y).is_zero();
}

// All real paths of length <= max_len, including trivial ones.
inline std::vector<Word> real_paths_up_to(const Quiver& q, std::size_t max_len) {
    std::vector<Word> paths;
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) paths.push_back(Word::trivial_at(v));
    std::size_t frontier_begin = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t frontier_end = paths.size();
        for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
            Word p = paths[i];
            for (std::uint32_t a : q.out_arrows(p.dst)) {
                Word ext = p;
                ext.letters.push_back(Letter{a, false});
                ext.dst = q.target(a);
                paths.push_back(std::move(ext));
            }
        }
        frontier_begin = frontier_end;
        if (frontier_begin == paths.size()) break;  // no longer paths exist
    }
    return paths;
}

// The normal-form basis monomials gamma* eta of length <= max_len, in
// canonical order: eta, gamma real paths with t(eta) = t(gamma), and the
// junction pair is not special gamma_i* gamma_i.
inline std::vector<Word> basis_up_to(const Quiver& q, std::size_t max_len) {
    std::vector<std::vector<Word>> by_target(q.num_vertices());
    for (const Word& p : real_paths_up_to(q, max_len)) by_target[p.dst].push_back(p);
    std::set<Word> basis;
    for (std::uint32_t v = 0; v < q.num_vertices(); ++v) {
        for (const Word& eta : by_target[v]) {
            for (const Word& gam : by_target[v]) {
                if (eta.length() + gam.length() > max_len) continue;
                if (!eta.trivial() && !gam.trivial() &&
                    eta.letters.back().arrow == gam.letters.back().arrow &&
                    q.is_special(eta.letters.back().arrow))
                    continue;
                Word w = *concat(ghost(gam), eta);
                basis.insert(std::move(w));
            }
        }
    }
    return {basis.begin(), basis.end()};
}

// Complete basis of a finite-dimensional L (finite acyclic Q): enumerate
// until the count stabilizes.
inline std::vector<Word> full_basis(const Quiver& q) {
    if (!q.is_acyclic()) throw std::invalid_argument("quiver has a cycle: basis is infinite");
    // Acyclic: real paths have length <= |Q0| - 1, monomials <= 2(|Q0| - 1).
    std::size_t bound = 2 * q.num_vertices();
    std::vector<Word> basis = basis_up_to(q, bound);
    if (basis_up_to(q, bound + 1).size() != basis.size())
        throw std::logic_error("basis enumeration did not stabilize");
    return basis;
}

}  // namespace lpa

#endif
