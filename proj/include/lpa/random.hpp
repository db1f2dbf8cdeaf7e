#ifndef LPA_RANDOM_HPP
#define LPA_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "lpa/tensor.hpp"

namespace lpa {

// Seeded sampler over the normal-form monomial pool of a quiver. Index
// draws go through next() (plain modulo) so that outputs are identical
// across standard libraries; std::uniform_int_distribution is not.
class Sampler {
public:
    Sampler(const Quiver& q, Field f, std::uint64_t seed, std::size_t max_len = 4)
        : q_(&q), field_(f), gen_(seed), pool_(basis_up_to(q, max_len)) {
        by_src_.assign(q.num_vertices(), {});
        by_dst_.assign(q.num_vertices(), {});
        for (std::size_t i = 0; i < pool_.size(); ++i) {
            by_src_[pool_[i].src].push_back(i);
            by_dst_[pool_[i].dst].push_back(i);
        }
    }

    std::uint64_t next(std::uint64_t n) { return n == 0 ? 0 : gen_() % n; }

    Scalar coefficient() {
        // small nonzero integers
        long c = static_cast<long>(next(6)) - 3;
        if (c >= 0) ++c;
        return Scalar(field_, c);
    }

    const Word& word() { return pool_[next(pool_.size())]; }

    Element element(std::size_t max_terms = 3) {
        Element x(*q_, field_);
        std::size_t n = 1 + next(max_terms);
        for (std::size_t i = 0; i < n; ++i) x.add_term(word(), coefficient());
        return x;
    }

    // A glued monomial tuple read left to right: s(t_j) = t(t_{j+1}).
    TensorElement tensor(std::size_t arity, std::size_t max_terms = 2) {
        TensorElement t(*q_, field_, arity);
        std::size_t n = 1 + next(max_terms);
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<Word> tuple(arity, Word::trivial_at(0));
            tuple[arity - 1] = word();
            bool ok = true;
            for (std::size_t j = arity - 1; j-- > 0;) {
                const auto& bucket = by_src_[tuple[j + 1].dst];
                if (bucket.empty()) {
                    ok = false;
                    break;
                }
                tuple[j] = pool_[bucket[next(bucket.size())]];
            }
            if (ok) t.add_term(tuple, coefficient());
        }
        return t;
    }

    // Random element of P: arity-2 tuples glued at a regular vertex.
    TensorElement p_element(std::size_t max_terms = 2) {
        TensorElement t(*q_, field_, 2);
        std::vector<std::uint32_t> regular = q_->regular_vertices();
        if (regular.empty()) return t;
        std::size_t n = 1 + next(max_terms);
        for (std::size_t k = 0; k < n; ++k) {
            std::uint32_t i = regular[next(regular.size())];
            const auto& left = by_src_[i];
            const auto& right = by_dst_[i];
            if (left.empty() || right.empty()) continue;
            t.add_term({pool_[left[next(left.size())]], pool_[right[next(right.size())]]},
                       coefficient());
        }
        return t;
    }

private:
    const Quiver* q_;
    Field field_;
    std::mt19937_64 gen_;
    std::vector<Word> pool_;
    std::vector<std::vector<std::size_t>> by_src_, by_dst_;
};

}  // namespace lpa

#endif
