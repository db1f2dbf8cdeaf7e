#ifndef LPA_SCALAR_HPP
#define LPA_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lpa {

// Coefficient field: rationals (p == 0) or the prime field GF(p).
struct Field {
    unsigned long p = 0;

    bool is_rational() const { return p == 0; }
    bool operator==(const Field&) const = default;

    std::string name() const {
        return p == 0 ? std::string("q") : "gf:" + std::to_string(p);
    }
};

inline const Field kRationals{0};

// An exact field element. Rationals are kept in lowest terms with positive
// denominator (mpq_class canonicalizes); GF(p) residues live in [0, p).
class Scalar {
public:
    Scalar() : field_{0}, q_(0) {}

    explicit Scalar(Field f) : field_(f), q_(0) {}

    Scalar(Field f, long num, long den = 1) : field_(f), q_(num, den) {
        if (den == 0) throw std::invalid_argument("zero denominator");
        q_.canonicalize();
        reduce();
    }

    Scalar(Field f, const mpq_class& q) : field_(f), q_(q) {
        q_.canonicalize();
        reduce();
    }

    static Scalar zero(Field f) { return Scalar(f); }
    static Scalar one(Field f) { return Scalar(f, 1); }

    Field field() const { return field_; }
    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Scalar operator-() const { return make(field_, -q_); }

    Scalar operator+(const Scalar& o) const {
        check(o);
        return make(field_, q_ + o.q_);
    }
    Scalar operator-(const Scalar& o) const {
        check(o);
        return make(field_, q_ - o.q_);
    }
    Scalar operator*(const Scalar& o) const {
        check(o);
        return make(field_, q_ * o.q_);
    }
    Scalar operator/(const Scalar& o) const {
        check(o);
        if (o.is_zero()) throw std::domain_error("division by zero");
        if (field_.p == 0) return make(field_, q_ / o.q_);
        return *this * o.inverse();
    }

    Scalar inverse() const {
        if (is_zero()) throw std::domain_error("inverse of zero");
        if (field_.p == 0) return make(field_, 1 / q_);
        mpz_class r;
        mpz_class p(static_cast<unsigned long>(field_.p));
        if (mpz_invert(r.get_mpz_t(), q_.get_num().get_mpz_t(), p.get_mpz_t()) == 0)
            throw std::domain_error("non-invertible residue");
        Scalar s(field_);
        s.q_ = mpq_class(r);
        return s;
    }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const { return field_ == o.field_ && q_ == o.q_; }
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form: "n" or "n/d" for rationals, the residue for GF(p).
    std::string str() const { return q_.get_str(); }

    const mpq_class& raw() const { return q_; }

private:
    static Scalar make(Field f, const mpq_class& q) {
        Scalar s(f);
        s.q_ = q;
        s.q_.canonicalize();
        s.reduce();
        return s;
    }

    void check(const Scalar& o) const {
        if (!(field_ == o.field_)) throw std::invalid_argument("mixed-field arithmetic");
    }

    void reduce() {
        if (field_.p == 0) return;
        mpz_class p(static_cast<unsigned long>(field_.p));
        mpz_class num = q_.get_num(), den = q_.get_den();
        mpz_class r;
        mpz_mod(r.get_mpz_t(), num.get_mpz_t(), p.get_mpz_t());
        if (den != 1) {
            mpz_class dinv;
            if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0)
                throw std::domain_error("denominator not invertible mod p");
            r = (r * dinv) % p;
            if (r < 0) r += p;
        }
        q_ = mpq_class(r);
    }

    Field field_;
    mpq_class q_;
};

}  // namespace lpa

#endif
