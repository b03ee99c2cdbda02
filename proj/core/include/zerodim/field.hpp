#ifndef ZERODIM_FIELD_HPP
#define ZERODIM_FIELD_HPP

#include <cstdint>
#include <random>
#include <string>

#include <gmpxx.h>

#include "zerodim/errors.hpp"

namespace zerodim {

// Coefficient field descriptor: the rationals (characteristic 0) or a prime
// field F_p with word-sized p.
class Field {
public:
    Field() = default;
    static Field Q() { return Field(); }
    static Field Fp(std::uint64_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint64_t characteristic() const { return p_; }
    std::string str() const;

    bool operator==(const Field& o) const { return p_ == o.p_; }
    bool operator!=(const Field& o) const { return p_ != o.p_; }

private:
    std::uint64_t p_ = 0; // 0 encodes Q
};

// Exact field element. Rational values are kept in canonical form (lowest
// terms, positive denominator); F_p values as residues in [0, p).
class Scalar {
public:
    Scalar() : Scalar(Field::Q()) {}
    explicit Scalar(const Field& f) : fld_(f) {}

    static Scalar zero(const Field& f) { return Scalar(f); }
    static Scalar one(const Field& f) { return of_int(f, 1); }
    static Scalar of_int(const Field& f, long v);
    // num/den as a field element; den must be invertible (nonzero mod p).
    static Scalar of_fraction(const Field& f, long num, unsigned long den);
    static Scalar of_mpq(const Field& f, const mpq_class& v);

    const Field& field() const { return fld_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const; // o must be nonzero
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    // Canonical text form: "3", "-3/4"; residues print as plain integers.
    std::string str() const;

    const mpq_class& rational() const; // requires a rational field
    std::uint64_t residue() const;     // requires a prime field

private:
    Field fld_;
    mpq_class q_;
    std::uint64_t r_ = 0;

    void check_same_field(const Scalar& o) const;
};

// Uniform draw used by the randomized constructions: an integer in
// [-bound, bound] over Q, a uniform residue over F_p.
Scalar random_scalar(const Field& f, std::mt19937_64& rng, long bound);

} // namespace zerodim

#endif
