#include "zerodim/field.hpp"

#include <limits>

namespace zerodim {

namespace {

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid on (a, p); a is already reduced and nonzero
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(p), newr = static_cast<std::int64_t>(a);
    while (newr != 0) {
        std::int64_t q = r / newr;
        t -= q * newt; std::swap(t, newt);
        r -= q * newr; std::swap(r, newr);
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

} // namespace

Field Field::Fp(std::uint64_t p) {
    if (p < 2 || p > (std::uint64_t(1) << 62))
        throw validation_error("field characteristic out of range: " + std::to_string(p));
    if (!is_prime_u64(p))
        throw validation_error("field characteristic is not prime: " + std::to_string(p));
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::str() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

Scalar Scalar::of_int(const Field& f, long v) {
    Scalar s(f);
    if (f.is_rational()) {
        s.q_ = v;
    } else {
        std::int64_t m = v % static_cast<std::int64_t>(f.characteristic());
        if (m < 0) m += static_cast<std::int64_t>(f.characteristic());
        s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
}

Scalar Scalar::of_fraction(const Field& f, long num, unsigned long den) {
    if (den == 0) throw validation_error("zero denominator");
    if (f.is_rational()) {
        Scalar s(f);
        s.q_ = mpq_class(num, den);
        s.q_.canonicalize();
        return s;
    }
    Scalar d = of_int(f, static_cast<long>(den % f.characteristic()));
    if (d.is_zero())
        throw validation_error("denominator vanishes modulo " + std::to_string(f.characteristic()));
    return of_int(f, num) * d.inverse();
}

Scalar Scalar::of_mpq(const Field& f, const mpq_class& v) {
    if (v.get_den() == 0) throw validation_error("zero denominator");
    if (f.is_rational()) {
        Scalar s(f);
        s.q_ = v;
        s.q_.canonicalize();
        return s;
    }
    mpz_class p(static_cast<unsigned long>(f.characteristic()));
    mpz_class num = v.get_num() % p, den = v.get_den() % p;
    if (num < 0) num += p;
    Scalar sn = of_int(f, 0), sd = of_int(f, 0);
    sn.r_ = num.get_ui();
    sd.r_ = den.get_ui();
    if (sd.is_zero())
        throw validation_error("denominator vanishes modulo " + std::to_string(f.characteristic()));
    return sn * sd.inverse();
}

bool Scalar::is_zero() const {
    return fld_.is_rational() ? q_ == 0 : r_ == 0;
}

bool Scalar::is_one() const {
    return fld_.is_rational() ? q_ == 1 : r_ == 1;
}

void Scalar::check_same_field(const Scalar& o) const {
    if (fld_ != o.fld_)
        throw validation_error("mixed coefficient fields: " + fld_.str() + " vs " + o.fld_.str());
}

Scalar Scalar::operator-() const {
    Scalar s(fld_);
    if (fld_.is_rational()) s.q_ = -q_;
    else if (r_ != 0) s.r_ = fld_.characteristic() - r_;
    return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fld_);
    if (fld_.is_rational()) {
        s.q_ = q_ + o.q_;
    } else {
        std::uint64_t p = fld_.characteristic();
        std::uint64_t v = r_ + o.r_; // p < 2^62, no overflow
        s.r_ = v >= p ? v - p : v;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
    check_same_field(o);
    Scalar s(fld_);
    if (fld_.is_rational()) s.q_ = q_ * o.q_;
    else s.r_ = mulmod(r_, o.r_, fld_.characteristic());
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw validation_error("inverse of zero");
    Scalar s(fld_);
    if (fld_.is_rational()) s.q_ = 1 / q_;
    else s.r_ = invmod(r_, fld_.characteristic());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

bool Scalar::operator==(const Scalar& o) const {
    check_same_field(o);
    return fld_.is_rational() ? q_ == o.q_ : r_ == o.r_;
}

std::string Scalar::str() const {
    return fld_.is_rational() ? q_.get_str() : std::to_string(r_);
}

const mpq_class& Scalar::rational() const {
    if (!fld_.is_rational()) throw validation_error("not a rational scalar");
    return q_;
}

std::uint64_t Scalar::residue() const {
    if (fld_.is_rational()) throw validation_error("not a prime-field scalar");
    return r_;
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng, long bound) {
    if (f.is_rational()) {
        std::uniform_int_distribution<long> dist(-bound, bound);
        return Scalar::of_int(f, dist(rng));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, f.characteristic() - 1);
    return Scalar::of_int(f, static_cast<long>(dist(rng)));
}

} // namespace zerodim
