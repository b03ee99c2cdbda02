#ifndef ZERODIM_POLY_HPP
#define ZERODIM_POLY_HPP

#include <string>
#include <string_view>
#include <vector>

#include "zerodim/field.hpp"
#include "zerodim/monomial.hpp"

namespace zerodim {

// Graded polynomial ring K[X0..Xn] over an exact field. `nvars` counts all
// variables, so a ring for P^n has nvars == n + 1.
struct Ring {
    int nvars = 0;
    Field field;

    int proj_dim() const { return nvars - 1; }
    bool operator==(const Ring& o) const { return nvars == o.nvars && field == o.field; }
    bool operator!=(const Ring& o) const { return !(*this == o); }
};

struct Term {
    Monomial mono;
    Scalar coeff;
};

// Sparse polynomial with terms kept strictly decreasing in the monomial
// order and free of zero coefficients, so equal polynomials have equal
// representations.
class Poly {
public:
    explicit Poly(const Ring& r) : ring_(r) {}

    static Poly zero(const Ring& r) { return Poly(r); }
    static Poly constant(const Ring& r, const Scalar& c);
    static Poly one(const Ring& r) { return constant(r, Scalar::one(r.field)); }
    static Poly variable(const Ring& r, int var);
    static Poly term(const Ring& r, const Monomial& m, const Scalar& c);

    const Ring& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    int degree() const { return t_.empty() ? -1 : t_.front().mono.degree(); }
    bool is_homogeneous() const;
    const Term& leading_term() const;
    const Monomial& leading_monomial() const { return leading_term().mono; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& c) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }

    // f minus c * m * g, the reduction step of the division algorithm.
    Poly minus_multiple(const Scalar& c, const Monomial& m, const Poly& g) const;

    Poly monic() const; // leading coefficient scaled to 1
    Scalar coefficient_of(const Monomial& m) const;

    Scalar evaluate(const std::vector<Scalar>& point) const;

    // Substitute X0 = 1: exponents of X0 drop to zero and terms merge. The
    // result lives in the same ring and is in general inhomogeneous.
    Poly dehomogenized() const;
    // Pad every term with a power of X0 so all terms reach `degree`.
    Poly homogenized(int degree) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str() const;
    // Accepts sums of terms like "3/4*X0^2*X1 - X2^3 + 2"; whitespace free-form.
    static Poly parse(const Ring& r, std::string_view text);

private:
    Ring ring_;
    std::vector<Term> t_;

    void check_same_ring(const Poly& o) const;
    static Poly from_unsorted(const Ring& r, std::vector<Term> terms);
};

// Monomial K-basis of the degree-d slice of the ring, in decreasing order.
std::vector<Monomial> graded_basis(const Ring& r, int degree);

// Coordinates of f in an explicit monomial list; throws if f involves a
// monomial outside the list.
std::vector<Scalar> coordinates(const Poly& f, const std::vector<Monomial>& basis);

// The linear combination sum_l v[l] * basis[l].
Poly from_coordinates(const Ring& r, const std::vector<Monomial>& basis,
                      const std::vector<Scalar>& v);

} // namespace zerodim

#endif
