#ifndef ZERODIM_MONOMIAL_HPP
#define ZERODIM_MONOMIAL_HPP

#include <string>
#include <vector>

#include "zerodim/errors.hpp"

namespace zerodim {

// Power product in the variables X0..Xn. The order used everywhere is
// degree-reverse-lexicographic with X0 < X1 < ... < Xn, so X0 is the
// revlex-smallest variable. Two consequences the rest of the code relies on:
//   * in a homogeneous polynomial, if X0 divides the leading term it divides
//     every term (this is what turns saturation by X0 into a divide-out);
//   * leading terms of a saturated ideal are X0-free.
class Monomial {
public:
    explicit Monomial(int nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<int> exps);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int exponent(int var) const { return e_[var]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_constant() const { return deg_ == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    Monomial divided_by(const Monomial& o) const; // requires o.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_to(const Monomial& o) const;

    static Monomial power_of(int nvars, int var, int exp);

    // degrevlex comparison, X0 smallest: positive if a > b, negative if a < b.
    static int cmp(const Monomial& a, const Monomial& b) {
        if (a.deg_ != b.deg_) return a.deg_ < b.deg_ ? -1 : 1;
        for (std::size_t k = 0; k < a.e_.size(); ++k) {
            int d = a.e_[k] - b.e_[k];
            if (d != 0) return d > 0 ? -1 : 1;
        }
        return 0;
    }

    bool operator==(const Monomial& o) const { return e_ == o.e_; }
    bool operator!=(const Monomial& o) const { return e_ != o.e_; }

    std::string str() const; // "X0^2*X1", "1" for the constant

private:
    std::vector<int> e_;
    int deg_ = 0;
};

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp(a, b) > 0;
    }
};

// All monomials of the given total degree, listed in decreasing order.
// With x0_free set, only monomials not divisible by X0.
std::vector<Monomial> monomials_of_degree(int nvars, int degree, bool x0_free = false);

} // namespace zerodim

#endif
