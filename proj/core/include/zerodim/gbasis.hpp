#ifndef ZERODIM_GBASIS_HPP
#define ZERODIM_GBASIS_HPP

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "zerodim/matrix.hpp"
#include "zerodim/poly.hpp"

namespace zerodim {

// Reduced, monic Groebner basis of a homogeneous ideal, possibly truncated at
// a degree cap. Because S-pairs are processed degree by degree, a truncated
// basis is a complete Groebner basis "up to degree cap": every normal form of
// degree <= cap is exact.
class GroebnerBasis {
public:
    GroebnerBasis(Ring r, std::vector<Poly> elements, std::optional<int> cap);

    const Ring& ring() const { return ring_; }
    const std::vector<Poly>& elements() const { return g_; }
    bool truncated() const { return cap_.has_value(); }
    int cap() const { return *cap_; }

    // 1 lies in the basis (the ideal is the whole ring).
    bool is_unit() const;
    bool is_zero() const { return g_.empty(); }
    int min_degree() const; // smallest element degree, -1 for the zero ideal

    void ensure_degree_ok(int degree) const; // throws past a truncation cap

private:
    Ring ring_;
    std::vector<Poly> g_;
    std::optional<int> cap_;
};

// Buchberger with the normal (lowest S-pair degree first) strategy. Without a
// cap the computation runs to completion; with one, pairs above the cap are
// discarded and the result is marked truncated.
GroebnerBasis buchberger(const Ring& r, const std::vector<Poly>& gens,
                         std::optional<int> cap = std::nullopt);

// Remainder of f under division by G; zero iff f lies in the ideal (for
// complete bases, or degree <= cap for truncated ones).
Poly normal_form(const Poly& f, const GroebnerBasis& G);

// Hilbert function data of a ring R = P/I with a zero-dimensional projective
// scheme as Proj: 1 = HF(0) < HF(1) < ... < HF(r) = deg, constant afterwards.
struct HilbertData {
    std::vector<int> values; // HF(0..regularity)
    int regularity = 0;      // least i from which HF is constant
    int eventual = 0;        // the constant value, i.e. deg(X)
    int alpha = -1;          // least degree of a nonzero ideal element; -1 for the zero ideal
    bool empty_scheme = false; // the unit ideal: HF identically 0

    int value_at(int i) const {
        if (i < 0) return 0;
        return i <= regularity ? values[i] : eventual;
    }
};

// Homogeneous ideal with its reduced basis computed at construction and a
// cached Hilbert function; immutable afterwards so it can be shared freely.
class HomogIdeal {
public:
    HomogIdeal(const Ring& r, std::vector<Poly> gens);

    const Ring& ring() const { return ring_; }
    const std::vector<Poly>& generators() const { return gens_; }
    const GroebnerBasis& basis() const { return *gb_; }

    bool contains(const Poly& f) const;
    bool is_unit() const { return gb_->is_unit(); }
    bool is_zero_ideal() const { return gb_->is_zero(); }

    // HF of P/I at one degree; works for any homogeneous ideal.
    int hilbert_function(int i) const;
    // Full zero-dimensional analysis; throws when the quotient is not
    // zero-dimensional (HF still growing at the safety bound).
    const HilbertData& hilbert_data() const;
    bool zero_dimensional() const;

    int regularity_index() const { return hilbert_data().regularity; }
    int degree() const { return hilbert_data().eventual; }

    // Monomials of degree d outside the leading-term ideal: a K-basis of (P/I)_d.
    std::vector<Monomial> standard_monomials(int d) const;
    // K-basis of the degree-d slice (I)_d, each element with a distinct
    // leading monomial (m - NF(m) over staircase monomials m).
    std::vector<Poly> piece(int d) const;
    // Coefficient matrix of piece(d) in the monomial basis of P_d.
    Matrix piece_matrix(int d) const;

    // Degrees of a minimal homogeneous generating set (graded Nakayama).
    std::vector<int> minimal_generator_degrees() const;

    bool equals(const HomogIdeal& o) const; // via reduced-basis comparison

private:
    Ring ring_;
    std::vector<Poly> gens_;
    std::shared_ptr<const GroebnerBasis> gb_;
    mutable std::shared_ptr<const HilbertData> hd_;
    mutable std::map<int, int> hf_cache_;
};

// Hilbert function of a complete intersection cut out by forms of the given
// degrees in P^n (n = nvars - 1), as HilbertData.
HilbertData ci_hilbert_data(int nvars, const std::vector<int>& form_degrees);

} // namespace zerodim

#endif
