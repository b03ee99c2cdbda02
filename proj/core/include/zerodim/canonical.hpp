#ifndef ZERODIM_CANONICAL_HPP
#define ZERODIM_CANONICAL_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zerodim/scheme.hpp"

namespace zerodim {

// Free K[x0]-module basis of R_X: one normal-form monomial per "new"
// standard-monomial direction at each degree. Under this term order these are
// exactly the X0-free standard monomials of degree <= r_X; padding the
// degree-(<= i) elements with x0 powers gives a K-basis of (R_X)_i.
struct AdaptedBasis {
    std::vector<Monomial> elements; // sorted by degree, then monomial order
    std::vector<int> degrees;
    std::vector<int> counts; // per-degree counts h_i = HF(i) - HF(i-1), i = 0..r_X
};

// A homogeneous functional of degree -d in the canonical module
// omega = Hom_{K[x0]}(R_X, K[x0])(-1): it sends the k-th adapted basis
// element to c[k] * x0^(deg g_k - d - 1), where c[k] is forced to zero
// whenever deg g_k <= d.
struct OmegaElement {
    int d = 0;
    std::vector<Scalar> c;
};

// The canonical module of R_X, presented through an adapted basis.
class CanonicalModule {
public:
    explicit CanonicalModule(Scheme X);

    const Scheme& scheme() const { return x_; }
    const AdaptedBasis& basis() const { return ab_; }
    int rank() const { return static_cast<int>(ab_.elements.size()); } // = deg(X)

    // alpha with NF(f) = sum_k alpha_k x0^(deg f - deg g_k) g_k.
    std::vector<Scalar> adapted_coordinates(const Poly& f) const;

    // Basis functionals of omega_{-d}: one per adapted element of degree
    // >= d+1; dimension deg(X) - HF_X(d).
    std::vector<OmegaElement> piece(int d) const;

    // phi(f) = result * x0^(deg f - d - 1).
    Scalar pair(const OmegaElement& phi, const Poly& f) const;

    // f * phi, where (f*phi)(g) = phi(fg); lands in degree -(d - deg f).
    OmegaElement act(const Poly& f, const OmegaElement& phi) const;

private:
    Scheme x_;
    AdaptedBasis ab_;
    std::map<std::vector<int>, int> index_;
};

AdaptedBasis adapted_basis(const Scheme& X);
std::vector<OmegaElement> omega_piece(const Scheme& X, int d);
OmegaElement module_action(const Scheme& X, const Poly& f, const OmegaElement& phi);

// Whether Ann_{R_X}((omega)_{-d}) = 0, tested in ring degree r_X. The
// reduction to that single degree is sound because x0 is a non-zerodivisor on
// R_X and acts injectively on omega; annihilator_at_degree exists to
// cross-check other degrees.
struct AnnihilatorResult {
    bool zero = false;
    std::optional<Poly> witness; // nonzero annihilating normal form
    int tested_degree = 0;
};

AnnihilatorResult annihilator_is_zero(const Scheme& X, int d);
AnnihilatorResult annihilator_at_degree(const Scheme& X, int d, int i);

// Random search for a single functional phi in omega_{-d} with Ann(phi) = 0;
// exists for locally Gorenstein X with CBP(d) over an infinite field.
struct InjectiveFunctionalResult {
    std::optional<OmegaElement> phi;
    int attempts = 0;
    bool small_field_warning = false; // finite field: existence not guaranteed
};

InjectiveFunctionalResult find_injective_functional(const Scheme& X, int d,
                                                    std::uint64_t seed,
                                                    int max_attempts = 16);

} // namespace zerodim

#endif
