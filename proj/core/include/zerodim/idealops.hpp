#ifndef ZERODIM_IDEALOPS_HPP
#define ZERODIM_IDEALOPS_HPP

#include <vector>

#include "zerodim/gbasis.hpp"

namespace zerodim {

// A K-subspace of the degree-d slice of the ring (or of its X0-free part
// when x0_free is set, i.e. a slice of P/(X0)). Basis polynomials are kept
// linearly independent.
struct GradedPiece {
    Ring ring;
    int degree = 0;
    bool x0_free = false;
    std::vector<Poly> basis;

    int dim() const { return static_cast<int>(basis.size()); }
    // Coefficient matrix in the (possibly X0-free) monomial basis of degree.
    Matrix matrix() const;
};

bool pieces_equal(const GradedPiece& a, const GradedPiece& b);

// Degree-d slice of I. With x0_free, the image of the slice in P/(X0).
GradedPiece ideal_piece(const HomogIdeal& I, int d, bool x0_free = false);

// All of these work degree by degree with exact kernels; generation bounds
// come from the degrees of the zero-dimensional quotients involved.
HomogIdeal intersect(const HomogIdeal& I, const HomogIdeal& J);
HomogIdeal intersect_many(const Ring& r, const std::vector<const HomogIdeal*>& ideals);
HomogIdeal ideal_sum(const HomogIdeal& I, const HomogIdeal& J);
HomogIdeal ideal_product(const HomogIdeal& I, const HomogIdeal& J);

HomogIdeal colon(const HomogIdeal& I, const HomogIdeal& J);
HomogIdeal colon(const HomogIdeal& I, const Poly& g);

// I : <(J)_k>. A zero slice makes the colon vacuous; the input ideal comes
// back unchanged with the flag set (never silently the unit ideal).
struct ColonByPiece {
    HomogIdeal ideal;
    bool vacuous_piece = false;
};
ColonByPiece colon_by_piece(const HomogIdeal& I, const HomogIdeal& J, int k);

// Saturation with respect to X0: divide each reduced-basis element by its
// maximal X0 power and recompute, until no leading term involves X0.
HomogIdeal saturate_x0(const HomogIdeal& I);
bool is_x0_saturated(const HomogIdeal& I);

// I : J^infinity, by iterating the colon until it stabilizes.
HomogIdeal saturate(const HomogIdeal& I, const HomogIdeal& J);

// {f of degree d : f * span(Jp) contained in span(Ip)}; degrees must align as
// Ip.degree == d + Jp.degree. An empty Jp makes the condition vacuous (full
// slice). Both pieces must agree on the x0_free convention.
GradedPiece piece_colon(const GradedPiece& Ip, const GradedPiece& Jp, int d);

} // namespace zerodim

#endif
