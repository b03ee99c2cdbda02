#ifndef ZERODIM_SCHEME_HPP
#define ZERODIM_SCHEME_HPP

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "zerodim/idealops.hpp"

namespace zerodim {

// One primary component of a zero-dimensional scheme: a K-rational point with
// homogeneous generators of the primary ideal supported there. Empty
// local_gens means the reduced point.
struct SchemeComponent {
    std::vector<Scalar> point; // projective coordinates, length nvars
    std::vector<Poly> local_gens;
};

// The Artinian local ring O_{X,p} of one component, presented on the standard
// monomials of its saturated ideal in the component's regularity degree r.
// The germ of a homogeneous f of degree d is the coordinate vector of
// f/x0^d there; products are divided back down by powers of x0, exact since
// the support avoids Z(X0).
class LocalAlgebra {
public:
    LocalAlgebra(const Ring& r, std::vector<Scalar> point, std::vector<Poly> local_gens);
    LocalAlgebra(const LocalAlgebra&) = delete;
    LocalAlgebra& operator=(const LocalAlgebra&) = delete;

    const Ring& ring() const { return ring_; }
    const std::vector<Scalar>& point() const { return point_; } // point_[0] == 1
    const HomogIdeal& ideal() const { return ideal_; }
    int regularity() const { return r_; }
    int dimension() const { return dim_; } // multiplicity dim_K O_{X,p}
    const std::vector<Monomial>& basis() const { return basis_; }

    // Coordinate vector of the germ of a homogeneous polynomial of any degree.
    std::vector<Scalar> germ(const Poly& f) const;
    std::vector<Scalar> identity_element() const;
    std::vector<Scalar> product(const std::vector<Scalar>& u,
                                const std::vector<Scalar>& v) const;
    // A degree-r polynomial whose germ is v.
    Poly lift(const std::vector<Scalar>& v) const;

    // Image in the residue field, i.e. evaluation at the point.
    Scalar eval(const std::vector<Scalar>& v) const;
    Matrix multiplication_matrix(const std::vector<Scalar>& v) const;
    const Matrix& maximal_ideal_basis() const { return maxideal_; }
    const Matrix& socle_basis() const { return socle_; }
    bool gorenstein() const { return socle_.cols() == 1; }
    bool is_socle(const std::vector<Scalar>& v) const;

private:
    Ring ring_;
    std::vector<Scalar> point_;
    HomogIdeal ideal_;
    int r_;
    int dim_;
    std::vector<Monomial> basis_;
    std::vector<Scalar> eval_row_;
    Matrix maxideal_;
    Matrix socle_;
    std::vector<Matrix> linear_germ_mults_; // by the germs of Xk - pk*X0

    mutable std::map<int, LinearSolver> divide_;
    mutable std::mutex mu_;

    const LinearSolver& x0_division(int k) const; // divide by x0^k at level r_
    std::vector<Scalar> coords_at(const Poly& f, int d) const;
};

// A zero-dimensional subscheme of P^n with no support on Z(X0), given either
// by primary components at K-rational points or by a bare saturated ideal.
// Raw mode disables the per-point operations.
class Scheme {
public:
    static Scheme from_components(const Ring& r, std::vector<SchemeComponent> comps);
    static Scheme from_ideal(const Ring& r, const std::vector<Poly>& gens);
    static Scheme from_ideal(HomogIdeal ideal);

    const Ring& ring() const { return ring_; }
    bool components_mode() const { return components_mode_; }
    int component_count() const { return static_cast<int>(locals_.size()); }
    const LocalAlgebra& local(int j) const;
    const std::vector<Scalar>& support_point(int j) const { return local(j).point(); }

    const HomogIdeal& ideal() const { return ideal_; }
    const HilbertData& hilbert() const { return ideal_.hilbert_data(); }
    int degree() const;
    int regularity() const;
    bool is_empty() const { return ideal_.is_unit(); }

    std::optional<bool> reduced() const;
    std::optional<bool> locally_gorenstein() const;
    // Raw input was not saturated and got saturated on construction.
    bool saturation_applied() const { return saturation_applied_; }

private:
    Scheme(Ring r, HomogIdeal ideal) : ring_(r), ideal_(std::move(ideal)) {}

    Ring ring_;
    HomogIdeal ideal_;
    bool components_mode_ = false;
    bool saturation_applied_ = false;
    std::vector<std::shared_ptr<const LocalAlgebra>> locals_;
};

// Exact matrix of (R_X)_i -> prod_j O_{X,p_j}: one column per standard
// monomial of degree i, germ blocks stacked in component order. Injective at
// every degree, bijective from the regularity index on.
Matrix germ_matrix(const Scheme& X, int i);

// Socle vector of component j embedded into the product of all local rings.
std::vector<Scalar> embed_local_vector(const Scheme& X, int j,
                                       const std::vector<Scalar>& v);

// deg_X(p_j): least i such that some nonzero socle vector of O_{X,p_j},
// embedded in the product, lies in the image of germ_matrix(X, i).
int point_degree(const Scheme& X, int j);
std::vector<int> point_degrees(const Scheme& X);

struct SeparatorSet {
    int j = 0;
    std::vector<Scalar> socle_dir;
    int mu = 0;     // degree of the minimal separator
    Poly minimal;   // degree mu, germ 0 off p_j and socle_dir at p_j
    Poly standard;  // x0^(r_X - mu) * minimal
};

// Separator of the maximal p_j-subscheme cut out by the socle direction. The
// one-argument form picks the unique direction of a Gorenstein component.
SeparatorSet separators_of(const Scheme& X, int j, const std::vector<Scalar>& socle_dir);
SeparatorSet separators_of(const Scheme& X, int j);

// X with component j shrunk by one socle direction; degree drops by one. A
// reduced point disappears entirely.
Scheme maximal_subscheme(const Scheme& X, int j, const std::vector<Scalar>& socle_dir);
Scheme maximal_subscheme(const Scheme& X, int j);

// Saturated prime of a K-rational point off Z(X0).
HomogIdeal point_ideal(const Ring& r, std::vector<Scalar> point);

// Socle dimension of the Artinian reduction P/(I + <x0>); 1 means the scheme
// is arithmetically Gorenstein.
int artinian_socle_dimension(const HomogIdeal& I);
bool arithmetically_gorenstein(const HomogIdeal& I);

struct SchemeReport {
    bool empty = false;
    bool components_mode = false;
    int component_count = 0;
    std::vector<int> local_dims;
    int degree = 0;
    int regularity = 0;
    int alpha = 0;            // least degree of a nonzero ideal element
    std::vector<int> hf;      // HF(0..regularity)
    std::vector<int> min_gen_degrees;
    bool arithmetically_gorenstein = false;
    int artinian_socle_dim = 0;
    bool complete_intersection = false;
    std::vector<int> ci_degrees;
    std::optional<bool> reduced;
    std::optional<bool> locally_gorenstein;
    bool saturation_applied = false;
};

SchemeReport analyze(const Scheme& X);

} // namespace zerodim

#endif
