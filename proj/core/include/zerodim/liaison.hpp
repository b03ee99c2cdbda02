#ifndef ZERODIM_LIAISON_HPP
#define ZERODIM_LIAISON_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "zerodim/scheme.hpp"

namespace zerodim {

enum class Verdict { yes, no, unknown };
const char* verdict_str(Verdict v);

// Y with I_Y = I_W : I_X. Requires W arithmetically Gorenstein and X a
// subscheme of W; the result is saturated automatically and comes back in raw
// mode.
Scheme residual(const Scheme& W, const Scheme& X);

struct GeometricCheck {
    Verdict verdict = Verdict::unknown;
    std::string evidence;
};

// Disjoint supports, decided by probing whichever side carries components and
// then confirming intersect(I_X, I_Y) = I_W. With components on neither side
// the verdict is unknown.
GeometricCheck is_geometrically_linked(const Scheme& X, const Scheme& Y, const Scheme& W);

struct LinkageTriple {
    Scheme W;
    Scheme X;
    Scheme Y;
    int alpha_X = -1; // initial degree of I_X / I_W; -1 when X = W
    int alpha_Y = -1;
    GeometricCheck geometric;
};

LinkageTriple make_linkage(const Scheme& W, const Scheme& X);

// Exact verification of the linkage identities: degree additivity, the two
// regularity decompositions r_W = r_X + alpha_Y = r_Y + alpha_X, and the
// reflection HF_W(i) - HF_Y(i) = deg(X) - HF_X(r_W - i - 1) at every degree.
struct LinkageReport {
    int deg_W = 0, deg_X = 0, deg_Y = 0;
    bool degree_additive = false;
    int r_W = 0, r_X = 0, r_Y = 0;
    int alpha_X = -1, alpha_Y = -1;
    bool regularity_decompositions = false;
    bool hf_reflection = false;
    std::vector<int> hf_reflection_failures; // degrees where it fails
    bool degenerate = false; // X or Y empty: alpha identities do not apply
    Verdict geometric = Verdict::unknown;
    std::string geometric_evidence;
    bool all_pass = false;
};

LinkageReport linkage_report(const LinkageTriple& t);

// Shrinking X by one socle direction at p_j must grow the residual by one at
// the same point and leave it untouched elsewhere.
struct CorrespondenceCheck {
    Scheme X_sub;      // maximal p_j-subscheme of X
    Scheme Y_aug;      // residual(W, X_sub)
    bool degree_step = false;     // deg Y_aug = deg Y + 1
    bool contains_Y = false;      // I_{Y_aug} within I_Y
    bool away_parts_equal = false; // saturations at p_j agree
    bool multiplicity_step = false; // local multiplicity at p_j grew by one
    bool all_pass = false;
};

CorrespondenceCheck residual_correspondence(const LinkageTriple& t, int j,
                                            const std::vector<Scalar>& socle_dir);
CorrespondenceCheck residual_correspondence(const LinkageTriple& t, int j);

// Random complete intersection W containing X, drawn from the degree-d_k
// slices of I_X with coefficients in {-50..50} (uniform residues over F_p).
// Retries until the forms cut out a zero-dimensional CI that links X
// geometrically, unless require_geometric is off.
struct EnvelopeResult {
    LinkageTriple triple;
    std::vector<int> degrees;
    int attempts = 0;
    std::uint64_t seed = 0;
};

EnvelopeResult ci_envelope(const Scheme& X, std::uint64_t seed,
                           std::vector<int> degrees = {},
                           bool require_geometric = true, int max_attempts = 32);

} // namespace zerodim

#endif
