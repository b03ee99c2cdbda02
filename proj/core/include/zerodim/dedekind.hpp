#ifndef ZERODIM_DEDEKIND_HPP
#define ZERODIM_DEDEKIND_HPP

#include <cstdint>
#include <vector>

#include "zerodim/cbp.hpp"
#include "zerodim/scheme.hpp"

namespace zerodim {

// Trace functional on one local algebra whose bilinear form tau(ab) is
// nondegenerate; exists iff the algebra is Gorenstein, so an invertible Gram
// matrix doubles as a certificate.
struct LocalTrace {
    std::vector<Scalar> row; // values on the algebra basis
    int attempts = 0;
};

LocalTrace local_trace(const LocalAlgebra& A, std::uint64_t seed, int max_attempts = 16);

// Global trace on the coordinate algebra A_X = (R_X)_{r_X} (with products
// divided back by x0 powers). Built from per-component traces when components
// are available; drawn directly and certified by the global Gram matrix in
// raw mode. The certificate also proves X locally Gorenstein, which is what
// lets raw schemes through.
struct TraceMap {
    std::vector<Scalar> row; // values on the standard monomials of degree r_X
    std::uint64_t seed = 0;
    int attempts = 0;
    bool per_component = false;
};

TraceMap scheme_trace(const Scheme& X, std::uint64_t seed, int max_attempts = 16);

// Degree-t piece of the complementary module: vectors v of A_X with
// tau(v * germ(f)) = 0 for every f of degree < -t. Columns are basis vectors;
// the dimension always comes out as deg(X) - HF_X(-t-1).
Matrix complementary_piece(const Scheme& X, const TraceMap& trace, int t);

struct ComplementaryModule {
    std::vector<Matrix> pieces; // t = -r_X..0, index t + r_X
    std::vector<int> dims;
};

ComplementaryModule complementary_module(const Scheme& X, const TraceMap& trace);

// Graded pieces of the different delta = {f : f * C subset of R_X inside the
// homogeneous quotient ring}, computed for i = 0..2r_X; the complementary
// pieces of degrees -r_X..0 generate, so those are the only constraints.
struct DedekindReport {
    int r_X = 0;
    int degree = 0;
    std::vector<int> hf_delta; // i = 0..2r_X
    int alpha_delta = -1;      // least i with a nonzero piece
    int ri_delta = 0;          // least i from which HF_delta is deg(X)
    std::vector<int> hf_c;     // t = -r_X..0
    bool hf_c_formula = false; // dims match deg(X) - HF_X(-t-1)
    bool top_is_full = false;  // HF_delta(2 r_X) = deg(X), i.e. x0^{2r_X} lies in delta
    bool monotone = false;
    bool ri_bounds = false; // r_X <= ri <= 2r_X
    std::uint64_t seed = 0;
    bool per_component_trace = false;
};

DedekindReport dedekind_different(const Scheme& X, const TraceMap& trace);
DedekindReport dedekind_different(const Scheme& X, std::uint64_t seed);

// The different against the CBP profile: degree bounds, the i0 threshold and
// the regularity-index formula, and the arithmetically-Gorenstein equality.
struct DedekindChecks {
    int d = -1;                 // largest CBP degree used; -1 when vacuous
    bool applicable = false;    // false for single-point (r_X = 0) schemes
    bool alpha_lower = false;   // alpha_delta >= d+1
    bool degreewise_bound = false; // HF_delta(i) <= HF_X(i-d-1)
    int i0 = -1;                // least i with HF_delta(i) = HF_X(i-d-1) > 0
    bool persistent_equality = false; // equality holds from i0 on
    bool ri_formula = false;    // ri_delta = max{i0, r_X+d+1}
    bool ag = false;
    bool ag_equality = false;   // HF_delta(i) = HF_X(i-r_X) degreewise
    bool ag_iff_checked = false; // only meaningful for Cayley-Bacharach schemes
    bool ag_iff_equality = false;
    bool small_field_warning = false;
    bool all_pass = false;
};

DedekindChecks dedekind_checks(const Scheme& X, const DedekindReport& rep,
                               const CbpProfile& profile);

} // namespace zerodim

#endif
