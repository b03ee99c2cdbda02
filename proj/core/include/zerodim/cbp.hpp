#ifndef ZERODIM_CBP_HPP
#define ZERODIM_CBP_HPP

#include <optional>
#include <string>
#include <vector>

#include "zerodim/canonical.hpp"
#include "zerodim/liaison.hpp"

namespace zerodim {

// CBP(d): every subscheme of colength one has the same Hilbert function as X
// in degree d. Decided by independent routes that must agree whenever they
// are conclusive.
enum class CbpMethod { colon, piece, separators, canonical, annihilator };
const char* cbp_method_str(CbpMethod m);

struct CbpVerdict {
    int d = 0;
    CbpMethod method = CbpMethod::canonical;
    Verdict verdict = Verdict::unknown;
    std::string evidence;
    std::optional<Poly> witness;
};

// Decide CBP(d) by one method. colon, piece and annihilator need a linkage
// triple whose X matches; separators needs components. The annihilator route
// is only a sufficient criterion unless the triple is geometrically linked,
// so a failed test reports unknown in that case.
CbpVerdict cbp_check(const Scheme& X, int d, CbpMethod method,
                     const LinkageTriple* context = nullptr);

// Run every applicable method and cross-check: conclusive verdicts that
// disagree raise an error rather than a report.
struct CbpAgreement {
    int d = 0;
    std::vector<CbpVerdict> verdicts;
    Verdict combined = Verdict::unknown;
};

CbpAgreement cbp_agree(const Scheme& X, int d, const LinkageTriple* context = nullptr);

// Verdicts for every d in 0..r_X-1 plus the largest d with CBP(d).
// Monotonicity (CBP(d) implies CBP(d-1)) is enforced.
struct CbpProfile {
    int r_X = 0;
    bool vacuous = false; // r_X = 0: no degrees to test
    int max_d = -1;
    std::vector<CbpAgreement> rows;
};

CbpProfile cbp_profile(const Scheme& X, const LinkageTriple* context = nullptr);

// CBP(r_X - 1), the strongest level; single-point schemes count vacuously.
struct CbResult {
    bool cayley_bacharach = false;
    bool vacuous = false;
    std::vector<CbpVerdict> verdicts;
};

CbResult is_cayley_bacharach(const Scheme& X, const LinkageTriple* context = nullptr);

} // namespace zerodim

#endif
