#include "zerodim/cbp.hpp"

#include <stdexcept>

#include "zerodim/errors.hpp"

namespace zerodim {

const char* cbp_method_str(CbpMethod m) {
    switch (m) {
        case CbpMethod::colon: return "colon";
        case CbpMethod::piece: return "piece";
        case CbpMethod::separators: return "separators";
        case CbpMethod::canonical: return "canonical";
        default: return "annihilator";
    }
}

namespace {

void check_context(const Scheme& X, const LinkageTriple* t, CbpMethod m) {
    if (t == nullptr)
        throw precondition_error(std::string(cbp_method_str(m)) +
                                 " method needs a linkage triple");
    if (!t->X.ideal().equals(X.ideal()))
        throw precondition_error("linkage triple does not belong to this scheme");
}

CbpVerdict check_colon(const Scheme& X, int d, const LinkageTriple& t) {
    CbpVerdict v{d, CbpMethod::colon, Verdict::unknown, "", std::nullopt};
    int k = t.W.regularity() - d - 1;
    ColonByPiece cb = colon_by_piece(t.W.ideal(), t.Y.ideal(), k);
    if (cb.vacuous_piece) {
        v.evidence = "residual ideal has no elements of degree " + std::to_string(k);
        return v;
    }
    int lhs = cb.ideal.hilbert_function(d);
    int rhs = X.hilbert().value_at(d);
    v.verdict = lhs == rhs ? Verdict::yes : Verdict::no;
    v.evidence = "HF of the sliced colon at " + std::to_string(d) + " is " +
                 std::to_string(lhs) + ", HF_X is " + std::to_string(rhs);
    return v;
}

CbpVerdict check_piece(const Scheme& X, int d, const LinkageTriple& t) {
    CbpVerdict v{d, CbpMethod::piece, Verdict::unknown, "", std::nullopt};
    int rw = t.W.regularity();
    GradedPiece iw = ideal_piece(t.W.ideal(), rw - 1);
    GradedPiece jy = ideal_piece(t.Y.ideal(), rw - d - 1);
    GradedPiece got = piece_colon(iw, jy, d);
    GradedPiece want = ideal_piece(X.ideal(), d);
    v.verdict = pieces_equal(got, want) ? Verdict::yes : Verdict::no;
    v.evidence = "slice colon has dimension " + std::to_string(got.dim()) +
                 ", the ideal slice " + std::to_string(want.dim());
    return v;
}

CbpVerdict check_separators(const Scheme& X, int d) {
    CbpVerdict v{d, CbpMethod::separators, Verdict::yes, "", std::nullopt};
    std::vector<int> degs = point_degrees(X);
    std::string fails;
    for (std::size_t j = 0; j < degs.size(); ++j) {
        if (degs[j] < d + 1) {
            v.verdict = Verdict::no;
            if (!v.witness && X.local(static_cast<int>(j)).gorenstein())
                v.witness = separators_of(X, static_cast<int>(j)).minimal;
            if (!fails.empty()) fails += ", ";
            fails += std::to_string(j);
        }
    }
    std::string list;
    for (std::size_t j = 0; j < degs.size(); ++j) {
        if (!list.empty()) list += ",";
        list += std::to_string(degs[j]);
    }
    v.evidence = "point degrees " + list +
                 (fails.empty() ? "" : "; below " + std::to_string(d + 1) +
                                           " at components " + fails);
    return v;
}

CbpVerdict check_canonical(const Scheme& X, int d) {
    CbpVerdict v{d, CbpMethod::canonical, Verdict::unknown, "", std::nullopt};
    AnnihilatorResult ar = annihilator_is_zero(X, d);
    v.verdict = ar.zero ? Verdict::yes : Verdict::no;
    if (ar.zero) {
        v.evidence = "canonical-module piece at -" + std::to_string(d) +
                     " has trivial annihilator";
    } else {
        v.evidence = "nonzero annihilator of the canonical-module piece at -" +
                     std::to_string(d);
        v.witness = ar.witness;
    }
    return v;
}

CbpVerdict check_annihilator(const Scheme& X, int d, const LinkageTriple& t) {
    CbpVerdict v{d, CbpMethod::annihilator, Verdict::unknown, "", std::nullopt};
    int rx = X.regularity();
    int k = t.W.regularity() - d - 1;
    GradedPiece ix = ideal_piece(X.ideal(), rx + k);
    GradedPiece jy = ideal_piece(t.Y.ideal(), k);
    GradedPiece ann = piece_colon(ix, jy, rx); // contains (I_X)_{r_X}
    int extra = ann.dim() - ideal_piece(X.ideal(), rx).dim();

    bool geometric = t.geometric.verdict == Verdict::yes;
    if (extra == 0) {
        v.verdict = Verdict::yes;
        v.evidence = std::string("residual slice annihilates nothing in R_X") +
                     (geometric ? "" : " (sufficient direction only)");
        return v;
    }
    for (const Poly& f : ann.basis) {
        Poly nf = normal_form(f, X.ideal().basis());
        if (!nf.is_zero()) {
            v.witness = nf;
            break;
        }
    }
    v.verdict = geometric ? Verdict::no : Verdict::unknown;
    v.evidence = "annihilator of the residual slice has dimension " +
                 std::to_string(extra) + " in degree r_X" +
                 (geometric ? "" : "; not geometrically linked, so this does not decide CBP");
    return v;
}

} // namespace

CbpVerdict cbp_check(const Scheme& X, int d, CbpMethod method, const LinkageTriple* context) {
    if (X.is_empty()) throw precondition_error("CBP is undefined for the empty scheme");
    if (d < 0 || d > X.regularity() - 1)
        throw precondition_error("CBP degree must lie in 0..r_X-1");
    switch (method) {
        case CbpMethod::colon:
            check_context(X, context, method);
            return check_colon(X, d, *context);
        case CbpMethod::piece:
            check_context(X, context, method);
            return check_piece(X, d, *context);
        case CbpMethod::separators:
            if (!X.components_mode())
                throw precondition_error("separators method needs a scheme given by components");
            return check_separators(X, d);
        case CbpMethod::canonical:
            return check_canonical(X, d);
        default:
            check_context(X, context, method);
            return check_annihilator(X, d, *context);
    }
}

CbpAgreement cbp_agree(const Scheme& X, int d, const LinkageTriple* context) {
    CbpAgreement out;
    out.d = d;
    out.verdicts.push_back(cbp_check(X, d, CbpMethod::canonical, context));
    if (context != nullptr) {
        out.verdicts.push_back(cbp_check(X, d, CbpMethod::piece, context));
        out.verdicts.push_back(cbp_check(X, d, CbpMethod::colon, context));
    }
    if (X.components_mode())
        out.verdicts.push_back(cbp_check(X, d, CbpMethod::separators, context));
    if (context != nullptr)
        out.verdicts.push_back(cbp_check(X, d, CbpMethod::annihilator, context));

    for (const CbpVerdict& v : out.verdicts) {
        if (v.verdict == Verdict::unknown) continue;
        if (out.combined == Verdict::unknown) {
            out.combined = v.verdict;
        } else if (out.combined != v.verdict) {
            throw std::logic_error(std::string("conclusive CBP methods disagree at d = ") +
                                   std::to_string(d) + " (" + cbp_method_str(v.method) + ")");
        }
    }
    return out;
}

CbpProfile cbp_profile(const Scheme& X, const LinkageTriple* context) {
    if (X.is_empty()) throw precondition_error("CBP is undefined for the empty scheme");
    CbpProfile p;
    p.r_X = X.regularity();
    if (p.r_X == 0) {
        p.vacuous = true;
        return p;
    }
    bool seen_false = false;
    for (int d = 0; d < p.r_X; ++d) {
        p.rows.push_back(cbp_agree(X, d, context));
        Verdict v = p.rows.back().combined;
        if (v == Verdict::yes) {
            if (seen_false)
                throw std::logic_error("CBP verdicts are not monotone in d");
            p.max_d = d;
        } else {
            seen_false = true;
        }
    }
    return p;
}

CbResult is_cayley_bacharach(const Scheme& X, const LinkageTriple* context) {
    if (X.is_empty()) throw precondition_error("CBP is undefined for the empty scheme");
    CbResult res;
    if (X.regularity() == 0) {
        res.cayley_bacharach = true;
        res.vacuous = true;
        return res;
    }
    CbpAgreement a = cbp_agree(X, X.regularity() - 1, context);
    res.cayley_bacharach = a.combined == Verdict::yes;
    res.verdicts = std::move(a.verdicts);
    return res;
}

} // namespace zerodim
