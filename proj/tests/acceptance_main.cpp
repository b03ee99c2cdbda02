// Acceptance suite: eight end-to-end criteria, one line of output each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cstdio>
#include <exception>
#include <random>
#include <string>
#include <vector>

#include <zerodim/cbp.hpp>
#include <zerodim/dedekind.hpp>
#include <zerodim/idealops.hpp>
#include <zerodim/liaison.hpp>

#include "golden.hpp"
#include "oracle.hpp"

using namespace zerodim;

namespace {

struct PoolEntry {
    oracle::Instance inst;
    EnvelopeResult env;
    LinkageReport rep;
    CbpProfile prof;
};

// shared corpus of randomly generated, CI-enveloped instances (criterion 4
// builds it, criteria 5-8 reuse it)
std::vector<PoolEntry> pool;

std::string fail(const std::string& what) { return what; }

bool conclusive(Verdict v) { return v == Verdict::yes || v == Verdict::no; }

std::string check_hf(const Scheme& X, const std::vector<int>& expect) {
    if (X.hilbert().values != expect) return "unexpected Hilbert function";
    return "";
}

// criterion 1: the degree-9 ambient complete intersection with two double
// points, linked against the degree-5 subscheme keeping one of them
std::string crit_worked_example() {
    Scheme W = golden::W_components();
    if (W.degree() != 9 || W.regularity() != 4) return fail("ambient degree/regularity");
    if (auto e = check_hf(W, golden::w_hf()); !e.empty()) return fail("ambient " + e);
    if (W.component_count() != 7) return fail("ambient component count");
    std::vector<int> dims;
    for (int j = 0; j < 7; ++j) dims.push_back(W.local(j).dimension());
    if (dims != std::vector<int>{1, 1, 1, 1, 2, 1, 2}) return fail("ambient local dimensions");
    if (!arithmetically_gorenstein(W.ideal())) return fail("ambient not AG");

    Scheme X = golden::X_deg5();
    if (X.degree() != 5 || X.regularity() != 2) return fail("X degree/regularity");
    LinkageTriple t = make_linkage(W, X);
    LinkageReport rep = linkage_report(t);
    if (t.Y.degree() != 4 || t.Y.regularity() != 2 || rep.alpha_Y != 2)
        return fail("residual invariants");
    if (!rep.all_pass) return fail("linkage identities");
    if (rep.geometric != Verdict::yes) return fail("geometric linkage not certified");

    Poly H = golden::nzd_witness();
    if (!t.Y.ideal().contains(H)) return fail("witness outside the residual ideal");
    for (int j = 0; j < X.component_count(); ++j)
        if (H.evaluate(X.support_point(j)).is_zero()) return fail("witness vanishes on X");

    CbpProfile prof = cbp_profile(X, &t);
    if (prof.max_d != X.regularity() - 1) return fail("X not Cayley-Bacharach");
    for (const CbpAgreement& row : prof.rows) {
        if (row.verdicts.size() != 5) return fail("a CBP method was not applicable");
        for (const CbpVerdict& v : row.verdicts)
            if (v.verdict != Verdict::yes) return fail("a CBP method dissented");
    }
    return "";
}

// criterion 2: the reduced variant, a CI(2,2) whose link inside the same
// ambient scheme is not geometric
std::string crit_reduced_variant() {
    Scheme W = golden::W_components();
    Scheme Xp = golden::X_ci22();
    SchemeReport rep = analyze(Xp);
    if (!rep.complete_intersection || rep.ci_degrees != std::vector<int>{2, 2})
        return fail("CI(2,2) flag");
    if (!rep.reduced || !*rep.reduced) return fail("reducedness flag");

    LinkageTriple t = make_linkage(W, Xp);
    if (t.geometric.verdict != Verdict::no) return fail("link unexpectedly geometric");
    if (t.geometric.evidence.find("(1 : 2 : 0)") == std::string::npos)
        return fail("shared point not reported");
    HomogIdeal expected(Xp.ring(), golden::yprime_gens());
    if (!t.Y.ideal().equals(expected)) return fail("residual generators");

    CbpProfile prof = cbp_profile(Xp, &t);
    if (prof.max_d != Xp.regularity() - 1) return fail("X' not Cayley-Bacharach");
    CbpVerdict ann = cbp_check(Xp, 1, CbpMethod::annihilator, &t);
    if (ann.verdict != Verdict::unknown) return fail("annihilator route should be inconclusive");
    if (ann.evidence.find("annihilator of the residual slice has dimension") == std::string::npos)
        return fail("nonzero annihilator not reported");

    SeparatorSet sep = separators_of(Xp, 3);
    if (sep.mu != 2) return fail("separator degree at the shared point");
    Poly want = normal_form(golden::separator_at_shared_point(), Xp.ideal().basis());
    Poly got = normal_form(sep.minimal, Xp.ideal().basis());
    if (want.monic() != got.monic()) return fail("minimal separator");
    return "";
}

// criterion 3: a raw non-reduced quartic handled by the canonical-module
// method alone
std::string crit_raw_quartic() {
    Scheme q = golden::quartic();
    if (q.degree() != 4 || q.regularity() != 3) return fail("degree/regularity");
    if (auto e = check_hf(q, golden::quartic_hf()); !e.empty()) return fail(e);
    if (q.hilbert().value_at(4) != 4) return fail("eventual Hilbert value");
    if (!analyze(q).arithmetically_gorenstein) return fail("principal ideal not AG");

    CbpProfile prof = cbp_profile(q, nullptr);
    if (prof.vacuous) return fail("profile vacuous");
    for (const CbpAgreement& row : prof.rows) {
        if (row.verdicts.size() != 1 || row.verdicts[0].method != CbpMethod::canonical)
            return fail("raw scheme should only admit the canonical method");
        if (row.verdicts[0].verdict != Verdict::yes) return fail("canonical method dissented");
    }
    if (prof.max_d != 2) return fail("profile should reach d = 2");
    return "";
}

// criterion 4: random instances of 4..10 plane points, reduced and with one
// curvilinear double point, over Q and F_32003, each enveloped in a random
// complete intersection; every applicable method must coincide at every d
std::string crit_random_agreement() {
    pool.clear();
    const int count = 52;
    for (int i = 0; i < count; ++i) {
        Field k = (i % 2 == 0) ? Field::Q() : Field::Fp(32003);
        auto thick = ((i / 2) % 2 == 0) ? oracle::Thickening::none
                                        : oracle::Thickening::curvilinear;
        int npoints = 4 + (i * 3) % 7;
        std::mt19937_64 rng(7100 + i);
        oracle::Instance inst = oracle::random_plane_instance(k, rng, npoints, thick);
        EnvelopeResult env = ci_envelope(inst.scheme, 300 + i);
        LinkageReport rep = linkage_report(env.triple);
        if (rep.degenerate) {
            // X was itself a complete intersection of the default degrees;
            // enlarge the envelope so the residual is nonempty
            std::vector<int> degs = env.degrees;
            degs.back() += 1;
            env = ci_envelope(inst.scheme, 300 + i, degs);
            rep = linkage_report(env.triple);
        }
        CbpProfile prof = cbp_profile(env.triple.X, &env.triple);
        pool.push_back({std::move(inst), std::move(env), std::move(rep), std::move(prof)});
    }

    for (const PoolEntry& e : pool) {
        if (e.prof.vacuous) return fail("vacuous profile in the pool");
        if (static_cast<int>(e.prof.rows.size()) != e.prof.r_X)
            return fail("profile does not cover 0..r_X-1");
        bool geometric = e.env.triple.geometric.verdict == Verdict::yes;
        if (!geometric) return fail("envelope link not geometric");
        for (const CbpAgreement& row : e.prof.rows) {
            if (row.verdicts.size() != 5) return fail("missing method");
            if (!conclusive(row.combined)) return fail("inconclusive combined verdict");
            for (const CbpVerdict& v : row.verdicts) {
                if (v.method == CbpMethod::annihilator && !geometric) continue;
                if (!conclusive(v.verdict)) return fail("inconclusive method verdict");
                if (v.verdict != row.combined)
                    return fail(std::string("disagreement by ") + cbp_method_str(v.method));
            }
        }
    }
    if (static_cast<int>(pool.size()) < 50) return fail("fewer than 50 instances");
    return "";
}

// criterion 5: degree additivity, both regularity decompositions, the Hilbert
// function reflection, the x0-free colon identity in every degree and
// idempotence of the residual on every triple from criterion 4
std::string crit_liaison_identities() {
    if (pool.size() < 50) return fail("instance pool missing");
    for (const PoolEntry& e : pool) {
        const LinkageReport& rep = e.rep;
        if (rep.degenerate) return fail("degenerate link in pool");
        if (!rep.degree_additive) return fail("degree additivity");
        if (!rep.regularity_decompositions) return fail("regularity decompositions");
        if (!rep.hf_reflection) return fail("Hilbert function reflection");
        if (!rep.all_pass) return fail("linkage report flag");

        const Scheme& W = e.env.triple.W;
        const Scheme& X = e.env.triple.X;
        const Scheme& Y = e.env.triple.Y;
        GradedPiece top = ideal_piece(W.ideal(), rep.r_W, true);
        for (int d = 1; d <= rep.r_X; ++d) {
            GradedPiece jy = ideal_piece(Y.ideal(), rep.alpha_Y + rep.r_X - d, true);
            GradedPiece lhs = piece_colon(top, jy, d);
            GradedPiece rhs = ideal_piece(X.ideal(), d, true);
            if (!pieces_equal(lhs, rhs)) return fail("colon identity at d=" + std::to_string(d));
        }
        Scheme X2 = residual(W, Y);
        if (!X2.ideal().equals(X.ideal())) return fail("double residual");
    }
    return "";
}

// criterion 6: canonical-module piece dimensions, surjectivity of the lifts
// by dimension count, and the annihilator degree reduction cross-checked one
// degree up and down
std::string crit_canonical_module() {
    if (pool.size() < 50) return fail("instance pool missing");
    int cross_checked = 0;
    for (std::size_t idx = 0; idx < pool.size(); ++idx) {
        const Scheme& X = pool[idx].env.triple.X;
        const HilbertData& hd = X.hilbert();
        int r = X.regularity();
        CanonicalModule cm(X);
        for (int d = 0; d <= r; ++d)
            if (static_cast<int>(cm.piece(d).size()) != X.degree() - hd.value_at(d))
                return fail("piece dimension at d=" + std::to_string(d));
        for (int d = 0; d < r; ++d) {
            std::vector<OmegaElement> w = cm.piece(d);
            std::vector<Monomial> mons = X.ideal().standard_monomials(d + 1);
            Matrix pairing(static_cast<int>(w.size()), static_cast<int>(mons.size()),
                           X.ring().field);
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = 0; j < mons.size(); ++j)
                    pairing.at(static_cast<int>(i), static_cast<int>(j)) =
                        cm.pair(w[i], Poly::term(X.ring(), mons[j], Scalar::one(X.ring().field)));
            if (pairing.rank() != hd.value_at(d + 1) - hd.value_at(d))
                return fail("lift not surjective at d=" + std::to_string(d));
        }
        if (idx < 12) {
            for (int d = 0; d < r; ++d) {
                AnnihilatorResult main = annihilator_is_zero(X, d);
                if (main.tested_degree != r) return fail("unexpected test degree");
                AnnihilatorResult up = annihilator_at_degree(X, d, r + 1);
                if (up.zero != main.zero) return fail("annihilator differs at r+1");
                AnnihilatorResult down = annihilator_at_degree(X, d, r - 1);
                if (!down.zero && main.zero) return fail("annihilator shrinks at r-1");
            }
            ++cross_checked;
        }
    }
    if (cross_checked < 10) return fail("fewer than 10 cross-checked instances");
    return "";
}

// criterion 7: Dedekind different tables with the complementary-module
// formula, the regularity-index bounds and formula, and the arithmetically
// Gorenstein equivalence on every pooled instance plus the CI(2,2) golden
std::string crit_dedekind_tables() {
    if (pool.size() < 50) return fail("instance pool missing");
    for (std::size_t i = 0; i < pool.size(); ++i) {
        const Scheme& X = pool[i].env.triple.X;
        DedekindReport rep = dedekind_different(X, 900 + i);
        if (!rep.hf_c_formula) return fail("complementary module formula");
        if (!rep.monotone || !rep.top_is_full) return fail("different table shape");
        if (!rep.ri_bounds) return fail("regularity index bounds");
        DedekindChecks ck = dedekind_checks(X, rep, pool[i].prof);
        if (!ck.applicable || !ck.all_pass) return fail("profile comparison");
        bool cb = pool[i].prof.max_d == pool[i].prof.r_X - 1;
        if (cb && !ck.ri_formula) return fail("regularity index formula");
        if (cb && rep.ri_delta != 2 * rep.r_X) return fail("ri != 2 r_X on a CB instance");
        if (ck.ag_iff_checked && !ck.ag_iff_equality) return fail("AG equivalence");
    }
    DedekindReport golden_rep = dedekind_different(golden::X_ci22(), 42);
    if (golden_rep.hf_delta != golden::xp_hf_delta()) return fail("CI(2,2) golden table");
    return "";
}

// criterion 8: Hilbert functions and ideal slices from the Groebner pipeline
// against a dense linear-algebra oracle that never forms S-pairs
std::string crit_dense_oracle() {
    if (pool.size() < 50) return fail("instance pool missing");
    std::vector<Scheme> schemes = {golden::W_raw(), golden::W_components(), golden::X_deg5(),
                                   golden::X_ci22(), golden::quartic()};
    for (std::size_t i = 0; i < 20; ++i) schemes.push_back(pool[i].env.triple.X);
    int compared = 0;
    for (const Scheme& X : schemes) {
        if (X.degree() > 12) return fail("instance too large for the oracle");
        const HomogIdeal& I = X.ideal();
        const std::vector<Poly>& gens = I.generators();
        int cap = std::min(X.regularity() + 2, 12);
        for (int d = 0; d <= cap; ++d) {
            if (I.hilbert_data().value_at(d) != oracle::dense_hf(X.ring(), gens, d))
                return fail("Hilbert value differs at d=" + std::to_string(d));
            if (static_cast<int>(I.piece(d).size()) !=
                oracle::dense_piece_dim(X.ring(), gens, d))
                return fail("slice dimension differs at d=" + std::to_string(d));
        }
        ++compared;
    }
    if (compared < 20) return fail("fewer than 20 instances compared");
    return "";
}

struct Criterion {
    const char* name;
    std::string (*run)();
    double limit_seconds; // 0 = no limit
};

} // namespace

int main() {
    const Criterion criteria[] = {
        {"worked example: degree-9 ambient, double-point subscheme, five-method CBP",
         crit_worked_example, 5.0},
        {"reduced CI(2,2) variant: residual generators, non-geometric link, separator",
         crit_reduced_variant, 5.0},
        {"raw quartic on a line: Hilbert data and canonical-method profile",
         crit_raw_quartic, 0.0},
        {"random enveloped instances: independent CBP methods coincide",
         crit_random_agreement, 120.0},
        {"liaison identities on every generated triple", crit_liaison_identities, 0.0},
        {"canonical module: piece dimensions, lifts, annihilator degrees",
         crit_canonical_module, 0.0},
        {"Dedekind different tables and bounds on every instance", crit_dedekind_tables, 0.0},
        {"Groebner Hilbert data against the dense oracle", crit_dense_oracle, 0.0},
    };

    int failures = 0;
    int idx = 0;
    for (const Criterion& c : criteria) {
        ++idx;
        auto start = std::chrono::steady_clock::now();
        std::string err;
        try {
            err = c.run();
        } catch (const std::exception& e) {
            err = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (err.empty() && c.limit_seconds > 0 && secs > c.limit_seconds)
            err = "time limit exceeded";
        if (!err.empty()) ++failures;
        std::printf("%s [%d] %s (%.2fs)%s%s\n", err.empty() ? "PASS" : "FAIL", idx, c.name,
                    secs, err.empty() ? "" : ": ", err.c_str());
        std::fflush(stdout);
    }
    return failures;
}
