#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zerodim/scheme_io.hpp"

using namespace zerodim;

namespace {

struct CommonOpts {
    std::string field;
    std::string format = "text";
    std::uint64_t seed = 1;
    int cap = -1;

    bool json() const { return format == "json"; }
    std::optional<Field> field_override() const {
        if (field.empty()) return std::nullopt;
        if (field == "Q") return Field::Q();
        if (field.rfind("Fp:", 0) == 0) {
            try {
                return Field::Fp(std::stoull(field.substr(3)));
            } catch (const std::exception&) {
                throw validation_error("--field must be Q or Fp:<p>");
            }
        }
        throw validation_error("--field must be Q or Fp:<p>");
    }
};

void emit(const CommonOpts& o, const Json& j, const std::function<void()>& text) {
    if (o.json())
        std::cout << j.dump(2) << "\n";
    else
        text();
}

std::string point_text(const std::vector<Scalar>& p) {
    std::string s = "(";
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (k) s += " : ";
        s += p[k].str();
    }
    return s + ")";
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string opt_text(const std::optional<bool>& v) {
    return v ? yesno(*v) : std::string("unknown");
}

void print_scheme_report(const SchemeReport& rep, int cap) {
    if (rep.empty) {
        std::cout << "empty scheme\n" << "deg: 0\n";
        return;
    }
    std::cout << "mode: " << (rep.components_mode ? "components" : "raw");
    if (rep.components_mode) {
        std::cout << " (" << rep.component_count << " components, local dims";
        for (int d : rep.local_dims) std::cout << ' ' << d;
        std::cout << ")";
    }
    std::cout << "\n";
    std::cout << "deg: " << rep.degree << "\n";
    std::cout << "regularity: " << rep.regularity << "\n";
    std::cout << "alpha: " << rep.alpha << "\n";
    std::vector<int> hf = rep.hf;
    for (int i = rep.regularity + 1; i <= cap; ++i) hf.push_back(rep.degree);
    std::cout << "HF: " << hf_text(hf) << "\n";
    std::cout << "minimal generator degrees:";
    for (int d : rep.min_gen_degrees) std::cout << ' ' << d;
    std::cout << "\n";
    std::cout << "arithmetically Gorenstein: " << yesno(rep.arithmetically_gorenstein)
              << " (Artinian socle dim " << rep.artinian_socle_dim << ")\n";
    std::cout << "complete intersection: " << yesno(rep.complete_intersection);
    if (rep.complete_intersection) {
        std::cout << " of type";
        for (int d : rep.ci_degrees) std::cout << ' ' << d;
    }
    std::cout << "\n";
    std::cout << "reduced: " << opt_text(rep.reduced)
              << ", locally Gorenstein: " << opt_text(rep.locally_gorenstein) << "\n";
    if (rep.saturation_applied) std::cout << "note: input ideal was not saturated; saturation applied\n";
}

void print_linkage_report(const LinkageReport& rep) {
    std::cout << "deg: W " << rep.deg_W << " = X " << rep.deg_X << " + Y " << rep.deg_Y
              << (rep.degree_additive ? "" : "  MISMATCH") << "\n";
    std::cout << "regularity: r_W " << rep.r_W << ", r_X " << rep.r_X << ", r_Y " << rep.r_Y
              << ", alpha_X " << rep.alpha_X << ", alpha_Y " << rep.alpha_Y << "\n";
    std::cout << "r_W = r_X + alpha_Y = r_Y + alpha_X: "
              << (rep.degenerate ? "n/a" : yesno(rep.regularity_decompositions)) << "\n";
    std::cout << "HF reflection HF_W(i) - HF_Y(i) = deg X - HF_X(r_W-i-1): "
              << yesno(rep.hf_reflection) << "\n";
    if (rep.degenerate) std::cout << "degenerate link (X or Y empty)\n";
    std::cout << "geometrically linked: " << verdict_str(rep.geometric) << " ("
              << rep.geometric_evidence << ")\n";
    std::cout << "all identities pass: " << yesno(rep.all_pass) << "\n";
}

void print_agreement(const CbpAgreement& a) {
    std::cout << "d=" << a.d << " combined: " << verdict_str(a.combined) << "\n";
    for (const CbpVerdict& v : a.verdicts) {
        std::cout << "  " << cbp_method_str(v.method) << ": " << verdict_str(v.verdict)
                  << "  [" << v.evidence << "]";
        if (v.witness) std::cout << " witness: " << v.witness->str();
        std::cout << "\n";
    }
}

void print_dedekind(const DedekindReport& rep, const DedekindChecks& ck) {
    std::cout << "HF_delta: " << hf_text(rep.hf_delta) << "\n";
    std::cout << "alpha_delta: " << rep.alpha_delta << ", ri_delta: " << rep.ri_delta
              << " (bounds r_X <= ri <= 2r_X: " << yesno(rep.ri_bounds) << ")\n";
    std::cout << "HF of complementary module (t = -r_X..0): " << hf_text(rep.hf_c)
              << ", formula deg - HF(-t-1): " << yesno(rep.hf_c_formula) << "\n";
    std::cout << "x0^(2 r_X) in delta: " << yesno(rep.top_is_full)
              << ", monotone: " << yesno(rep.monotone) << "\n";
    std::cout << "trace seed: " << rep.seed
              << (rep.per_component_trace ? " (per-component)" : " (global, certified)") << "\n";
    if (!ck.applicable) {
        std::cout << "CBP comparison: not applicable\n";
        return;
    }
    std::cout << "largest CBP degree d: " << ck.d << "\n";
    std::cout << "alpha_delta >= d+1: " << yesno(ck.alpha_lower) << "\n";
    std::cout << "HF_delta(i) <= HF_X(i-d-1): " << yesno(ck.degreewise_bound) << "\n";
    std::cout << "first equality degree i0: " << ck.i0
              << ", persistent: " << yesno(ck.persistent_equality) << "\n";
    std::cout << "ri_delta = max(i0, r_X+d+1): " << yesno(ck.ri_formula) << "\n";
    std::cout << "arithmetically Gorenstein: " << yesno(ck.ag) << ", HF_delta = HF_X shifted by r_X: "
              << yesno(ck.ag_equality);
    if (ck.ag_iff_checked) std::cout << " (equivalence verified)";
    std::cout << "\n";
    if (ck.small_field_warning)
        std::cout << "warning: finite coefficient field; separator-based bounds assume an infinite field\n";
    std::cout << "all checks pass: " << yesno(ck.all_pass) << "\n";
}

int run_selftest(const std::string& datadir);

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact analysis of zero-dimensional subschemes of P^n: Hilbert functions, "
                 "liaison, Cayley-Bacharach properties, Dedekind differents"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--field", opts.field, "coefficient field override: Q or Fp:<p>");
    app.add_option("--format", opts.format, "output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", opts.seed, "seed for randomized constructions");
    app.add_option("--cap", opts.cap, "extend printed HF tables up to this degree");

    std::string path, ambient, datadir = "data";
    int d = -1, component = -1;
    std::string method;
    std::vector<int> degrees;
    bool no_geometric = false;

    auto add_scheme_arg = [&](CLI::App* cmd) {
        cmd->add_option("scheme", path, "scheme JSON file")->required();
        cmd->fallthrough();
    };

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "degree, Hilbert function, regularity, AG/CI flags");
    add_scheme_arg(analyze_cmd);
    analyze_cmd->callback([&] {
        Scheme X = load_scheme(path, opts.field_override());
        SchemeReport rep = analyze(X);
        emit(opts, to_json(rep), [&] { print_scheme_report(rep, opts.cap); });
    });

    CLI::App* residual_cmd = app.add_subcommand("residual", "residual scheme Y with I_Y = I_W : I_X, plus the linkage report");
    residual_cmd->add_option("-w,--ambient", ambient, "arithmetically Gorenstein ambient scheme")->required();
    add_scheme_arg(residual_cmd);
    residual_cmd->callback([&] {
        Scheme W = load_scheme(ambient, opts.field_override());
        Scheme X = load_scheme(path, opts.field_override());
        LinkageTriple t = make_linkage(W, X);
        LinkageReport rep = linkage_report(t);
        Json j;
        j["Y"] = scheme_to_json(t.Y);
        j["Y_hf"] = t.Y.is_empty() ? std::vector<int>{} : t.Y.hilbert().values;
        j["report"] = to_json(rep);
        emit(opts, j, [&] {
            if (t.Y.is_empty()) {
                std::cout << "Y: empty scheme\ndeg: 0\n";
            } else {
                std::cout << "Y generators:\n";
                for (const Poly& g : t.Y.ideal().generators())
                    std::cout << "  " << g.str() << "\n";
                std::cout << "Y HF: " << hf_text(t.Y.hilbert().values) << "\n";
            }
            print_linkage_report(rep);
        });
    });

    CLI::App* link_cmd = app.add_subcommand("link-report", "liaison identities for W, X and the residual");
    link_cmd->add_option("-w,--ambient", ambient)->required();
    add_scheme_arg(link_cmd);
    link_cmd->callback([&] {
        Scheme W = load_scheme(ambient, opts.field_override());
        Scheme X = load_scheme(path, opts.field_override());
        LinkageReport rep = linkage_report(make_linkage(W, X));
        emit(opts, to_json(rep), [&] { print_linkage_report(rep); });
    });

    CLI::App* cbp_cmd = app.add_subcommand("cbp", "Cayley-Bacharach property CBP(d) by independent methods");
    cbp_cmd->add_option("-w,--ambient", ambient, "enveloping AG scheme enabling the colon/piece/annihilator methods");
    cbp_cmd->add_option("-d,--degree", d, "single degree to test (default: full profile)");
    cbp_cmd->add_option("--method", method, "single method")
        ->check(CLI::IsMember({"colon", "piece", "separators", "canonical", "annihilator"}));
    add_scheme_arg(cbp_cmd);
    cbp_cmd->callback([&] {
        Scheme X = load_scheme(path, opts.field_override());
        std::optional<LinkageTriple> t;
        if (!ambient.empty()) t = make_linkage(load_scheme(ambient, opts.field_override()), X);
        const LinkageTriple* ctx = t ? &*t : nullptr;
        if (!method.empty()) {
            if (d < 0) throw validation_error("--method needs -d");
            CbpMethod m = method == "colon"        ? CbpMethod::colon
                          : method == "piece"      ? CbpMethod::piece
                          : method == "separators" ? CbpMethod::separators
                          : method == "canonical"  ? CbpMethod::canonical
                                                   : CbpMethod::annihilator;
            CbpVerdict v = cbp_check(X, d, m, ctx);
            emit(opts, to_json(v), [&] {
                std::cout << "CBP(" << v.d << ") by " << cbp_method_str(v.method) << ": "
                          << verdict_str(v.verdict) << "  [" << v.evidence << "]\n";
                if (v.witness) std::cout << "witness: " << v.witness->str() << "\n";
            });
            return;
        }
        if (d >= 0) {
            CbpAgreement a = cbp_agree(X, d, ctx);
            emit(opts, to_json(a), [&] { print_agreement(a); });
            return;
        }
        CbpProfile prof = cbp_profile(X, ctx);
        emit(opts, to_json(prof), [&] {
            if (prof.vacuous) {
                std::cout << "r_X = 0: CBP is vacuous\n";
                return;
            }
            for (const CbpAgreement& a : prof.rows) print_agreement(a);
            std::cout << "largest d with CBP(d): " << prof.max_d << "\n";
            std::cout << "Cayley-Bacharach scheme: " << yesno(prof.max_d == prof.r_X - 1) << "\n";
        });
    });

    CLI::App* sep_cmd = app.add_subcommand("separators", "minimal and standard separators of maximal subschemes");
    sep_cmd->add_option("-j,--component", component, "single component index");
    add_scheme_arg(sep_cmd);
    sep_cmd->callback([&] {
        Scheme X = load_scheme(path, opts.field_override());
        std::vector<int> js;
        if (component >= 0)
            js.push_back(component);
        else
            for (int j = 0; j < X.component_count(); ++j) js.push_back(j);
        Json arr = Json::array();
        std::vector<SeparatorSet> seps;
        for (int j : js) {
            seps.push_back(separators_of(X, j));
            arr.push_back(to_json(seps.back()));
        }
        emit(opts, arr, [&] {
            for (const SeparatorSet& s : seps) {
                std::cout << "component " << s.j << " at " << point_text(X.support_point(s.j))
                          << ": mu = " << s.mu << "\n";
                std::cout << "  minimal:  " << s.minimal.str() << "\n";
                std::cout << "  standard: " << s.standard.str() << "\n";
            }
        });
    });

    CLI::App* pd_cmd = app.add_subcommand("point-degrees", "deg_X(p_j) for every support point");
    add_scheme_arg(pd_cmd);
    pd_cmd->callback([&] {
        Scheme X = load_scheme(path, opts.field_override());
        std::vector<int> degs = point_degrees(X);
        Json j;
        j["degrees"] = degs;
        emit(opts, j, [&] {
            for (int k = 0; k < X.component_count(); ++k)
                std::cout << k << ": " << point_text(X.support_point(k)) << " degree " << degs[k]
                          << "\n";
        });
    });

    CLI::App* ded_cmd = app.add_subcommand("dedekind", "Hilbert function of the Dedekind different against the CBP profile");
    add_scheme_arg(ded_cmd);
    ded_cmd->callback([&] {
        Scheme X = load_scheme(path, opts.field_override());
        CbpProfile prof = cbp_profile(X, nullptr);
        DedekindReport rep = dedekind_different(X, opts.seed);
        DedekindChecks ck = dedekind_checks(X, rep, prof);
        Json j;
        j["report"] = to_json(rep);
        j["checks"] = to_json(ck);
        j["cbp_profile"] = to_json(prof);
        emit(opts, j, [&] { print_dedekind(rep, ck); });
    });

    CLI::App* env_cmd = app.add_subcommand("ci-envelope", "random complete intersection through X linking it geometrically");
    env_cmd->add_option("--degrees", degrees, "form degrees (default: max minimal generator degree)");
    env_cmd->add_flag("--allow-nongeometric", no_geometric, "accept an envelope that shares support with the residual");
    add_scheme_arg(env_cmd);
    env_cmd->callback([&] {
        Scheme X = load_scheme(path, opts.field_override());
        EnvelopeResult e = ci_envelope(X, opts.seed, degrees, !no_geometric);
        emit(opts, to_json(e), [&] {
            std::cout << "CI degrees:";
            for (int k : e.degrees) std::cout << ' ' << k;
            std::cout << " (attempt " << e.attempts << ", seed " << e.seed << ")\n";
            std::cout << "forms:\n";
            for (const Poly& g : e.triple.W.ideal().generators())
                std::cout << "  " << g.str() << "\n";
            print_linkage_report(linkage_report(e.triple));
        });
    });

    CLI::App* self_cmd = app.add_subcommand("selftest", "golden-example suite over the shipped data files");
    self_cmd->add_option("--data", datadir, "directory with the golden scheme files");
    int selftest_rc = 0;
    self_cmd->callback([&] { selftest_rc = run_selftest(datadir); });

    try {
        app.parse(argc, argv);
        return selftest_rc;
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const validation_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        std::cerr << "precondition not met: " << e.what() << "\n";
        return 3;
    } catch (const retry_exhausted& e) {
        std::cerr << "retry budget exhausted: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

namespace {

// Golden values for the two worked examples and the plane-quartic raw scheme.
int run_selftest(const std::string& datadir) {
    int failures = 0;
    auto check = [&](const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };
    auto proportional = [](const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.monic() == b.monic();
    };

    Scheme Wraw = load_scheme(datadir + "/ambient_ci33_raw.json");
    Scheme W = load_scheme(datadir + "/ambient_ci33_components.json");
    check("ambient: raw generators match the component decomposition",
          W.ideal().equals(Wraw.ideal()));
    check("ambient: deg 9, r 4, HF 1 3 6 8 9",
          W.degree() == 9 && W.regularity() == 4 &&
              hf_text(W.hilbert().values) == "0:1 1:3 2:6 3:8 4:9");
    check("ambient: arithmetically Gorenstein", arithmetically_gorenstein(W.ideal()));
    {
        std::vector<int> dims;
        for (int j = 0; j < W.component_count(); ++j) dims.push_back(W.local(j).dimension());
        check("ambient: two double points, five reduced points",
              dims == std::vector<int>({1, 1, 1, 1, 2, 1, 2}));
    }

    Scheme X = load_scheme(datadir + "/x_deg5_double_point.json");
    check("X: deg 5, r 2", X.degree() == 5 && X.regularity() == 2);
    LinkageTriple t = make_linkage(W, X);
    LinkageReport lr = linkage_report(t);
    check("Y: deg 4, r 2, alpha_Y 2", lr.deg_Y == 4 && lr.r_Y == 2 && lr.alpha_Y == 2);
    check("linkage identities all pass", lr.all_pass);
    check("X and Y geometrically linked", lr.geometric == Verdict::yes);
    {
        Poly H = Poly::parse(X.ring(), "X0^2 + X0*X1 + 1/4*X1^2 - 1/2*X0*X2 - 1/4*X1*X2");
        bool nzd = t.Y.ideal().contains(H);
        for (int j = 0; j < X.component_count(); ++j)
            if (H.evaluate(X.support_point(j)).is_zero()) nzd = false;
        check("witness H lies in (I_Y)_2 and is a non-zerodivisor on R_X", nzd);
    }
    {
        CbpProfile prof = cbp_profile(X, &t);
        bool all_methods = prof.max_d == 1;
        for (const CbpAgreement& a : prof.rows) {
            if (a.verdicts.size() != 5) all_methods = false;
            for (const CbpVerdict& v : a.verdicts)
                if (v.verdict != Verdict::yes) all_methods = false;
        }
        check("X: Cayley-Bacharach by all five methods", all_methods);
    }

    Scheme Xp = load_scheme(datadir + "/x_ci22_reduced.json");
    SchemeReport xrep = analyze(Xp);
    check("X': complete intersection of type 2 2",
          xrep.complete_intersection && xrep.ci_degrees == std::vector<int>({2, 2}));
    LinkageTriple tp = make_linkage(W, Xp);
    {
        const Ring& R = Xp.ring();
        HomogIdeal expected(R, {Poly::parse(R, "X0^2 - 1/4*X1^2 - 1/2*X0*X2 - 1/4*X1*X2"),
                                Poly::parse(R, "X0*X1*X2 + 1/2*X1^2*X2"),
                                Poly::parse(R, "X0*X2^2 + 1/4*X1*X2^2 - 1/2*X2^3")});
        check("Y': the three expected generators", tp.Y.ideal().equals(expected));
    }
    check("X', Y' not geometrically linked (shared point (1 : 2 : 0))",
          tp.geometric.verdict == Verdict::no &&
              tp.geometric.evidence.find("(1 : 2 : 0)") != std::string::npos);
    {
        CbpProfile prof = cbp_profile(Xp, &tp);
        check("X': Cayley-Bacharach", prof.max_d == prof.r_X - 1);
        CbpVerdict ann = cbp_check(Xp, 1, CbpMethod::annihilator, &tp);
        check("X': annihilator route inconclusive at d=1 (nonzero annihilator)",
              ann.verdict == Verdict::unknown);
        SeparatorSet sep = separators_of(Xp, 3);
        Poly f5 = Poly::parse(Xp.ring(), "X1^2 - 2*X1*X2");
        check("X': minimal separator at p5 is X1^2 - 2*X1*X2 mod I (mu 2)",
              sep.mu == 2 && proportional(normal_form(f5, Xp.ideal().basis()),
                                          normal_form(sep.minimal, Xp.ideal().basis())));
        DedekindReport dd = dedekind_different(Xp, 42);
        check("X': HF of the different is 0 0 1 3 4",
              hf_text(dd.hf_delta) == "0:0 1:0 2:1 3:3 4:4");
        DedekindChecks ck = dedekind_checks(Xp, dd, prof);
        check("X': different checks pass", ck.all_pass && ck.ag && ck.ag_equality);
    }

    Scheme Q4 = load_scheme(datadir + "/p1_quartic_raw.json");
    check("quartic: deg 4, r 3, HF 1 2 3 4",
          Q4.degree() == 4 && Q4.regularity() == 3 &&
              hf_text(Q4.hilbert().values) == "0:1 1:2 2:3 3:4");
    {
        CbpProfile prof = cbp_profile(Q4, nullptr);
        check("quartic: CBP profile reaches d = 2", prof.max_d == 2);
        DedekindReport dd = dedekind_different(Q4, 7);
        check("quartic: HF_delta = HF shifted by r, ri = 6",
              hf_text(dd.hf_delta) == "0:0 1:0 2:0 3:1 4:2 5:3 6:4" && dd.ri_delta == 6);
        DedekindChecks ck = dedekind_checks(Q4, dd, prof);
        check("quartic: different checks pass (AG equality)", ck.all_pass && ck.ag_equality);
    }

    {
        // serialized verdicts survive a JSON round trip
        CbpVerdict v = cbp_check(X, 1, CbpMethod::canonical);
        Json j = to_json(v);
        Json j2 = Json::parse(j.dump());
        check("JSON verdict record round-trips", j == j2 && j2["verdict"] == "yes");
    }

    std::cout << (failures == 0 ? "selftest: all checks passed\n"
                                : "selftest: " + std::to_string(failures) + " check(s) FAILED\n");
    return failures == 0 ? 0 : 1;
}

} // namespace
