#include "zerodim/liaison.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "zerodim/errors.hpp"

namespace zerodim {

const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "unknown";
    }
}

namespace {

bool contains_ideal(const HomogIdeal& inner, const HomogIdeal& outer) {
    for (const Poly& g : inner.basis().elements())
        if (!outer.contains(g)) return false;
    return true;
}

bool vanishes_at(const HomogIdeal& I, const std::vector<Scalar>& p) {
    for (const Poly& g : I.basis().elements())
        if (!g.evaluate(p).is_zero()) return false;
    return true;
}

// Initial degree of I_X / I_W; -1 when the ideals agree.
int quotient_initial_degree(const Scheme& X, const Scheme& W) {
    const HilbertData& hx = X.hilbert();
    const HilbertData& hw = W.hilbert();
    int bound = std::max(hx.regularity, hw.regularity) + 1;
    for (int d = 0; d <= bound; ++d)
        if (hx.value_at(d) < hw.value_at(d)) return d;
    return -1;
}

} // namespace

Scheme residual(const Scheme& W, const Scheme& X) {
    if (!(W.ring() == X.ring()))
        throw precondition_error("schemes live in different rings");
    if (!arithmetically_gorenstein(W.ideal()))
        throw precondition_error("linkage requires an arithmetically Gorenstein ambient scheme");
    if (!contains_ideal(W.ideal(), X.ideal()))
        throw precondition_error("not a subscheme of the ambient scheme");
    Scheme Y = Scheme::from_ideal(colon(W.ideal(), X.ideal()));
    if (Y.saturation_applied())
        throw std::logic_error("residual of a saturated ideal came out unsaturated");
    return Y;
}

GeometricCheck is_geometrically_linked(const Scheme& X, const Scheme& Y, const Scheme& W) {
    auto point_str = [](const std::vector<Scalar>& p) {
        std::string s = "(";
        for (std::size_t k = 0; k < p.size(); ++k) {
            if (k) s += " : ";
            s += p[k].str();
        }
        return s + ")";
    };
    bool probed = false;
    if (X.components_mode()) {
        probed = true;
        for (int j = 0; j < X.component_count(); ++j)
            if (vanishes_at(Y.ideal(), X.support_point(j)))
                return {Verdict::no, "shared support point " + point_str(X.support_point(j)) +
                                         " (component " + std::to_string(j) + " of X)"};
    }
    if (Y.components_mode()) {
        probed = true;
        for (int j = 0; j < Y.component_count(); ++j)
            if (vanishes_at(X.ideal(), Y.support_point(j)))
                return {Verdict::no, "shared support point " + point_str(Y.support_point(j)) +
                                         " (component " + std::to_string(j) + " of Y)"};
    }
    if (!probed) return {Verdict::unknown, "support points unavailable on both sides"};
    if (intersect(X.ideal(), Y.ideal()).equals(W.ideal()))
        return {Verdict::yes, "supports disjoint; the two ideals intersect to the ambient ideal"};
    return {Verdict::no, "supports disjoint but the ideals do not intersect to the ambient ideal"};
}

LinkageTriple make_linkage(const Scheme& W, const Scheme& X) {
    Scheme Y = residual(W, X);
    int ax = quotient_initial_degree(X, W);
    int ay = quotient_initial_degree(Y, W);
    GeometricCheck g = is_geometrically_linked(X, Y, W);
    return LinkageTriple{W, X, Y, ax, ay, std::move(g)};
}

LinkageReport linkage_report(const LinkageTriple& t) {
    LinkageReport rep;
    rep.deg_W = t.W.degree();
    rep.deg_X = t.X.degree();
    rep.deg_Y = t.Y.degree();
    rep.degree_additive = rep.deg_W == rep.deg_X + rep.deg_Y;
    rep.r_W = t.W.regularity();
    rep.r_X = t.X.regularity();
    rep.r_Y = t.Y.regularity();
    rep.alpha_X = t.alpha_X;
    rep.alpha_Y = t.alpha_Y;
    rep.degenerate = t.X.is_empty() || t.Y.is_empty();
    if (!rep.degenerate)
        rep.regularity_decompositions =
            rep.r_W == rep.r_X + rep.alpha_Y && rep.r_W == rep.r_Y + rep.alpha_X;
    rep.hf_reflection = true;
    for (int i = 0; i <= rep.r_W; ++i) {
        int lhs = t.W.hilbert().value_at(i) - t.Y.hilbert().value_at(i);
        int rhs = rep.deg_X - t.X.hilbert().value_at(rep.r_W - i - 1);
        if (lhs != rhs) {
            rep.hf_reflection = false;
            rep.hf_reflection_failures.push_back(i);
        }
    }
    rep.geometric = t.geometric.verdict;
    rep.geometric_evidence = t.geometric.evidence;
    rep.all_pass = rep.degree_additive && rep.hf_reflection &&
                   (rep.degenerate || rep.regularity_decompositions);
    return rep;
}

CorrespondenceCheck residual_correspondence(const LinkageTriple& t, int j,
                                            const std::vector<Scalar>& socle_dir) {
    Scheme xs = maximal_subscheme(t.X, j, socle_dir);
    Scheme ya = residual(t.W, xs);
    HomogIdeal prime = point_ideal(t.X.ring(), t.X.support_point(j));
    HomogIdeal away_y = saturate(t.Y.ideal(), prime);
    HomogIdeal away_ya = saturate(ya.ideal(), prime);

    CorrespondenceCheck c{std::move(xs), std::move(ya)};
    c.degree_step = c.Y_aug.degree() == t.Y.degree() + 1;
    c.contains_Y = contains_ideal(c.Y_aug.ideal(), t.Y.ideal());
    c.away_parts_equal = away_y.equals(away_ya);
    int mult_y = t.Y.degree() - away_y.degree();
    int mult_ya = c.Y_aug.degree() - away_ya.degree();
    c.multiplicity_step = mult_ya == mult_y + 1;
    c.all_pass = c.degree_step && c.contains_Y && c.away_parts_equal && c.multiplicity_step;
    return c;
}

CorrespondenceCheck residual_correspondence(const LinkageTriple& t, int j) {
    const LocalAlgebra& loc = t.X.local(j);
    if (!loc.gorenstein())
        throw precondition_error(
            "component socle has dimension > 1; pass an explicit socle direction");
    return residual_correspondence(t, j, loc.socle_basis().column(0));
}

EnvelopeResult ci_envelope(const Scheme& X, std::uint64_t seed, std::vector<int> degrees,
                           bool require_geometric, int max_attempts) {
    const Ring& r = X.ring();
    int n = r.proj_dim();
    if (X.is_empty())
        throw precondition_error("cannot build an envelope around the empty scheme");
    if (!X.components_mode())
        throw precondition_error("envelope construction requires a scheme given by components");
    if (require_geometric && X.locally_gorenstein() == std::optional<bool>(false))
        throw precondition_error(
            "geometric linkage requires a locally Gorenstein scheme; rerun without that demand");

    if (degrees.empty()) {
        std::vector<int> gd = X.ideal().minimal_generator_degrees();
        int d = *std::max_element(gd.begin(), gd.end());
        degrees.assign(n, d);
    }
    if (static_cast<int>(degrees.size()) != n)
        throw validation_error("expected " + std::to_string(n) + " envelope degrees");
    std::vector<GradedPiece> slices;
    for (int d : degrees) {
        if (d < 1) throw validation_error("envelope degrees must be positive");
        slices.push_back(ideal_piece(X.ideal(), d));
        if (slices.back().dim() == 0)
            throw validation_error("the ideal has no elements of degree " + std::to_string(d));
    }
    HilbertData target = ci_hilbert_data(r.nvars, degrees);

    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Poly> forms;
        for (int k = 0; k < n; ++k) {
            Poly f = Poly::zero(r);
            for (const Poly& b : slices[k].basis) f += b * random_scalar(r.field, rng, 50);
            forms.push_back(std::move(f));
        }
        bool degenerate_draw = false;
        for (const Poly& f : forms) degenerate_draw = degenerate_draw || f.is_zero();
        if (degenerate_draw) continue;

        HomogIdeal J(r, forms);
        if (!J.zero_dimensional()) continue;
        if (!is_x0_saturated(J)) continue;
        const HilbertData& h = J.hilbert_data();
        if (h.values != target.values || h.regularity != target.regularity ||
            h.eventual != target.eventual)
            continue;

        LinkageTriple t = make_linkage(Scheme::from_ideal(J), X);
        if (!require_geometric || t.geometric.verdict == Verdict::yes)
            return EnvelopeResult{std::move(t), std::move(degrees), attempt, seed};
    }
    throw retry_exhausted("no suitable complete intersection after " +
                          std::to_string(max_attempts) + " attempts (seed " +
                          std::to_string(seed) + ")");
}

} // namespace zerodim
