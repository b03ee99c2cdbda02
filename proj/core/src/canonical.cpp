#include "zerodim/canonical.hpp"

#include <random>
#include <stdexcept>

#include "zerodim/errors.hpp"

namespace zerodim {

namespace {

void check_d_range(const Scheme& X, int d) {
    if (X.is_empty())
        throw precondition_error("the empty scheme has no canonical module tests");
    if (d < 0 || d > X.regularity() - 1)
        throw precondition_error("degree parameter d must lie in 0..r_X-1");
}

} // namespace

CanonicalModule::CanonicalModule(Scheme X) : x_(std::move(X)) {
    if (x_.is_empty())
        throw precondition_error("the empty scheme has no adapted basis");
    int r = x_.regularity();
    const HilbertData& h = x_.hilbert();
    for (int i = 0; i <= r; ++i) {
        int before = static_cast<int>(ab_.elements.size());
        for (const Monomial& m : x_.ideal().standard_monomials(i)) {
            if (m.exponent(0) != 0) continue; // x0-divisible part repeats degree i-1
            ab_.elements.push_back(m);
            ab_.degrees.push_back(i);
        }
        int count = static_cast<int>(ab_.elements.size()) - before;
        ab_.counts.push_back(count);
        if (count != h.value_at(i) - h.value_at(i - 1))
            throw std::logic_error("adapted basis count disagrees with the Hilbert function");
    }
    if (static_cast<int>(ab_.elements.size()) != x_.degree())
        throw std::logic_error("adapted basis size disagrees with the scheme degree");
    for (std::size_t k = 0; k < ab_.elements.size(); ++k) {
        std::vector<int> key = ab_.elements[k].exponents();
        key[0] = 0;
        index_.emplace(std::move(key), static_cast<int>(k));
    }
}

std::vector<Scalar> CanonicalModule::adapted_coordinates(const Poly& f) const {
    const Field& fld = x_.ring().field;
    std::vector<Scalar> alpha(ab_.elements.size(), Scalar::zero(fld));
    Poly nf = normal_form(f, x_.ideal().basis());
    for (const Term& t : nf.terms()) {
        std::vector<int> key = t.mono.exponents();
        key[0] = 0;
        auto it = index_.find(key);
        if (it == index_.end())
            throw std::logic_error("standard monomial missing from the adapted basis");
        alpha[it->second] = t.coeff;
    }
    return alpha;
}

std::vector<OmegaElement> CanonicalModule::piece(int d) const {
    if (d < 0) throw precondition_error("omega pieces are indexed by d >= 0");
    const Field& fld = x_.ring().field;
    std::vector<OmegaElement> out;
    for (std::size_t k = 0; k < ab_.elements.size(); ++k) {
        if (ab_.degrees[k] <= d) continue;
        OmegaElement phi{d, std::vector<Scalar>(ab_.elements.size(), Scalar::zero(fld))};
        phi.c[k] = Scalar::one(fld);
        out.push_back(std::move(phi));
    }
    int expect = x_.degree() - x_.hilbert().value_at(d);
    if (static_cast<int>(out.size()) != expect)
        throw std::logic_error("omega piece dimension disagrees with the Hilbert function");
    return out;
}

Scalar CanonicalModule::pair(const OmegaElement& phi, const Poly& f) const {
    if (phi.c.size() != ab_.elements.size())
        throw precondition_error("functional does not match the adapted basis");
    std::vector<Scalar> alpha = adapted_coordinates(f);
    Scalar acc = Scalar::zero(x_.ring().field);
    for (std::size_t k = 0; k < alpha.size(); ++k) acc = acc + alpha[k] * phi.c[k];
    return acc;
}

OmegaElement CanonicalModule::act(const Poly& f, const OmegaElement& phi) const {
    if (!f.is_homogeneous())
        throw precondition_error("module action needs a homogeneous polynomial");
    if (f.is_zero())
        return OmegaElement{phi.d, std::vector<Scalar>(ab_.elements.size(),
                                                       Scalar::zero(x_.ring().field))};
    int dprime = phi.d - f.degree();
    OmegaElement out{dprime, {}};
    for (std::size_t k = 0; k < ab_.elements.size(); ++k) {
        Poly gk = Poly::term(x_.ring(), ab_.elements[k], Scalar::one(x_.ring().field));
        out.c.push_back(pair(phi, f * gk));
    }
    for (std::size_t k = 0; k < ab_.elements.size(); ++k)
        if (ab_.degrees[k] <= dprime && !out.c[k].is_zero())
            throw std::logic_error("module action broke the forced-zero pattern");
    return out;
}

AdaptedBasis adapted_basis(const Scheme& X) { return CanonicalModule(X).basis(); }

std::vector<OmegaElement> omega_piece(const Scheme& X, int d) {
    return CanonicalModule(X).piece(d);
}

OmegaElement module_action(const Scheme& X, const Poly& f, const OmegaElement& phi) {
    return CanonicalModule(X).act(f, phi);
}

namespace {

// Kernel of f |-> (f*phi_b over the given functionals) on (R_X)_i, as a
// matrix problem over the standard monomials of degree i.
AnnihilatorResult annihilator_kernel(const CanonicalModule& cm,
                                     const std::vector<OmegaElement>& phis, int i) {
    const Scheme& X = cm.scheme();
    const Ring& r = X.ring();
    std::vector<Monomial> cols = X.ideal().standard_monomials(i);
    int m = cm.rank();
    Matrix a(static_cast<int>(phis.size()) * m, static_cast<int>(cols.size()), r.field);
    for (std::size_t l = 0; l < cols.size(); ++l) {
        Poly s = Poly::term(r, cols[l], Scalar::one(r.field));
        for (int k = 0; k < m; ++k) {
            Poly gk = Poly::term(r, cm.basis().elements[k], Scalar::one(r.field));
            std::vector<Scalar> alpha = cm.adapted_coordinates(s * gk);
            for (std::size_t b = 0; b < phis.size(); ++b) {
                Scalar acc = Scalar::zero(r.field);
                for (std::size_t t = 0; t < alpha.size(); ++t)
                    acc = acc + alpha[t] * phis[b].c[t];
                a.at(static_cast<int>(b) * m + k, static_cast<int>(l)) = acc;
            }
        }
    }
    Matrix ker = a.kernel();
    AnnihilatorResult res;
    res.tested_degree = i;
    res.zero = ker.cols() == 0;
    if (!res.zero)
        res.witness = from_coordinates(r, cols, ker.column(0));
    return res;
}

} // namespace

AnnihilatorResult annihilator_at_degree(const Scheme& X, int d, int i) {
    check_d_range(X, d);
    if (i < 0) throw precondition_error("test degree must be nonnegative");
    CanonicalModule cm(X);
    return annihilator_kernel(cm, cm.piece(d), i);
}

AnnihilatorResult annihilator_is_zero(const Scheme& X, int d) {
    return annihilator_at_degree(X, d, X.regularity());
}

InjectiveFunctionalResult find_injective_functional(const Scheme& X, int d,
                                                    std::uint64_t seed, int max_attempts) {
    check_d_range(X, d);
    if (!X.components_mode())
        throw precondition_error(
            "the injective-functional search requires a scheme given by components");
    if (X.locally_gorenstein() == std::optional<bool>(false))
        throw precondition_error("the injective-functional search requires locally "
                                 "Gorenstein components");

    CanonicalModule cm(X);
    std::vector<OmegaElement> basis = cm.piece(d);
    InjectiveFunctionalResult res;
    res.small_field_warning = !X.ring().field.is_rational();

    std::mt19937_64 rng(seed);
    const Field& fld = X.ring().field;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        res.attempts = attempt;
        OmegaElement phi{d, std::vector<Scalar>(cm.rank(), Scalar::zero(fld))};
        for (const OmegaElement& b : basis) {
            Scalar cb = random_scalar(fld, rng, 20);
            for (int k = 0; k < cm.rank(); ++k) phi.c[k] = phi.c[k] + cb * b.c[k];
        }
        bool nonzero = false;
        for (const Scalar& c : phi.c) nonzero = nonzero || !c.is_zero();
        if (!nonzero) continue;
        if (annihilator_kernel(cm, {phi}, X.regularity()).zero) {
            res.phi = std::move(phi);
            return res;
        }
    }
    return res;
}

} // namespace zerodim
