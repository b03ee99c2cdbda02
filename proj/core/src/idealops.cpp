#include "zerodim/idealops.hpp"

#include <algorithm>
#include <functional>

namespace zerodim {

namespace {

std::vector<Scalar> coords_of(const Poly& f, const std::vector<Monomial>& monos) {
    std::vector<Scalar> v;
    v.reserve(monos.size());
    for (const Monomial& m : monos) v.push_back(f.coefficient_of(m));
    return v;
}

Poly poly_of(const Ring& r, const std::vector<Monomial>& monos, const std::vector<Scalar>& v) {
    Poly f(r);
    for (std::size_t i = 0; i < monos.size(); ++i)
        if (!v[i].is_zero()) f += Poly::term(r, monos[i], v[i]);
    return f;
}

// Kill the terms X0 divides; the image of f in P/(X0).
Poly mod_x0(const Poly& f) {
    Poly out(f.ring());
    for (const Term& t : f.terms())
        if (t.mono.exponent(0) == 0) out += Poly::term(f.ring(), t.mono, t.coeff);
    return out;
}

} // namespace

Matrix GradedPiece::matrix() const {
    std::vector<Monomial> monos = monomials_of_degree(ring.nvars, degree, x0_free);
    std::vector<std::vector<Scalar>> cols;
    cols.reserve(basis.size());
    for (const Poly& b : basis) cols.push_back(coords_of(b, monos));
    return Matrix::from_columns(static_cast<int>(monos.size()), ring.field, cols);
}

bool pieces_equal(const GradedPiece& a, const GradedPiece& b) {
    if (a.ring != b.ring || a.degree != b.degree || a.x0_free != b.x0_free) return false;
    if (a.dim() != b.dim()) return false;
    return column_spans_equal(a.matrix(), b.matrix());
}

GradedPiece ideal_piece(const HomogIdeal& I, int d, bool x0_free) {
    GradedPiece p{I.ring(), d, x0_free, {}};
    if (d < 0) return p;
    if (!x0_free) {
        p.basis = I.piece(d);
        return p;
    }
    // image of (I)_d in P/(X0): project the slice basis and prune dependents
    std::vector<Monomial> monos = monomials_of_degree(I.ring().nvars, d, true);
    std::vector<std::vector<Scalar>> cols;
    std::vector<Poly> projected;
    for (const Poly& b : I.piece(d)) {
        Poly q = mod_x0(b);
        if (q.is_zero()) continue;
        projected.push_back(q);
        cols.push_back(coords_of(q, monos));
    }
    Matrix m = Matrix::from_columns(static_cast<int>(monos.size()), I.ring().field, cols);
    Echelon e = m.transposed().rref();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        std::vector<Scalar> v;
        v.reserve(monos.size());
        for (int c = 0; c < static_cast<int>(monos.size()); ++c)
            v.push_back(e.reduced.at(static_cast<int>(i), c));
        p.basis.push_back(poly_of(I.ring(), monos, v));
    }
    return p;
}

namespace {

// Gaussian pivots grown one vector at a time; add() reports whether the
// vector enlarged the span.
class IncrementalSpan {
public:
    bool add(std::vector<Scalar> v) {
        for (const auto& p : pivots_) {
            const Scalar& c = v[p.first];
            if (c.is_zero()) continue;
            for (std::size_t i = p.first; i < v.size(); ++i) v[i] -= c * p.second[i];
        }
        std::size_t lead = v.size();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) { lead = i; break; }
        if (lead == v.size()) return false;
        Scalar inv = v[lead].inverse();
        for (std::size_t i = lead; i < v.size(); ++i) v[i] *= inv;
        pivots_.emplace_back(lead, std::move(v));
        return true;
    }

private:
    std::vector<std::pair<std::size_t, std::vector<Scalar>>> pivots_;
};

// Shared worker: collect generators of the ideal whose degree-d slices are
// given by `slice`, for d = 1..bound. Slices must be independent spanning
// sets of the slices of an actual ideal; `bound` must be at least its top
// generation degree. With `saturated_result` set (quotient zero-dimensional
// and x0-saturated), the loop stops one degree after the Hilbert function of
// the quotient stabilizes, which is past every minimal generator degree.
HomogIdeal collect_graded(const Ring& r, int bound, bool saturated_result,
                          const std::function<std::vector<Poly>(int)>& slice) {
    std::vector<Poly> gens;
    int prev_hf = -1;
    for (int d = 1; d <= bound; ++d) {
        std::vector<Poly> basis = slice(d);
        std::vector<Monomial> monos = monomials_of_degree(r.nvars, d);
        int hf = static_cast<int>(monos.size()) - static_cast<int>(basis.size());
        if (!basis.empty()) {
            // span of what the collected generators already produce in degree d
            IncrementalSpan span;
            for (const Poly& g : gens) {
                int shift = d - g.degree();
                if (shift < 0) continue;
                for (const Monomial& m : monomials_of_degree(r.nvars, shift))
                    span.add(coords_of(Poly::term(r, m, Scalar::one(r.field)) * g, monos));
            }
            for (const Poly& b : basis)
                if (span.add(coords_of(b, monos))) gens.push_back(b);
        }
        if (saturated_result && hf == prev_hf) break;
        prev_hf = hf;
    }
    return HomogIdeal(r, std::move(gens));
}

} // namespace

HomogIdeal intersect_many(const Ring& r, const std::vector<const HomogIdeal*>& ideals) {
    std::vector<const HomogIdeal*> active;
    long long bound = 0;
    for (const HomogIdeal* I : ideals) {
        if (I->ring() != r) throw validation_error("intersection over mixed rings");
        if (I->is_unit()) continue;
        bound += I->degree(); // throws unless zero-dimensional
        active.push_back(I);
    }
    if (active.empty()) return HomogIdeal(r, {Poly::one(r)});
    if (active.size() == 1) return *active.front();

    auto slice = [&](int d) {
        // f lies in every ideal iff all its normal forms vanish: stack the
        // NF maps P_d -> (P/I_k)_d and take the kernel
        std::vector<Monomial> monos = monomials_of_degree(r.nvars, d);
        int rows = 0;
        std::vector<std::vector<Monomial>> standard;
        for (const HomogIdeal* I : active) {
            standard.push_back(I->standard_monomials(d));
            rows += static_cast<int>(standard.back().size());
        }
        Matrix m(rows, static_cast<int>(monos.size()), r.field);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            int row0 = 0;
            for (std::size_t k = 0; k < active.size(); ++k) {
                Poly nf = normal_form(Poly::term(r, monos[c], Scalar::one(r.field)),
                                      active[k]->basis());
                for (std::size_t i = 0; i < standard[k].size(); ++i)
                    m.at(row0 + static_cast<int>(i), static_cast<int>(c)) =
                        nf.coefficient_of(standard[k][i]);
                row0 += static_cast<int>(standard[k].size());
            }
        }
        Matrix ker = m.kernel();
        std::vector<Poly> out;
        for (int j = 0; j < ker.cols(); ++j) out.push_back(poly_of(r, monos, ker.column(j)));
        return out;
    };
    bool saturated = true;
    for (const HomogIdeal* I : active) saturated = saturated && is_x0_saturated(*I);
    return collect_graded(r, static_cast<int>(bound), saturated, slice);
}

HomogIdeal intersect(const HomogIdeal& I, const HomogIdeal& J) {
    return intersect_many(I.ring(), {&I, &J});
}

HomogIdeal ideal_sum(const HomogIdeal& I, const HomogIdeal& J) {
    if (I.ring() != J.ring()) throw validation_error("sum over mixed rings");
    std::vector<Poly> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return HomogIdeal(I.ring(), std::move(gens));
}

HomogIdeal ideal_product(const HomogIdeal& I, const HomogIdeal& J) {
    if (I.ring() != J.ring()) throw validation_error("product over mixed rings");
    std::vector<Poly> gens;
    for (const Poly& a : I.generators())
        for (const Poly& b : J.generators())
            if (!a.is_zero() && !b.is_zero()) gens.push_back(a * b);
    return HomogIdeal(I.ring(), std::move(gens));
}

namespace {

HomogIdeal colon_with(const HomogIdeal& I, const std::vector<Poly>& reducers) {
    const Ring& r = I.ring();
    std::vector<Poly> red;
    for (const Poly& g : reducers)
        if (!g.is_zero()) red.push_back(g);
    if (red.empty()) return HomogIdeal(r, {Poly::one(r)}); // I : (0) is everything

    bool all_inside = true;
    for (const Poly& g : red)
        if (!I.contains(g)) { all_inside = false; break; }
    if (all_inside) return HomogIdeal(r, {Poly::one(r)});

    // The colon contains I, so its quotient degree is at most deg(P/I) and
    // its generators live in degrees <= deg(P/I).
    int bound = I.degree();

    auto slice = [&](int d) {
        std::vector<Monomial> monos = monomials_of_degree(r.nvars, d);
        int rows = 0;
        std::vector<std::vector<Monomial>> standard;
        for (const Poly& g : red) {
            standard.push_back(I.standard_monomials(d + g.degree()));
            rows += static_cast<int>(standard.back().size());
        }
        Matrix m(rows, static_cast<int>(monos.size()), r.field);
        for (std::size_t c = 0; c < monos.size(); ++c) {
            Poly f = Poly::term(r, monos[c], Scalar::one(r.field));
            int row0 = 0;
            for (std::size_t k = 0; k < red.size(); ++k) {
                Poly nf = normal_form(f * red[k], I.basis());
                for (std::size_t i = 0; i < standard[k].size(); ++i)
                    m.at(row0 + static_cast<int>(i), static_cast<int>(c)) =
                        nf.coefficient_of(standard[k][i]);
                row0 += static_cast<int>(standard[k].size());
            }
        }
        Matrix ker = m.kernel();
        std::vector<Poly> out;
        for (int j = 0; j < ker.cols(); ++j) out.push_back(poly_of(r, monos, ker.column(j)));
        return out;
    };
    // a colon of an x0-saturated ideal is x0-saturated again
    return collect_graded(r, bound, is_x0_saturated(I), slice);
}

} // namespace

HomogIdeal colon(const HomogIdeal& I, const HomogIdeal& J) {
    if (I.ring() != J.ring()) throw validation_error("colon over mixed rings");
    return colon_with(I, J.basis().elements());
}

HomogIdeal colon(const HomogIdeal& I, const Poly& g) {
    if (I.ring() != g.ring()) throw validation_error("colon over mixed rings");
    if (!g.is_zero() && !g.is_homogeneous())
        throw validation_error("colon by an inhomogeneous polynomial");
    return colon_with(I, {g});
}

ColonByPiece colon_by_piece(const HomogIdeal& I, const HomogIdeal& J, int k) {
    if (I.ring() != J.ring()) throw validation_error("colon over mixed rings");
    std::vector<Poly> slice = J.piece(k);
    if (slice.empty()) return {I, true};
    return {colon_with(I, slice), false};
}

bool is_x0_saturated(const HomogIdeal& I) {
    for (const Poly& g : I.basis().elements())
        if (g.leading_monomial().exponent(0) > 0) return false;
    return true;
}

HomogIdeal saturate_x0(const HomogIdeal& I) {
    std::vector<Poly> gens(I.basis().elements());
    const Ring& r = I.ring();
    while (true) {
        bool changed = false;
        for (Poly& g : gens) {
            if (g.is_zero()) continue;
            int k = g.leading_monomial().exponent(0);
            // X0 | LT forces X0 | g under this term order
            if (k > 0) {
                Poly out(r);
                for (const Term& t : g.terms()) {
                    std::vector<int> e = t.mono.exponents();
                    e[0] -= k;
                    out += Poly::term(r, Monomial(std::move(e)), t.coeff);
                }
                g = out;
                changed = true;
            }
        }
        if (!changed) return HomogIdeal(r, std::move(gens));
        gens = buchberger(r, gens).elements();
    }
}

HomogIdeal saturate(const HomogIdeal& I, const HomogIdeal& J) {
    HomogIdeal cur = I;
    while (true) {
        HomogIdeal next = colon(cur, J);
        if (next.equals(cur)) return cur;
        cur = std::move(next);
    }
}

GradedPiece piece_colon(const GradedPiece& Ip, const GradedPiece& Jp, int d) {
    const Ring& r = Ip.ring;
    if (Jp.ring != r) throw validation_error("piece colon over mixed rings");
    if (Ip.x0_free != Jp.x0_free) throw validation_error("mixed X0-free conventions");
    GradedPiece out{r, d, Ip.x0_free, {}};
    if (Jp.basis.empty()) {
        for (const Monomial& m : monomials_of_degree(r.nvars, d, Ip.x0_free))
            out.basis.push_back(Poly::term(r, m, Scalar::one(r.field)));
        return out;
    }
    if (Ip.degree != d + Jp.degree)
        throw precondition_error("piece degrees do not align");

    std::vector<Monomial> dom = monomials_of_degree(r.nvars, d, Ip.x0_free);
    std::vector<Monomial> codom = monomials_of_degree(r.nvars, Ip.degree, Ip.x0_free);
    Matrix constraints = Ip.matrix().left_kernel(); // rows annihilate span(Ip)

    Matrix stacked(constraints.rows() * static_cast<int>(Jp.basis.size()),
                   static_cast<int>(dom.size()), r.field);
    for (std::size_t b = 0; b < Jp.basis.size(); ++b) {
        // multiplication map P_d -> P_(Ip.degree) by Jp.basis[b], then the
        // membership constraints on the result
        Matrix mul(static_cast<int>(codom.size()), static_cast<int>(dom.size()), r.field);
        for (std::size_t c = 0; c < dom.size(); ++c) {
            Poly prod = Poly::term(r, dom[c], Scalar::one(r.field)) * Jp.basis[b];
            mul.set_column(static_cast<int>(c), coords_of(prod, codom));
        }
        Matrix rowsb = constraints * mul;
        for (int i = 0; i < rowsb.rows(); ++i)
            for (int c = 0; c < rowsb.cols(); ++c)
                stacked.at(static_cast<int>(b) * constraints.rows() + i, c) = rowsb.at(i, c);
    }
    Matrix ker = stacked.kernel();
    for (int j = 0; j < ker.cols(); ++j) out.basis.push_back(poly_of(r, dom, ker.column(j)));
    return out;
}

} // namespace zerodim
