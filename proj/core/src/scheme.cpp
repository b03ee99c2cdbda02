#include "zerodim/scheme.hpp"

#include <algorithm>
#include <stdexcept>

#include "zerodim/errors.hpp"

namespace zerodim {

namespace {

std::vector<Scalar> normalize_point(const Ring& r, std::vector<Scalar> p) {
    if (static_cast<int>(p.size()) != r.nvars)
        throw validation_error("point has " + std::to_string(p.size()) +
                               " coordinates, expected " + std::to_string(r.nvars));
    if (p[0].is_zero())
        throw validation_error("point lies on Z(X0)");
    Scalar inv = p[0].inverse();
    for (Scalar& c : p) c = c * inv;
    return p;
}

// X_k - p_k * X0 for k = 1..n: the linear forms cutting out the point.
std::vector<Poly> point_forms(const Ring& r, const std::vector<Scalar>& p) {
    std::vector<Poly> out;
    for (int k = 1; k < r.nvars; ++k)
        out.push_back(Poly::variable(r, k) - Poly::variable(r, 0) * p[k]);
    return out;
}

Poly x0_power(const Ring& r, int k) {
    return Poly::term(r, Monomial::power_of(r.nvars, 0, k), Scalar::one(r.field));
}

bool nilpotent(const Matrix& m, int dim) {
    Matrix acc = m;
    for (int i = 1; i < dim && !acc.is_zero(); ++i) acc = acc * m;
    return acc.is_zero();
}

} // namespace

LocalAlgebra::LocalAlgebra(const Ring& r, std::vector<Scalar> point,
                           std::vector<Poly> local_gens)
    : ring_(r),
      point_(normalize_point(r, std::move(point))),
      ideal_(saturate_x0(HomogIdeal(
          r, local_gens.empty() ? point_forms(r, point_) : std::move(local_gens)))),
      r_(0),
      dim_(0),
      maxideal_(0, 0, r.field),
      socle_(0, 0, r.field) {
    if (ideal_.is_unit())
        throw validation_error("component ideal cuts out the empty scheme");
    try {
        ideal_.hilbert_data();
    } catch (const precondition_error& e) {
        throw validation_error(std::string("component ideal: ") + e.what());
    }
    r_ = ideal_.regularity_index();
    dim_ = ideal_.degree();
    basis_ = ideal_.standard_monomials(r_);

    for (const Poly& g : ideal_.basis().elements())
        if (!g.evaluate(point_).is_zero())
            throw validation_error("component ideal does not vanish at its point");

    for (const Monomial& m : basis_)
        eval_row_.push_back(Poly::term(ring_, m, Scalar::one(ring_.field)).evaluate(point_));

    for (const Poly& l : point_forms(ring_, point_))
        linear_germ_mults_.push_back(multiplication_matrix(germ(l)));
    for (const Matrix& m : linear_germ_mults_)
        if (!nilpotent(m, dim_))
            throw validation_error("component ideal is not supported at its point alone");

    Matrix ev(1, dim_, ring_.field);
    for (int l = 0; l < dim_; ++l) ev.at(0, l) = eval_row_[l];
    maxideal_ = ev.kernel();

    Matrix stacked(static_cast<int>(linear_germ_mults_.size()) * dim_, dim_, ring_.field);
    for (std::size_t k = 0; k < linear_germ_mults_.size(); ++k)
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j)
                stacked.at(static_cast<int>(k) * dim_ + i, j) = linear_germ_mults_[k].at(i, j);
    socle_ = stacked.kernel();
    if (socle_.cols() == 0)
        throw std::logic_error("local algebra with an empty socle");
}

const LinearSolver& LocalAlgebra::x0_division(int k) const {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = divide_.find(k);
    if (it != divide_.end()) return it->second;
    std::vector<Monomial> target = ideal_.standard_monomials(r_ + k);
    Matrix a(static_cast<int>(target.size()), dim_, ring_.field);
    for (int l = 0; l < dim_; ++l) {
        Poly shifted = normal_form(
            Poly::term(ring_, basis_[l].times(Monomial::power_of(ring_.nvars, 0, k)),
                       Scalar::one(ring_.field)),
            ideal_.basis());
        a.set_column(l, coordinates(shifted, target));
    }
    return divide_.emplace(k, LinearSolver(std::move(a))).first->second;
}

std::vector<Scalar> LocalAlgebra::coords_at(const Poly& f, int d) const {
    return coordinates(normal_form(f, ideal_.basis()), ideal_.standard_monomials(d));
}

std::vector<Scalar> LocalAlgebra::germ(const Poly& f) const {
    if (f.is_zero()) return std::vector<Scalar>(dim_, Scalar::zero(ring_.field));
    if (!f.is_homogeneous())
        throw precondition_error("germ of an inhomogeneous polynomial");
    int d = f.degree();
    if (d <= r_) {
        Poly padded = x0_power(ring_, r_ - d) * f;
        return coordinates(normal_form(padded, ideal_.basis()), basis_);
    }
    auto sol = x0_division(d - r_).solve(coords_at(f, d));
    if (!sol)
        throw std::logic_error("division by a power of X0 failed on a saturated ideal");
    return *sol;
}

std::vector<Scalar> LocalAlgebra::identity_element() const {
    return germ(Poly::one(ring_));
}

Poly LocalAlgebra::lift(const std::vector<Scalar>& v) const {
    return from_coordinates(ring_, basis_, v);
}

std::vector<Scalar> LocalAlgebra::product(const std::vector<Scalar>& u,
                                          const std::vector<Scalar>& v) const {
    return germ(lift(u) * lift(v));
}

Scalar LocalAlgebra::eval(const std::vector<Scalar>& v) const {
    Scalar acc = Scalar::zero(ring_.field);
    for (int l = 0; l < dim_; ++l) acc = acc + v[l] * eval_row_[l];
    return acc;
}

Matrix LocalAlgebra::multiplication_matrix(const std::vector<Scalar>& v) const {
    Matrix m(dim_, dim_, ring_.field);
    Poly vf = lift(v);
    for (int l = 0; l < dim_; ++l) {
        Poly bl = Poly::term(ring_, basis_[l], Scalar::one(ring_.field));
        m.set_column(l, germ(bl * vf));
    }
    return m;
}

bool LocalAlgebra::is_socle(const std::vector<Scalar>& v) const {
    bool nonzero = false;
    for (const Scalar& c : v) nonzero = nonzero || !c.is_zero();
    if (!nonzero) return false;
    for (const Matrix& m : linear_germ_mults_)
        for (const Scalar& c : m.apply(v))
            if (!c.is_zero()) return false;
    return true;
}

Scheme Scheme::from_components(const Ring& r, std::vector<SchemeComponent> comps) {
    std::vector<std::shared_ptr<const LocalAlgebra>> locals;
    for (SchemeComponent& c : comps)
        locals.push_back(std::make_shared<LocalAlgebra>(r, std::move(c.point),
                                                        std::move(c.local_gens)));
    for (std::size_t a = 0; a < locals.size(); ++a)
        for (std::size_t b = a + 1; b < locals.size(); ++b)
            if (locals[a]->point() == locals[b]->point())
                throw validation_error("duplicate support point in components");

    std::vector<const HomogIdeal*> parts;
    for (const auto& l : locals) parts.push_back(&l->ideal());
    HomogIdeal ideal = locals.empty() ? HomogIdeal(r, {Poly::one(r)})
                                      : intersect_many(r, parts);

    Scheme x(r, std::move(ideal));
    x.components_mode_ = true;
    x.locals_ = std::move(locals);
    int total = 0;
    for (const auto& l : x.locals_) total += l->dimension();
    if (total != x.degree())
        throw std::logic_error("component multiplicities do not add up to the degree");
    return x;
}

Scheme Scheme::from_ideal(const Ring& r, const std::vector<Poly>& gens) {
    return from_ideal(HomogIdeal(r, gens));
}

Scheme Scheme::from_ideal(HomogIdeal ideal) {
    Ring r = ideal.ring();
    if (ideal.is_zero_ideal())
        throw validation_error("the zero ideal does not define a zero-dimensional scheme");
    bool applied = false;
    if (!is_x0_saturated(ideal)) {
        ideal = saturate_x0(ideal);
        applied = true;
    }
    try {
        ideal.hilbert_data();
    } catch (const precondition_error& e) {
        throw validation_error(e.what());
    }
    Scheme x(r, std::move(ideal));
    x.saturation_applied_ = applied;
    return x;
}

const LocalAlgebra& Scheme::local(int j) const {
    if (!components_mode_)
        throw precondition_error("per-point data requires a scheme given by components");
    if (j < 0 || j >= component_count())
        throw precondition_error("component index out of range");
    return *locals_[j];
}

int Scheme::degree() const { return hilbert().eventual; }
int Scheme::regularity() const { return hilbert().regularity; }

std::optional<bool> Scheme::reduced() const {
    if (!components_mode_) return std::nullopt;
    for (const auto& l : locals_)
        if (l->dimension() != 1) return false;
    return true;
}

std::optional<bool> Scheme::locally_gorenstein() const {
    if (!components_mode_) return std::nullopt;
    for (const auto& l : locals_)
        if (!l->gorenstein()) return false;
    return true;
}

Matrix germ_matrix(const Scheme& X, int i) {
    if (!X.components_mode())
        throw precondition_error("germ matrices require a scheme given by components");
    std::vector<Monomial> cols = X.ideal().standard_monomials(i);
    Matrix g(X.degree(), static_cast<int>(cols.size()), X.ring().field);
    for (std::size_t c = 0; c < cols.size(); ++c) {
        Poly m = Poly::term(X.ring(), cols[c], Scalar::one(X.ring().field));
        int off = 0;
        for (int j = 0; j < X.component_count(); ++j) {
            std::vector<Scalar> block = X.local(j).germ(m);
            for (std::size_t t = 0; t < block.size(); ++t)
                g.at(off + static_cast<int>(t), static_cast<int>(c)) = block[t];
            off += X.local(j).dimension();
        }
    }
    return g;
}

std::vector<Scalar> embed_local_vector(const Scheme& X, int j,
                                       const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != X.local(j).dimension())
        throw precondition_error("local vector has the wrong dimension");
    std::vector<Scalar> out(X.degree(), Scalar::zero(X.ring().field));
    int off = 0;
    for (int t = 0; t < j; ++t) off += X.local(t).dimension();
    for (std::size_t t = 0; t < v.size(); ++t) out[off + static_cast<int>(t)] = v[t];
    return out;
}

namespace {

// Least i such that the column span of `embedded` meets the image of the
// degree-i germ matrix nontrivially. Guaranteed by surjectivity at r_X.
int least_meeting_degree(const Scheme& X, const Matrix& embedded) {
    for (int i = 0; i <= X.regularity(); ++i) {
        Matrix g = germ_matrix(X, i);
        if (g.augmented(embedded).rank() < g.rank() + embedded.cols()) return i;
    }
    throw std::logic_error("socle direction unreachable below the regularity index");
}

Matrix embedded_columns(const Scheme& X, int j, const Matrix& local_cols) {
    Matrix out(X.degree(), local_cols.cols(), X.ring().field);
    for (int c = 0; c < local_cols.cols(); ++c)
        out.set_column(c, embed_local_vector(X, j, local_cols.column(c)));
    return out;
}

} // namespace

int point_degree(const Scheme& X, int j) {
    return least_meeting_degree(X, embedded_columns(X, j, X.local(j).socle_basis()));
}

std::vector<int> point_degrees(const Scheme& X) {
    std::vector<int> out;
    for (int j = 0; j < X.component_count(); ++j) out.push_back(point_degree(X, j));
    return out;
}

SeparatorSet separators_of(const Scheme& X, int j, const std::vector<Scalar>& socle_dir) {
    const LocalAlgebra& loc = X.local(j);
    if (!loc.is_socle(socle_dir))
        throw precondition_error("not a nonzero socle direction of the component");
    Matrix e(X.degree(), 1, X.ring().field);
    e.set_column(0, embed_local_vector(X, j, socle_dir));
    int mu = least_meeting_degree(X, e);

    auto sol = LinearSolver(germ_matrix(X, mu)).solve(e.column(0));
    if (!sol)
        throw std::logic_error("separator germ not in the image at its own degree");
    Poly minimal = from_coordinates(X.ring(), X.ideal().standard_monomials(mu), *sol);
    Poly standard = x0_power(X.ring(), X.regularity() - mu) * minimal;
    return SeparatorSet{j, socle_dir, mu, minimal, standard};
}

SeparatorSet separators_of(const Scheme& X, int j) {
    const LocalAlgebra& loc = X.local(j);
    if (!loc.gorenstein())
        throw precondition_error(
            "component socle has dimension > 1; pass an explicit socle direction");
    return separators_of(X, j, loc.socle_basis().column(0));
}

Scheme maximal_subscheme(const Scheme& X, int j, const std::vector<Scalar>& socle_dir) {
    const LocalAlgebra& loc = X.local(j);
    if (!loc.is_socle(socle_dir))
        throw precondition_error("not a nonzero socle direction of the component");
    std::vector<SchemeComponent> comps;
    for (int t = 0; t < X.component_count(); ++t) {
        const LocalAlgebra& lt = X.local(t);
        SchemeComponent c;
        c.point = lt.point();
        c.local_gens = lt.ideal().basis().elements();
        if (t == j) {
            if (lt.dimension() == 1) continue; // the point disappears
            c.local_gens.push_back(lt.lift(socle_dir));
        }
        comps.push_back(std::move(c));
    }
    Scheme out = Scheme::from_components(X.ring(), std::move(comps));
    if (out.degree() != X.degree() - 1)
        throw std::logic_error("maximal subscheme degree did not drop by one");
    return out;
}

Scheme maximal_subscheme(const Scheme& X, int j) {
    const LocalAlgebra& loc = X.local(j);
    if (!loc.gorenstein())
        throw precondition_error(
            "component socle has dimension > 1; pass an explicit socle direction");
    return maximal_subscheme(X, j, loc.socle_basis().column(0));
}

HomogIdeal point_ideal(const Ring& r, std::vector<Scalar> point) {
    return HomogIdeal(r, point_forms(r, normalize_point(r, std::move(point))));
}

int artinian_socle_dimension(const HomogIdeal& I) {
    const Ring& r = I.ring();
    if (I.is_unit()) return 0;
    if (!I.zero_dimensional())
        throw precondition_error("Artinian reduction requires a zero-dimensional ideal");
    std::vector<Poly> gens = I.basis().elements();
    gens.push_back(Poly::variable(r, 0));
    HomogIdeal J(r, gens);

    int total = 0;
    for (int d = 0;; ++d) {
        std::vector<Monomial> bd = J.standard_monomials(d);
        if (bd.empty()) break;
        std::vector<Monomial> bd1 = J.standard_monomials(d + 1);
        if (bd1.empty()) {
            total += static_cast<int>(bd.size());
            continue;
        }
        int rows = (r.nvars - 1) * static_cast<int>(bd1.size());
        Matrix m(rows, static_cast<int>(bd.size()), r.field);
        for (std::size_t l = 0; l < bd.size(); ++l) {
            std::vector<Scalar> col;
            for (int k = 1; k < r.nvars; ++k) {
                Poly shifted = normal_form(
                    Poly::term(r, bd[l].times(Monomial::power_of(r.nvars, k, 1)),
                               Scalar::one(r.field)),
                    J.basis());
                for (const Scalar& c : coordinates(shifted, bd1)) col.push_back(c);
            }
            m.set_column(static_cast<int>(l), col);
        }
        total += static_cast<int>(bd.size()) - m.rank();
    }
    return total;
}

bool arithmetically_gorenstein(const HomogIdeal& I) {
    return !I.is_unit() && artinian_socle_dimension(I) == 1;
}

SchemeReport analyze(const Scheme& X) {
    SchemeReport rep;
    rep.empty = X.is_empty();
    rep.components_mode = X.components_mode();
    rep.component_count = X.component_count();
    for (int j = 0; j < X.component_count(); ++j)
        rep.local_dims.push_back(X.local(j).dimension());
    rep.degree = X.degree();
    rep.regularity = X.regularity();
    rep.alpha = X.hilbert().alpha;
    rep.hf = X.hilbert().values;
    rep.reduced = X.reduced();
    rep.locally_gorenstein = X.locally_gorenstein();
    rep.saturation_applied = X.saturation_applied();
    if (rep.empty) return rep;

    rep.min_gen_degrees = X.ideal().minimal_generator_degrees();
    rep.artinian_socle_dim = artinian_socle_dimension(X.ideal());
    rep.arithmetically_gorenstein = rep.artinian_socle_dim == 1;

    int n = X.ring().proj_dim();
    if (static_cast<int>(rep.min_gen_degrees.size()) == n) {
        HilbertData ci = ci_hilbert_data(X.ring().nvars, rep.min_gen_degrees);
        if (ci.values != rep.hf || ci.regularity != rep.regularity ||
            ci.eventual != rep.degree)
            throw std::logic_error(
                "minimal generator count suggests a complete intersection but the "
                "Hilbert series disagrees");
        rep.complete_intersection = true;
        rep.ci_degrees = rep.min_gen_degrees;
    }
    return rep;
}

} // namespace zerodim
