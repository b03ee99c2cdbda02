#include "zerodim/dedekind.hpp"

#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace zerodim {

namespace {

Poly x0_power(const Ring& r, int k) {
    return Poly::term(r, Monomial::power_of(r.nvars, 0, k), Scalar::one(r.field));
}

std::vector<Scalar> unit_vector(int n, int a, const Field& f) {
    std::vector<Scalar> e(n, Scalar::zero(f));
    e[a] = Scalar::one(f);
    return e;
}

// The coordinate algebra A_X = (R_X)_{r_X} with products divided back down by
// x0^{r_X}. Isomorphic to the product of the local rings, but built from the
// ideal alone, so it also serves raw schemes.
class GlobalAlgebra {
public:
    explicit GlobalAlgebra(const Scheme& X)
        : x_(X), r_(X.regularity()),
          basis_(X.ideal().standard_monomials(X.regularity())) {}

    const Ring& ring() const { return x_.ring(); }
    int dim() const { return static_cast<int>(basis_.size()); }
    const std::vector<Monomial>& basis() const { return basis_; }

    // A_X coordinates of f / x0^{deg f}, for homogeneous f of any degree.
    std::vector<Scalar> level(const Poly& f) const {
        if (f.is_zero()) return std::vector<Scalar>(dim(), Scalar::zero(ring().field));
        int d = f.degree();
        if (d <= r_) return coords_at(x0_power(ring(), r_ - d) * f, r_);
        auto sol = x0_division(d - r_).solve(coords_at(f, d));
        if (!sol) throw std::logic_error("x0 division failed in the coordinate algebra");
        return *sol;
    }

    // Columns are the images of the standard monomials of degree m.
    Matrix level_matrix(int m) const {
        std::vector<std::vector<Scalar>> cols;
        for (const Monomial& w : x_.ideal().standard_monomials(m))
            cols.push_back(level(Poly::term(ring(), w, Scalar::one(ring().field))));
        return Matrix::from_columns(dim(), ring().field, cols);
    }

    Poly lift(const std::vector<Scalar>& v) const {
        return from_coordinates(ring(), basis_, v);
    }

    std::vector<Scalar> product(const std::vector<Scalar>& u,
                                const std::vector<Scalar>& v) const {
        return level(lift(u) * lift(v));
    }

    Matrix multiplication_matrix(const std::vector<Scalar>& v) const {
        Poly V = lift(v);
        std::vector<std::vector<Scalar>> cols;
        for (const Monomial& b : basis_)
            cols.push_back(level(V * Poly::term(ring(), b, Scalar::one(ring().field))));
        return Matrix::from_columns(dim(), ring().field, cols);
    }

    const std::vector<Scalar>& basis_product(int a, int b) const {
        auto key = std::make_pair(std::min(a, b), std::max(a, b));
        auto it = pairs_.find(key);
        if (it != pairs_.end()) return it->second;
        Poly p = Poly::term(ring(), basis_[key.first].times(basis_[key.second]),
                            Scalar::one(ring().field));
        return pairs_.emplace(key, level(p)).first->second;
    }

private:
    const Scheme& x_;
    int r_;
    std::vector<Monomial> basis_;
    mutable std::map<int, LinearSolver> divide_;
    mutable std::map<std::pair<int, int>, std::vector<Scalar>> pairs_;

    std::vector<Scalar> coords_at(const Poly& f, int d) const {
        return coordinates(normal_form(f, x_.ideal().basis()),
                           x_.ideal().standard_monomials(d));
    }

    const LinearSolver& x0_division(int k) const {
        auto it = divide_.find(k);
        if (it != divide_.end()) return it->second;
        std::vector<std::vector<Scalar>> cols;
        for (const Monomial& b : basis_)
            cols.push_back(coords_at(
                x0_power(ring(), k) * Poly::term(ring(), b, Scalar::one(ring().field)),
                r_ + k));
        Matrix m = Matrix::from_columns(dim(), ring().field, cols);
        return divide_.emplace(k, LinearSolver(std::move(m))).first->second;
    }
};

// Gram matrix tau(b_a * b_b); invertible iff tau is a nondegenerate trace.
Matrix gram_matrix(const GlobalAlgebra& ga, const std::vector<Scalar>& row) {
    const Field& f = ga.ring().field;
    int n = ga.dim();
    Matrix g(n, n, f);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            const std::vector<Scalar>& p = ga.basis_product(a, b);
            Scalar acc = Scalar::zero(f);
            for (int l = 0; l < n; ++l) acc += row[l] * p[l];
            g.at(a, b) = acc;
            g.at(b, a) = acc;
        }
    return g;
}

Matrix stack_rows(const std::vector<Matrix>& blocks, int cols, const Field& f) {
    int total = 0;
    for (const Matrix& b : blocks) total += b.rows();
    Matrix m(total, cols, f);
    int at = 0;
    for (const Matrix& b : blocks) {
        for (int r = 0; r < b.rows(); ++r)
            for (int c = 0; c < b.cols(); ++c) m.at(at + r, c) = b.at(r, c);
        at += b.rows();
    }
    return m;
}

// C_t = {v : tau(v * germ(f)) = 0 for all f of degree < -t}. The germ images
// of the degree slices are nested and stabilize at r_X, so slices up to
// min(-t-1, r_X) carry all the constraints.
Matrix complementary_piece_impl(const GlobalAlgebra& ga, const Matrix& gram, int t,
                                int r) {
    int top = std::min(-t - 1, r);
    std::vector<Matrix> blocks;
    for (int i = 0; i <= top; ++i)
        blocks.push_back((gram * ga.level_matrix(i)).transposed());
    if (blocks.empty()) return Matrix::identity(ga.dim(), ga.ring().field);
    return stack_rows(blocks, ga.dim(), ga.ring().field).kernel();
}

void check_trace(const Scheme& X, const TraceMap& trace, const GlobalAlgebra& ga) {
    if (static_cast<int>(trace.row.size()) != ga.dim())
        throw validation_error("trace functional has the wrong length for this scheme");
    (void)X;
}

void check_nonempty(const Scheme& X) {
    if (X.is_empty())
        throw precondition_error("the Dedekind different needs a nonempty scheme");
}

} // namespace

LocalTrace local_trace(const LocalAlgebra& A, std::uint64_t seed, int max_attempts) {
    if (!A.gorenstein())
        throw precondition_error("local trace requires a Gorenstein local algebra");
    const Field& f = A.ring().field;
    int n = A.dimension();
    // basis products do not depend on the draw
    std::vector<std::vector<std::vector<Scalar>>> prod(n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b)
            prod[a].push_back(A.product(unit_vector(n, a, f), unit_vector(n, b, f)));
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Scalar> row;
        row.reserve(n);
        for (int l = 0; l < n; ++l) row.push_back(random_scalar(f, rng, 20));
        Matrix g(n, n, f);
        for (int a = 0; a < n; ++a)
            for (int b = a; b < n; ++b) {
                const std::vector<Scalar>& p = prod[a][b - a];
                Scalar acc = Scalar::zero(f);
                for (int l = 0; l < n; ++l) acc += row[l] * p[l];
                g.at(a, b) = acc;
                g.at(b, a) = acc;
            }
        if (g.rank() == n) return LocalTrace{std::move(row), attempt};
    }
    std::ostringstream os;
    os << "local trace: no nondegenerate draw in " << max_attempts
       << " attempts (seed " << seed << ")";
    throw retry_exhausted(os.str());
}

TraceMap scheme_trace(const Scheme& X, std::uint64_t seed, int max_attempts) {
    check_nonempty(X);
    if (auto lg = X.locally_gorenstein(); lg && !*lg)
        throw precondition_error("the Dedekind different requires a locally Gorenstein scheme");
    const Field& f = X.ring().field;
    if (X.components_mode()) {
        // component traces pulled back through the germ matrix
        std::mt19937_64 rng(seed);
        std::vector<Scalar> concat;
        int attempts = 0;
        for (int j = 0; j < X.component_count(); ++j) {
            LocalTrace lt = local_trace(X.local(j), rng(), max_attempts);
            attempts += lt.attempts;
            concat.insert(concat.end(), lt.row.begin(), lt.row.end());
        }
        Matrix g = germ_matrix(X, X.regularity());
        std::vector<Scalar> row;
        row.reserve(g.cols());
        for (int c = 0; c < g.cols(); ++c) {
            Scalar acc = Scalar::zero(f);
            for (int r = 0; r < g.rows(); ++r) acc += concat[r] * g.at(r, c);
            row.push_back(acc);
        }
        GlobalAlgebra ga(X);
        if (gram_matrix(ga, row).rank() != ga.dim())
            throw std::logic_error("component traces produced a degenerate global form");
        return TraceMap{std::move(row), seed, attempts, true};
    }
    // raw mode: draw directly; an invertible Gram matrix certifies both the
    // trace and the locally-Gorenstein hypothesis
    GlobalAlgebra ga(X);
    std::mt19937_64 rng(seed);
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        std::vector<Scalar> row;
        row.reserve(ga.dim());
        for (int l = 0; l < ga.dim(); ++l) row.push_back(random_scalar(f, rng, 20));
        if (gram_matrix(ga, row).rank() == ga.dim())
            return TraceMap{std::move(row), seed, attempt, false};
    }
    std::ostringstream os;
    os << "no nondegenerate trace in " << max_attempts
       << " draws; the scheme is likely not locally Gorenstein (seed " << seed << ")";
    throw retry_exhausted(os.str());
}

Matrix complementary_piece(const Scheme& X, const TraceMap& trace, int t) {
    check_nonempty(X);
    GlobalAlgebra ga(X);
    check_trace(X, trace, ga);
    Matrix gram = gram_matrix(ga, trace.row);
    if (gram.rank() != ga.dim())
        throw precondition_error("trace functional is degenerate");
    return complementary_piece_impl(ga, gram, t, X.regularity());
}

ComplementaryModule complementary_module(const Scheme& X, const TraceMap& trace) {
    check_nonempty(X);
    GlobalAlgebra ga(X);
    check_trace(X, trace, ga);
    Matrix gram = gram_matrix(ga, trace.row);
    if (gram.rank() != ga.dim())
        throw precondition_error("trace functional is degenerate");
    int r = X.regularity();
    ComplementaryModule cm;
    for (int t = -r; t <= 0; ++t) {
        Matrix c = complementary_piece_impl(ga, gram, t, X.regularity());
        int expect = X.degree() - X.hilbert().value_at(-t - 1);
        if (c.cols() != expect)
            throw std::logic_error("complementary piece dimension mismatch");
        cm.dims.push_back(c.cols());
        cm.pieces.push_back(std::move(c));
    }
    return cm;
}

DedekindReport dedekind_different(const Scheme& X, const TraceMap& trace) {
    check_nonempty(X);
    GlobalAlgebra ga(X);
    check_trace(X, trace, ga);
    Matrix gram = gram_matrix(ga, trace.row);
    if (gram.rank() != ga.dim())
        throw precondition_error("trace functional is degenerate");

    int r = X.regularity();
    int deg = X.degree();
    const HilbertData& hd = X.hilbert();
    const Field& f = X.ring().field;

    DedekindReport rep;
    rep.r_X = r;
    rep.degree = deg;
    rep.seed = trace.seed;
    rep.per_component_trace = trace.per_component;

    // complementary pieces and their multiplication matrices
    std::vector<std::vector<Matrix>> mult(r + 1);
    for (int t = -r; t <= 0; ++t) {
        Matrix c = complementary_piece_impl(ga, gram, t, X.regularity());
        int expect = deg - hd.value_at(-t - 1);
        if (c.cols() != expect)
            throw std::logic_error("complementary piece dimension mismatch");
        rep.hf_c.push_back(c.cols());
        for (int s = 0; s < c.cols(); ++s)
            mult[t + r].push_back(ga.multiplication_matrix(c.column(s)));
    }
    rep.hf_c_formula = true;

    // level matrices up to 2r and left kernels below r
    std::vector<Matrix> lev;
    for (int m = 0; m <= 2 * r; ++m) lev.push_back(ga.level_matrix(m));
    std::vector<Matrix> lker;
    for (int m = 0; m < r; ++m) lker.push_back(lev[m].left_kernel());

    // (delta)_i = {f : germ(f) * C_t inside the germ image of (R_X)_{i+t}}
    for (int i = 0; i <= 2 * r; ++i) {
        const Matrix& li = lev[i];
        std::vector<Matrix> blocks;
        for (int t = -r; t <= 0; ++t) {
            int m = i + t;
            if (m >= r) continue; // the germ image is everything there
            for (const Matrix& mc : mult[t + r]) {
                Matrix p = mc * li;
                blocks.push_back(m < 0 ? std::move(p) : lker[m] * p);
            }
        }
        if (blocks.empty()) {
            rep.hf_delta.push_back(li.cols());
            continue;
        }
        rep.hf_delta.push_back(stack_rows(blocks, li.cols(), f).kernel().cols());
    }

    rep.alpha_delta = -1;
    for (int i = 0; i <= 2 * r; ++i)
        if (rep.hf_delta[i] > 0) { rep.alpha_delta = i; break; }
    int ri = 2 * r;
    while (ri > 0 && rep.hf_delta[ri - 1] == deg) --ri;
    rep.ri_delta = ri;
    rep.monotone = true;
    for (int i = 0; i < 2 * r; ++i)
        if (rep.hf_delta[i] > rep.hf_delta[i + 1]) rep.monotone = false;
    rep.top_is_full = rep.hf_delta[2 * r] == deg;
    rep.ri_bounds = r <= rep.ri_delta && rep.ri_delta <= 2 * r;
    return rep;
}

DedekindReport dedekind_different(const Scheme& X, std::uint64_t seed) {
    return dedekind_different(X, scheme_trace(X, seed));
}

DedekindChecks dedekind_checks(const Scheme& X, const DedekindReport& rep,
                               const CbpProfile& profile) {
    if (rep.r_X != X.regularity() || rep.degree != X.degree())
        throw validation_error("report does not belong to this scheme");
    if (profile.r_X != X.regularity())
        throw validation_error("CBP profile does not belong to this scheme");

    DedekindChecks ck;
    ck.small_field_warning = !X.ring().field.is_rational();
    ck.ag = arithmetically_gorenstein(X.ideal());

    bool cb = profile.vacuous || profile.max_d == rep.r_X - 1;
    if (ck.ag && !cb)
        throw std::logic_error(
            "arithmetically Gorenstein scheme failed the top Cayley-Bacharach level");

    if (profile.vacuous || profile.max_d < 0) {
        ck.applicable = false;
        ck.all_pass = true;
        return ck;
    }

    int d = profile.max_d;
    int r = rep.r_X;
    const HilbertData& hd = X.hilbert();
    ck.d = d;
    ck.applicable = true;
    ck.alpha_lower = rep.alpha_delta >= d + 1;

    ck.degreewise_bound = true;
    for (int i = 0; i <= 2 * r; ++i)
        if (rep.hf_delta[i] > hd.value_at(i - d - 1)) ck.degreewise_bound = false;

    ck.i0 = -1;
    for (int i = 0; i <= 2 * r; ++i) {
        int hx = hd.value_at(i - d - 1);
        if (hx > 0 && rep.hf_delta[i] == hx) { ck.i0 = i; break; }
    }
    ck.persistent_equality = ck.i0 >= 0;
    if (ck.i0 >= 0)
        for (int i = ck.i0; i <= 2 * r; ++i)
            if (rep.hf_delta[i] != hd.value_at(i - d - 1)) ck.persistent_equality = false;
    ck.ri_formula = ck.i0 >= 0 && rep.ri_delta == std::max(ck.i0, r + d + 1);

    ck.ag_equality = true;
    for (int i = 0; i <= 2 * r; ++i)
        if (rep.hf_delta[i] != hd.value_at(i - r)) ck.ag_equality = false;
    ck.ag_iff_checked = cb;
    ck.ag_iff_equality = !cb || ck.ag == ck.ag_equality;

    ck.all_pass = ck.alpha_lower && ck.degreewise_bound && ck.i0 >= 0 &&
                  ck.persistent_equality && ck.ri_formula && ck.ag_iff_equality;
    return ck;
}

} // namespace zerodim
