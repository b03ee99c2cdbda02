#include "zerodim/gbasis.hpp"

#include <algorithm>
#include <limits>

namespace zerodim {

namespace {

Poly times_monomial(const Poly& f, const Monomial& m) {
    return Poly::term(f.ring(), m, Scalar::one(f.ring().field)) * f;
}

Poly full_reduce(Poly f, const std::vector<Poly>& basis) {
    Poly rem(f.ring());
    while (!f.is_zero()) {
        const Term lt = f.leading_term();
        const Poly* divisor = nullptr;
        for (const Poly& g : basis) {
            if (g.leading_monomial().divides(lt.mono)) { divisor = &g; break; }
        }
        if (divisor) {
            f = f.minus_multiple(lt.coeff, lt.mono.divided_by(divisor->leading_monomial()), *divisor);
        } else {
            Poly t = Poly::term(f.ring(), lt.mono, lt.coeff);
            rem += t;
            f -= t;
        }
    }
    return rem;
}

Poly s_polynomial(const Poly& f, const Poly& g) {
    Monomial l = Monomial::lcm(f.leading_monomial(), g.leading_monomial());
    Poly a = times_monomial(f, l.divided_by(f.leading_monomial()));
    Poly b = times_monomial(g, l.divided_by(g.leading_monomial()));
    return a - b; // both monic, leading terms cancel
}

void sort_canonical(std::vector<Poly>& v) {
    std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) {
        return Monomial::cmp(a.leading_monomial(), b.leading_monomial()) < 0;
    });
}

} // namespace

GroebnerBasis::GroebnerBasis(Ring r, std::vector<Poly> elements, std::optional<int> cap)
    : ring_(std::move(r)), g_(std::move(elements)), cap_(cap) {}

bool GroebnerBasis::is_unit() const {
    return g_.size() == 1 && g_.front().degree() == 0;
}

int GroebnerBasis::min_degree() const {
    return g_.empty() ? -1 : g_.front().degree();
}

void GroebnerBasis::ensure_degree_ok(int degree) const {
    if (cap_ && degree > *cap_)
        throw precondition_error("degree " + std::to_string(degree) +
                                 " exceeds truncation cap " + std::to_string(*cap_));
}

GroebnerBasis buchberger(const Ring& r, const std::vector<Poly>& gens, std::optional<int> cap) {
    std::vector<Poly> basis;
    for (const Poly& g : gens) {
        if (g.ring() != r) throw validation_error("generator from a different ring");
        if (g.is_zero()) continue;
        if (!g.is_homogeneous()) throw validation_error("inhomogeneous generator: " + g.str());
        basis.push_back(g.monic());
    }

    // pending S-pairs bucketed by degree of the lcm
    std::map<int, std::vector<std::pair<int, int>>> pairs;
    auto push_pairs = [&](int k) {
        for (int i = 0; i < k; ++i) {
            const Monomial& a = basis[i].leading_monomial();
            const Monomial& b = basis[k].leading_monomial();
            if (a.coprime_to(b)) continue; // product criterion
            pairs[Monomial::lcm(a, b).degree()].push_back({i, k});
        }
    };
    for (std::size_t k = 0; k < basis.size(); ++k) push_pairs(static_cast<int>(k));

    bool truncated = false;
    while (!pairs.empty()) {
        auto bucket = pairs.begin();
        if (cap && bucket->first > *cap) { truncated = true; break; }
        std::vector<std::pair<int, int>> todo = std::move(bucket->second);
        pairs.erase(bucket);
        for (auto [i, j] : todo) {
            Poly rem = full_reduce(s_polynomial(basis[i], basis[j]), basis);
            if (rem.is_zero()) continue;
            basis.push_back(rem.monic());
            push_pairs(static_cast<int>(basis.size()) - 1);
        }
    }

    // minimalize: drop elements whose leading term another one divides
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& mi = basis[i].leading_monomial();
            const Monomial& mj = basis[j].leading_monomial();
            if (mj.divides(mi) && (mi != mj || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    sort_canonical(minimal);

    // tail-reduce; leading terms are pairwise indivisible, so one pass settles
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        others.reserve(minimal.size() - 1);
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = full_reduce(minimal[i], others).monic();
    }
    sort_canonical(minimal);

    return GroebnerBasis(r, std::move(minimal),
                         truncated ? cap : std::optional<int>());
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
    if (f.ring() != G.ring()) throw validation_error("polynomial/basis ring mismatch");
    if (!f.is_zero()) G.ensure_degree_ok(f.degree());
    return full_reduce(f, G.elements());
}

namespace {

long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

} // namespace

HomogIdeal::HomogIdeal(const Ring& r, std::vector<Poly> gens)
    : ring_(r), gens_(std::move(gens)),
      gb_(std::make_shared<GroebnerBasis>(buchberger(r, gens_))) {}

bool HomogIdeal::contains(const Poly& f) const {
    return normal_form(f, *gb_).is_zero();
}

std::vector<Monomial> HomogIdeal::standard_monomials(int d) const {
    gb_->ensure_degree_ok(d);
    std::vector<Monomial> out;
    for (const Monomial& m : monomials_of_degree(ring_.nvars, d)) {
        bool in_lt = false;
        for (const Poly& g : gb_->elements())
            if (g.leading_monomial().divides(m)) { in_lt = true; break; }
        if (!in_lt) out.push_back(m);
    }
    return out;
}

int HomogIdeal::hilbert_function(int i) const {
    if (i < 0) return 0;
    if (hd_) return hd_->value_at(i);
    auto it = hf_cache_.find(i);
    if (it != hf_cache_.end()) return it->second;
    int v = static_cast<int>(standard_monomials(i).size());
    hf_cache_[i] = v;
    return v;
}

const HilbertData& HomogIdeal::hilbert_data() const {
    if (hd_) return *hd_;
    if (gb_->truncated())
        throw precondition_error("Hilbert data needs a complete (untruncated) basis");

    auto hd = std::make_shared<HilbertData>();
    const int n = ring_.nvars - 1;

    if (gb_->is_unit()) {
        hd->empty_scheme = true;
        hd->values = {0};
        hd->alpha = 0;
        hd_ = hd;
        return *hd_;
    }
    hd->alpha = gb_->min_degree();

    // pure-power bounds in X1..Xn make the staircase "tails" finite
    std::vector<int> bound(n + 1, -1);
    for (const Poly& g : gb_->elements()) {
        const Monomial& lt = g.leading_monomial();
        for (int k = 1; k <= n; ++k)
            if (lt.exponent(k) == lt.degree() && lt.degree() > 0 && lt.exponent(k) > 0)
                if (bound[k] < 0 || lt.degree() < bound[k]) bound[k] = lt.degree();
    }
    for (int k = 1; k <= n; ++k)
        if (bound[k] < 0)
            throw precondition_error(
                "quotient is not zero-dimensional (Hilbert function still growing at the safety bound)");

    // Every monomial outside the leading-term ideal is X0^c * t with t an
    // X0-free "tail"; for fixed t the admissible c form an interval [0, gamma).
    struct TailInfo { int deg; long long gamma; };
    constexpr long long INF = std::numeric_limits<long long>::max();
    std::vector<TailInfo> tails;
    std::vector<int> e(n, 0);
    auto tail_gamma = [&](const std::vector<int>& t) -> long long {
        long long g = INF;
        for (const Poly& p : gb_->elements()) {
            const Monomial& lt = p.leading_monomial();
            bool div = true;
            for (int k = 1; k <= n && div; ++k)
                if (lt.exponent(k) > t[k - 1]) div = false;
            if (div) g = std::min(g, static_cast<long long>(lt.exponent(0)));
        }
        return g;
    };
    auto rec = [&](auto&& self, int k) -> void {
        if (k == n) {
            long long gamma = tail_gamma(e);
            if (gamma > 0) {
                int deg = 0;
                for (int x : e) deg += x;
                tails.push_back({deg, gamma});
            }
            return;
        }
        for (int v = 0; v < bound[k + 1]; ++v) { e[k] = v; self(self, k + 1); }
        e[k] = 0;
    };
    rec(rec, 0);

    auto hf_at = [&](int d) {
        int c = 0;
        for (const TailInfo& t : tails)
            if (t.deg <= d && (t.gamma == INF || d < t.deg + t.gamma)) ++c;
        return c;
    };

    int eventual = 0, stable_from = 0;
    for (const TailInfo& t : tails) {
        if (t.gamma == INF) {
            ++eventual;
            stable_from = std::max(stable_from, t.deg);
        } else {
            stable_from = std::max<long long>(stable_from, t.deg + t.gamma);
        }
    }
    hd->eventual = eventual;
    hd->empty_scheme = (eventual == 0);
    int r = stable_from;
    while (r > 0 && hf_at(r - 1) == eventual) --r;
    hd->regularity = r;
    hd->values.resize(r + 1);
    for (int i = 0; i <= r; ++i) hd->values[i] = hf_at(i);

    hd_ = hd;
    return *hd_;
}

bool HomogIdeal::zero_dimensional() const {
    try {
        return hilbert_data().eventual > 0;
    } catch (const precondition_error&) {
        return false;
    }
}

std::vector<Poly> HomogIdeal::piece(int d) const {
    gb_->ensure_degree_ok(d);
    std::vector<Poly> out;
    for (const Monomial& m : monomials_of_degree(ring_.nvars, d)) {
        bool in_lt = false;
        for (const Poly& g : gb_->elements())
            if (g.leading_monomial().divides(m)) { in_lt = true; break; }
        if (!in_lt) continue;
        Poly f = Poly::term(ring_, m, Scalar::one(ring_.field));
        out.push_back(f - normal_form(f, *gb_));
    }
    return out;
}

Matrix HomogIdeal::piece_matrix(int d) const {
    std::vector<Monomial> monos = monomials_of_degree(ring_.nvars, d);
    std::vector<Poly> basis = piece(d);
    Matrix m(static_cast<int>(monos.size()), static_cast<int>(basis.size()), ring_.field);
    for (std::size_t c = 0; c < basis.size(); ++c)
        for (std::size_t r = 0; r < monos.size(); ++r)
            m.at(static_cast<int>(r), static_cast<int>(c)) = basis[c].coefficient_of(monos[r]);
    return m;
}

std::vector<int> HomogIdeal::minimal_generator_degrees() const {
    std::vector<int> out;
    if (gb_->is_zero()) return out;
    int lo = gb_->min_degree();
    int hi = 0;
    for (const Poly& g : gb_->elements()) hi = std::max(hi, g.degree());
    for (int d = lo; d <= hi; ++d) {
        Matrix id = piece_matrix(d);
        int dim_id = id.cols();
        if (dim_id == 0) continue;
        // span of P_1 * (I)_{d-1} inside P_d
        std::vector<Monomial> monos = monomials_of_degree(ring_.nvars, d);
        std::vector<std::vector<Scalar>> cols;
        for (const Poly& b : piece(d - 1))
            for (int v = 0; v < ring_.nvars; ++v) {
                Poly lifted = b * Poly::variable(ring_, v);
                std::vector<Scalar> col;
                col.reserve(monos.size());
                for (const Monomial& m : monos) col.push_back(lifted.coefficient_of(m));
                cols.push_back(std::move(col));
            }
        Matrix lift = Matrix::from_columns(static_cast<int>(monos.size()), ring_.field, cols);
        int fresh = dim_id - lift.rank();
        for (int i = 0; i < fresh; ++i) out.push_back(d);
    }
    return out;
}

bool HomogIdeal::equals(const HomogIdeal& o) const {
    if (ring_ != o.ring_) return false;
    if (gb_->truncated() || o.gb_->truncated())
        throw precondition_error("ideal comparison needs complete bases");
    const auto& a = gb_->elements();
    const auto& b = o.gb_->elements();
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

HilbertData ci_hilbert_data(int nvars, const std::vector<int>& form_degrees) {
    const int n = nvars - 1;
    if (static_cast<int>(form_degrees.size()) != n)
        throw validation_error("a complete intersection in P^n takes n form degrees");
    HilbertData hd;
    long long total = 1;
    int top = 0;
    for (int d : form_degrees) {
        if (d < 1) throw validation_error("form degrees must be positive");
        total *= d;
        top += d - 1;
    }
    hd.eventual = static_cast<int>(total);
    hd.regularity = top;
    hd.alpha = *std::min_element(form_degrees.begin(), form_degrees.end());
    auto hf = [&](int i) {
        // inclusion-exclusion along the Koszul complex of the regular sequence
        long long acc = 0;
        int m = static_cast<int>(form_degrees.size());
        for (int mask = 0; mask < (1 << m); ++mask) {
            int shift = 0, bits = 0;
            for (int k = 0; k < m; ++k)
                if (mask & (1 << k)) { shift += form_degrees[k]; ++bits; }
            long long c = binom(i - shift + n, n);
            acc += (bits % 2 == 0) ? c : -c;
        }
        return static_cast<int>(acc);
    };
    hd.values.resize(top + 1);
    for (int i = 0; i <= top; ++i) hd.values[i] = hf(i);
    while (hd.regularity > 0 && hd.values[hd.regularity - 1] == hd.eventual) {
        hd.values.pop_back();
        --hd.regularity;
    }
    return hd;
}

} // namespace zerodim
