#include "zerodim/monomial.hpp"

#include <algorithm>
#include <numeric>

namespace zerodim {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0) throw validation_error("negative exponent in monomial");
        deg_ += x;
    }
}

Monomial Monomial::times(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] += o.e_[k];
    m.deg_ += o.deg_;
    return m;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] > o.e_[k]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial m(*this);
    for (std::size_t k = 0; k < e_.size(); ++k) m.e_[k] -= o.e_[k];
    m.deg_ -= o.deg_;
    return m;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial m(a);
    m.deg_ = 0;
    for (std::size_t k = 0; k < m.e_.size(); ++k) {
        m.e_[k] = std::max(a.e_[k], b.e_[k]);
        m.deg_ += m.e_[k];
    }
    return m;
}

bool Monomial::coprime_to(const Monomial& o) const {
    for (std::size_t k = 0; k < e_.size(); ++k)
        if (e_[k] > 0 && o.e_[k] > 0) return false;
    return true;
}

Monomial Monomial::power_of(int nvars, int var, int exp) {
    Monomial m(nvars);
    m.e_[var] = exp;
    m.deg_ = exp;
    return m;
}

std::string Monomial::str() const {
    if (deg_ == 0) return "1";
    std::string s;
    for (std::size_t k = 0; k < e_.size(); ++k) {
        if (e_[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "X" + std::to_string(k);
        if (e_[k] > 1) s += "^" + std::to_string(e_[k]);
    }
    return s;
}

std::vector<Monomial> monomials_of_degree(int nvars, int degree, bool x0_free) {
    std::vector<Monomial> out;
    if (degree < 0) return out;
    std::vector<int> e(nvars, 0);
    // walk all exponent vectors summing to `degree` recursively
    auto rec = [&](auto&& self, int var, int rest) -> void {
        if (var == nvars - 1) {
            e[var] = rest;
            if (!(x0_free && nvars > 0 && e[0] > 0))
                out.emplace_back(e);
            e[var] = 0;
            return;
        }
        int lo = 0;
        for (int v = rest; v >= lo; --v) {
            if (var == 0 && x0_free && v > 0) continue;
            e[var] = v;
            self(self, var + 1, rest - v);
        }
        e[var] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return Monomial::cmp(a, b) > 0; });
    return out;
}

} // namespace zerodim
