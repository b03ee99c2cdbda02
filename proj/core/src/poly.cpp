#include "zerodim/poly.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace zerodim {

Poly Poly::constant(const Ring& r, const Scalar& c) {
    Poly p(r);
    if (!c.is_zero()) p.t_.push_back({Monomial(r.nvars), c});
    return p;
}

Poly Poly::variable(const Ring& r, int var) {
    if (var < 0 || var >= r.nvars)
        throw validation_error("variable index X" + std::to_string(var) + " out of range");
    Poly p(r);
    p.t_.push_back({Monomial::power_of(r.nvars, var, 1), Scalar::one(r.field)});
    return p;
}

Poly Poly::term(const Ring& r, const Monomial& m, const Scalar& c) {
    if (m.nvars() != r.nvars) throw validation_error("monomial/ring variable count mismatch");
    Poly p(r);
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

bool Poly::is_homogeneous() const {
    for (const Term& t : t_)
        if (t.mono.degree() != t_.front().mono.degree()) return false;
    return true;
}

const Term& Poly::leading_term() const {
    if (t_.empty()) throw precondition_error("leading term of the zero polynomial");
    return t_.front();
}

void Poly::check_same_ring(const Poly& o) const {
    if (ring_ != o.ring_) throw validation_error("polynomials from different rings");
}

Poly Poly::operator-() const {
    Poly p(*this);
    for (Term& t : p.t_) t.coeff = -t.coeff;
    return p;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_ring(o);
    Poly out(ring_);
    out.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = Monomial::cmp(t_[i].mono, o.t_[j].mono);
        if (c > 0) {
            out.t_.push_back(t_[i++]);
        } else if (c < 0) {
            out.t_.push_back(o.t_[j++]);
        } else {
            Scalar s = t_[i].coeff + o.t_[j].coeff;
            if (!s.is_zero()) out.t_.push_back({t_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < t_.size(); ++i) out.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) out.t_.push_back(o.t_[j]);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::from_unsorted(const Ring& r, std::vector<Term> terms) {
    std::map<Monomial, Scalar, MonomialGreater> acc;
    for (Term& t : terms) {
        auto it = acc.find(t.mono);
        if (it == acc.end()) acc.emplace(std::move(t.mono), t.coeff);
        else it->second += t.coeff;
    }
    Poly out(r);
    for (auto& [m, c] : acc)
        if (!c.is_zero()) out.t_.push_back({m, c});
    return out;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_ring(o);
    std::vector<Term> prod;
    prod.reserve(t_.size() * o.t_.size());
    for (const Term& a : t_)
        for (const Term& b : o.t_)
            prod.push_back({a.mono.times(b.mono), a.coeff * b.coeff});
    return from_unsorted(ring_, std::move(prod));
}

Poly Poly::operator*(const Scalar& c) const {
    if (c.is_zero()) return Poly(ring_);
    Poly p(*this);
    for (Term& t : p.t_) t.coeff *= c;
    return p;
}

Poly Poly::minus_multiple(const Scalar& c, const Monomial& m, const Poly& g) const {
    Poly shifted(ring_);
    shifted.t_.reserve(g.t_.size());
    for (const Term& t : g.t_) shifted.t_.push_back({t.mono.times(m), t.coeff * (-c)});
    return *this + shifted; // shifting preserves order, so terms stay sorted
}

Poly Poly::monic() const {
    if (t_.empty()) return *this;
    return *this * t_.front().coeff.inverse();
}

Scalar Poly::coefficient_of(const Monomial& m) const {
    for (const Term& t : t_) {
        int c = Monomial::cmp(t.mono, m);
        if (c == 0) return t.coeff;
        if (c < 0) break;
    }
    return Scalar::zero(ring_.field);
}

Scalar Poly::evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<int>(point.size()) != ring_.nvars)
        throw validation_error("evaluation point has wrong length");
    Scalar acc = Scalar::zero(ring_.field);
    for (const Term& t : t_) {
        Scalar v = t.coeff;
        for (int k = 0; k < ring_.nvars; ++k)
            for (int e = 0; e < t.mono.exponent(k); ++e) v *= point[k];
        acc += v;
    }
    return acc;
}

Poly Poly::dehomogenized() const {
    std::vector<Term> terms;
    terms.reserve(t_.size());
    for (const Term& t : t_) {
        std::vector<int> e = t.mono.exponents();
        e[0] = 0;
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return from_unsorted(ring_, std::move(terms));
}

Poly Poly::homogenized(int degree) const {
    Poly out(ring_);
    out.t_.reserve(t_.size());
    for (const Term& t : t_) {
        if (t.mono.degree() > degree)
            throw precondition_error("homogenization degree below a term degree");
        std::vector<int> e = t.mono.exponents();
        e[0] += degree - t.mono.degree();
        out.t_.push_back({Monomial(std::move(e)), t.coeff});
    }
    std::sort(out.t_.begin(), out.t_.end(),
              [](const Term& a, const Term& b) { return Monomial::cmp(a.mono, b.mono) > 0; });
    return out;
}

bool Poly::operator==(const Poly& o) const {
    check_same_ring(o);
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].mono != o.t_[i].mono || t_[i].coeff != o.t_[i].coeff) return false;
    return true;
}

std::string Poly::str() const {
    if (t_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const Term& t = t_[i];
        std::string c = t.coeff.str();
        bool neg = !c.empty() && c[0] == '-';
        if (i == 0) {
            if (neg) { s += "-"; c = c.substr(1); }
        } else {
            s += neg ? " - " : " + ";
            if (neg) c = c.substr(1);
        }
        bool unit_coeff = (c == "1");
        if (t.mono.is_constant()) {
            s += c;
        } else if (unit_coeff) {
            s += t.mono.str();
        } else {
            s += c + "*" + t.mono.str();
        }
    }
    return s;
}

namespace {

struct Cursor {
    std::string_view s;
    std::size_t i = 0;

    void skip_ws() { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; }
    bool done() { skip_ws(); return i >= s.size(); }
    char peek() { skip_ws(); return i < s.size() ? s[i] : '\0'; }
    char take() { skip_ws(); return s[i++]; }

    unsigned long number() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw validation_error("expected a number at position " + std::to_string(start));
        return std::stoul(std::string(s.substr(start, i - start)));
    }
};

} // namespace

Poly Poly::parse(const Ring& r, std::string_view text) {
    Cursor c{text};
    if (c.done()) throw validation_error("empty polynomial text");
    Poly acc(r);
    bool first = true;
    while (!c.done()) {
        bool negative = false;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            negative = (ch == '-');
            c.take();
        } else if (!first) {
            throw validation_error("expected '+' or '-' between terms");
        }
        first = false;

        // one term: optional coefficient, then '*'-joined variable powers
        Scalar coeff = Scalar::one(r.field);
        bool saw_factor = false;
        Monomial mono(r.nvars);
        bool expect_factor = true;
        while (expect_factor) {
            ch = c.peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                unsigned long num = c.number();
                if (c.peek() == '/') {
                    c.take();
                    unsigned long den = c.number();
                    coeff *= Scalar::of_fraction(r.field, static_cast<long>(num), den);
                } else {
                    coeff *= Scalar::of_int(r.field, static_cast<long>(num));
                }
                saw_factor = true;
            } else if (ch == 'X' || ch == 'x') {
                c.take();
                unsigned long var = c.number();
                if (var >= static_cast<unsigned long>(r.nvars))
                    throw validation_error("variable X" + std::to_string(var) + " out of range");
                int exp = 1;
                if (c.peek() == '^') {
                    c.take();
                    exp = static_cast<int>(c.number());
                }
                mono = mono.times(Monomial::power_of(r.nvars, static_cast<int>(var), exp));
                saw_factor = true;
            } else {
                throw validation_error("unexpected character in polynomial: '" + std::string(1, ch) + "'");
            }
            expect_factor = (c.peek() == '*');
            if (expect_factor) c.take();
        }
        if (!saw_factor) throw validation_error("empty term");
        if (negative) coeff = -coeff;
        acc += Poly::term(r, mono, coeff);
    }
    return acc;
}

std::vector<Monomial> graded_basis(const Ring& r, int degree) {
    return monomials_of_degree(r.nvars, degree);
}

std::vector<Scalar> coordinates(const Poly& f, const std::vector<Monomial>& basis) {
    const Field& fld = f.ring().field;
    std::vector<Scalar> v(basis.size(), Scalar::zero(fld));
    std::map<std::vector<int>, int> index;
    for (std::size_t l = 0; l < basis.size(); ++l)
        index.emplace(basis[l].exponents(), static_cast<int>(l));
    for (const Term& t : f.terms()) {
        auto it = index.find(t.mono.exponents());
        if (it == index.end())
            throw precondition_error("polynomial does not lie in the span of the given monomials");
        v[it->second] = t.coeff;
    }
    return v;
}

Poly from_coordinates(const Ring& r, const std::vector<Monomial>& basis,
                      const std::vector<Scalar>& v) {
    if (v.size() != basis.size())
        throw precondition_error("coordinate vector does not match the basis size");
    Poly acc = Poly::zero(r);
    for (std::size_t l = 0; l < basis.size(); ++l) {
        if (v[l].is_zero()) continue;
        acc += Poly::term(r, basis[l], v[l]);
    }
    return acc;
}

} // namespace zerodim
