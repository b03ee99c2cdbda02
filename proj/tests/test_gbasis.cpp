#include <doctest.h>

#include "golden.hpp"
#include "oracle.hpp"

#include <zerodim/gbasis.hpp>

#include <random>

using namespace zerodim;

namespace {
std::vector<Poly> w_gens() {
    Ring r = golden::plane();
    return {golden::parse(r, golden::F_str()), golden::parse(r, golden::G_str())};
}
}  // namespace

TEST_CASE("reduced basis is monic with distinct leading terms") {
    Ring r = golden::plane();
    GroebnerBasis g = buchberger(r, w_gens());
    for (const Poly& f : g.elements()) {
        CHECK(f.leading_term().coeff.is_one());
        for (const Poly& h : g.elements())
            if (&f != &h) CHECK_FALSE(f.leading_monomial().divides(h.leading_monomial()));
    }
    CHECK_FALSE(g.is_unit());
    CHECK(g.min_degree() == 3);
}

TEST_CASE("normal form is linear idempotent and kills the ideal") {
    Ring r = golden::plane();
    GroebnerBasis g = buchberger(r, w_gens());
    std::mt19937_64 rng(17);
    auto rand_poly = [&](int d) {
        Poly f = Poly::zero(r);
        for (const Monomial& m : graded_basis(r, d))
            f += Poly::term(r, m, random_scalar(r.field, rng, 5));
        return f;
    };
    for (int trial = 0; trial < 10; ++trial) {
        Poly f = rand_poly(3), h = rand_poly(3);
        CHECK(normal_form(f + h, g) == normal_form(f, g) + normal_form(h, g));
        CHECK(normal_form(normal_form(f, g), g) == normal_form(f, g));
        CHECK(normal_form(f * w_gens()[0], g).is_zero());
        CHECK(normal_form(rand_poly(1) * w_gens()[1], g).is_zero());
    }
}

TEST_CASE("hilbert data of the golden schemes") {
    Ring r = golden::plane();
    HomogIdeal iw(r, w_gens());
    const HilbertData& hd = iw.hilbert_data();
    CHECK(hd.values == golden::w_hf());
    CHECK(hd.regularity == 4);
    CHECK(hd.eventual == 9);
    CHECK(hd.alpha == 3);
    CHECK(hd.value_at(-1) == 0);
    CHECK(hd.value_at(100) == 9);
    CHECK(iw.zero_dimensional());

    Scheme q = golden::quartic();
    const HilbertData& hq = q.ideal().hilbert_data();
    CHECK(hq.values == golden::quartic_hf());
    CHECK(hq.regularity == 3);
    CHECK(hq.alpha == 4);
}

TEST_CASE("complete intersection hilbert data matches the computed one") {
    HilbertData ci33 = ci_hilbert_data(3, {3, 3});
    CHECK(ci33.values == golden::w_hf());
    CHECK(ci33.regularity == 4);
    HilbertData ci4 = ci_hilbert_data(2, {4});
    CHECK(ci4.values == golden::quartic_hf());
    HilbertData ci22 = ci_hilbert_data(3, {2, 2});
    CHECK(ci22.values == golden::xp_hf());
    CHECK(ci22.eventual == 4);
}

TEST_CASE("coprime leading terms finish below any cap") {
    // the S-pair of the two cubics is pruned, so nothing is discarded and the
    // capped run still returns a complete basis
    Ring r = golden::plane();
    GroebnerBasis capped = buchberger(r, w_gens(), 4);
    CHECK_FALSE(capped.truncated());
}

TEST_CASE("truncated bases are exact below the cap") {
    Ring r = golden::plane();
    std::vector<Poly> gens = {Poly::parse(r, "X1*X2 + X0^2"), Poly::parse(r, "X1^2 - X0*X2")};
    GroebnerBasis full = buchberger(r, gens);
    GroebnerBasis capped = buchberger(r, gens, 2);
    CHECK(capped.truncated());
    CHECK(capped.cap() == 2);
    std::mt19937_64 rng(23);
    Poly f = Poly::zero(r);
    for (const Monomial& m : graded_basis(r, 2))
        f += Poly::term(r, m, random_scalar(r.field, rng, 5));
    CHECK(normal_form(f, capped) == normal_form(f, full));
    Poly high = Poly::term(r, Monomial::power_of(3, 2, 3), Scalar::one(r.field));
    CHECK_THROWS_AS(normal_form(high, capped), precondition_error);
}

TEST_CASE("standard monomials and pieces complement each other") {
    Ring r = golden::plane();
    HomogIdeal iw(r, w_gens());
    for (int d = 0; d <= 6; ++d) {
        int total = static_cast<int>(graded_basis(r, d).size());
        int hf = iw.hilbert_function(d);
        CHECK(static_cast<int>(iw.standard_monomials(d).size()) == hf);
        CHECK(static_cast<int>(iw.piece(d).size()) == total - hf);
        CHECK(iw.piece_matrix(d).rank() == total - hf);
        for (const Poly& f : iw.piece(d)) CHECK(iw.contains(f));
    }
}

TEST_CASE("minimal generator degrees") {
    Ring r = golden::plane();
    CHECK(HomogIdeal(r, w_gens()).minimal_generator_degrees() == std::vector<int>{3, 3});
    CHECK(golden::X_ci22().ideal().minimal_generator_degrees() == std::vector<int>{2, 2});
    CHECK(golden::X_deg5().ideal().minimal_generator_degrees() == std::vector<int>{2, 3, 3});
    CHECK(golden::quartic().ideal().minimal_generator_degrees() == std::vector<int>{4});
}

TEST_CASE("unit and zero ideals") {
    Ring r = golden::plane();
    HomogIdeal unit(r, {Poly::one(r)});
    CHECK(unit.is_unit());
    CHECK(unit.hilbert_data().empty_scheme);
    CHECK(unit.degree() == 0);
    HomogIdeal zero(r, {});
    CHECK(zero.is_zero_ideal());
    CHECK_FALSE(zero.zero_dimensional());
}

TEST_CASE("groebner hilbert functions match the dense oracle") {
    Ring r = golden::plane();
    HomogIdeal iw(r, w_gens());
    for (int d = 0; d <= 8; ++d) {
        CHECK(iw.hilbert_function(d) == oracle::dense_hf(r, w_gens(), d));
        CHECK(iw.piece_matrix(d).rank() == oracle::dense_piece_dim(r, w_gens(), d));
    }
}
