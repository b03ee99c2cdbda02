#include <doctest.h>

#include <zerodim/field.hpp>
#include <zerodim/monomial.hpp>
#include <zerodim/poly.hpp>

#include <random>

using namespace zerodim;

TEST_CASE("rational scalars are canonical") {
    Field q = Field::Q();
    Scalar half = Scalar::of_fraction(q, 1, 2);
    Scalar third = Scalar::of_fraction(q, 1, 3);
    CHECK((half + third).str() == "5/6");
    CHECK((half * third).str() == "1/6");
    CHECK((half - half).is_zero());
    CHECK((-half).str() == "-1/2");
    CHECK(Scalar::of_fraction(q, 2, 4) == half);
    CHECK(Scalar::of_fraction(q, -3, 6) == -half);
    CHECK((half / third).str() == "3/2");
    CHECK(Scalar::of_int(q, 7).str() == "7");
    CHECK(Scalar::of_mpq(q, mpq_class(-3, 4)).str() == "-3/4");
}

TEST_CASE("prime field arithmetic reduces mod p") {
    Field f7 = Field::Fp(7);
    CHECK(Scalar::of_int(f7, 10) == Scalar::of_int(f7, 3));
    CHECK(Scalar::of_int(f7, -1) == Scalar::of_int(f7, 6));
    CHECK((Scalar::of_int(f7, 3) * Scalar::of_int(f7, 5)) == Scalar::of_int(f7, 1));
    CHECK((Scalar::of_int(f7, 3) / Scalar::of_int(f7, 4)) == Scalar::of_int(f7, 6));
    CHECK(Scalar::of_fraction(f7, 1, 2) == Scalar::of_int(f7, 4));
    CHECK_THROWS_AS(Scalar::of_fraction(f7, 1, 7), validation_error);
}

TEST_CASE("random scalars are reproducible and bounded") {
    Field q = Field::Q();
    std::mt19937_64 a(42), b(42);
    for (int i = 0; i < 50; ++i) {
        Scalar s = random_scalar(q, a, 10);
        CHECK(s == random_scalar(q, b, 10));
        CHECK(s.rational() <= 10);
        CHECK(s.rational() >= -10);
    }
    Field f = Field::Fp(13);
    std::mt19937_64 c(42);
    for (int i = 0; i < 50; ++i) {
        Scalar s = random_scalar(f, c, 10);
        CHECK(s.residue() < 13);
    }
}

TEST_CASE("degrevlex order with X0 smallest") {
    auto m = [](std::vector<int> e) { return Monomial(std::move(e)); };
    // degree decides first
    CHECK(Monomial::cmp(m({0, 2, 0}), m({1, 0, 0})) > 0);
    // within a degree, less X0 means larger
    CHECK(Monomial::cmp(m({0, 2, 0}), m({1, 0, 1})) > 0);
    CHECK(Monomial::cmp(m({0, 0, 2}), m({0, 1, 1})) > 0);

    std::vector<Monomial> deg2 = monomials_of_degree(3, 2);
    std::vector<Monomial> expect = {m({0, 0, 2}), m({0, 1, 1}), m({0, 2, 0}),
                                    m({1, 0, 1}), m({1, 1, 0}), m({2, 0, 0})};
    CHECK(deg2 == expect);

    std::vector<Monomial> free2 = monomials_of_degree(3, 2, true);
    std::vector<Monomial> expect_free = {m({0, 0, 2}), m({0, 1, 1}), m({0, 2, 0})};
    CHECK(free2 == expect_free);
}

TEST_CASE("order is multiplicative") {
    std::vector<Monomial> all;
    for (int d = 1; d <= 3; ++d)
        for (const Monomial& mm : monomials_of_degree(3, d)) all.push_back(mm);
    for (const Monomial& a : all)
        for (const Monomial& b : all)
            for (const Monomial& c : all) {
                int ab = Monomial::cmp(a, b);
                CHECK(Monomial::cmp(a.times(c), b.times(c)) == ab);
            }
}

TEST_CASE("divisibility and lcm") {
    Monomial a = Monomial::power_of(3, 1, 2);          // X1^2
    Monomial b = Monomial({1, 1, 0});                  // X0*X1
    CHECK_FALSE(a.divides(b));
    CHECK(Monomial({0, 1, 0}).divides(a));
    Monomial l = Monomial::lcm(a, b);
    CHECK(l == Monomial({1, 2, 0}));
    CHECK(a.divides(l));
    CHECK(b.divides(l));
    CHECK(l.divided_by(a) == Monomial({1, 0, 0}));
    CHECK(a.coprime_to(Monomial({1, 0, 1})));
    CHECK_FALSE(a.coprime_to(b));
    CHECK(a.str() == "X1^2");
    CHECK(Monomial(3).str() == "1");
}

TEST_CASE("graded basis sizes are binomial coefficients") {
    Ring r{3, Field::Q()};
    for (int d = 0; d <= 6; ++d)
        CHECK(static_cast<int>(graded_basis(r, d).size()) == (d + 1) * (d + 2) / 2);
    Ring line{2, Field::Q()};
    for (int d = 0; d <= 6; ++d) CHECK(static_cast<int>(graded_basis(line, d).size()) == d + 1);
}
