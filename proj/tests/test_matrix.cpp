#include <doctest.h>

#include <zerodim/matrix.hpp>

#include <random>

using namespace zerodim;

namespace {
Matrix random_matrix(int rows, int cols, const Field& f, std::mt19937_64& rng) {
    Matrix a(rows, cols, f);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a.at(i, j) = random_scalar(f, rng, 6);
    return a;
}
}  // namespace

TEST_CASE("rank and kernel of an explicit singular matrix") {
    Field q = Field::Q();
    Matrix a(2, 3, q);
    // rows (1 2 3) and (2 4 6)
    a.at(0, 0) = Scalar::of_int(q, 1);
    a.at(0, 1) = Scalar::of_int(q, 2);
    a.at(0, 2) = Scalar::of_int(q, 3);
    a.at(1, 0) = Scalar::of_int(q, 2);
    a.at(1, 1) = Scalar::of_int(q, 4);
    a.at(1, 2) = Scalar::of_int(q, 6);
    CHECK(a.rank() == 1);
    Matrix k = a.kernel();
    CHECK(k.cols() == 2);
    CHECK((a * k).is_zero());
    Matrix lk = a.left_kernel();
    CHECK(lk.rows() == 1);
    CHECK((lk * a).is_zero());
}

TEST_CASE("rank nullity and solver over both fields") {
    for (Field f : {Field::Q(), Field::Fp(32003)}) {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 15; ++trial) {
            Matrix a = random_matrix(4, 6, f, rng);
            CHECK(a.rank() == a.transposed().rank());
            CHECK(a.rank() + a.kernel().cols() == a.cols());
            CHECK((a * a.kernel()).is_zero());
            CHECK((a.left_kernel() * a).is_zero());

            LinearSolver solver(a);
            CHECK(solver.rank() == a.rank());
            std::vector<Scalar> x;
            for (int j = 0; j < a.cols(); ++j) x.push_back(random_scalar(f, rng, 6));
            std::vector<Scalar> b = a.apply(x);
            CHECK(solver.consistent(b));
            auto sol = solver.solve(b);
            REQUIRE(sol.has_value());
            std::vector<Scalar> b2 = a.apply(*sol);
            for (int i = 0; i < a.rows(); ++i) CHECK(b[i] == b2[i]);
        }
    }
}

TEST_CASE("rref has identity pivots") {
    Field q = Field::Q();
    std::mt19937_64 rng(5);
    Matrix a = random_matrix(5, 5, q, rng);
    Echelon e = a.rref();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
        CHECK(e.reduced.at(static_cast<int>(i), e.pivot_cols[i]).is_one());
        for (std::size_t l = 0; l < e.pivot_cols.size(); ++l)
            if (l != i) CHECK(e.reduced.at(static_cast<int>(l), e.pivot_cols[i]).is_zero());
    }
}

TEST_CASE("span sum and intersection satisfy the dimension formula") {
    Field q = Field::Q();
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix u = random_matrix(6, 3, q, rng);
        Matrix v = random_matrix(6, 3, q, rng);
        Matrix s = column_span_sum(u, v);
        Matrix i = column_span_intersection(u, v);
        CHECK(s.rank() + i.rank() == u.rank() + v.rank());
        // intersection columns lie in both spans
        Matrix ui = u.augmented(i);
        CHECK(ui.rank() == u.rank());
        Matrix vi = v.augmented(i);
        CHECK(vi.rank() == v.rank());
        CHECK(column_spans_equal(u, u));
        CHECK(column_spans_equal(s, v.augmented(u)));
    }
}

TEST_CASE("identity and augmentation") {
    Field f = Field::Fp(101);
    Matrix id = Matrix::identity(4, f);
    CHECK(id.rank() == 4);
    std::mt19937_64 rng(1);
    Matrix a = random_matrix(4, 2, f, rng);
    Matrix aug = a.augmented(id);
    CHECK(aug.cols() == 6);
    CHECK(aug.rank() == 4);
    CHECK((id * a).cols() == a.cols());
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j) CHECK((id * a).at(i, j) == a.at(i, j));
}
