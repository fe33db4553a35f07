#include <doctest.h>

#include "oracles.hpp"
#include "skewgoppa/matrix.hpp"
#include "skewgoppa/rng.hpp"

using namespace skewgoppa;

namespace {
const Field& f8() {
    static Field f(2, 1, 3, 1, std::vector<uint32_t>{1, 1, 0, 1});
    return f;
}

Matrix rand_matrix(const Field& f, CounterRng& rng, size_t rows, size_t cols) {
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = f.elem(rng.next_below(f.order()));
    return m;
}
} // namespace

TEST_CASE("reduced row echelon form") {
    const Field& f = f8();
    Matrix id = Matrix::identity(f, 4);
    Rref r = rref(id);
    CHECK(r.mat == id);
    CHECK(r.pivots == std::vector<size_t>{0, 1, 2, 3});

    Matrix zero(f, 3, 5);
    CHECK(rref(zero).pivots.empty());
    CHECK(rank(zero) == 0);

    // [[w, 1], [w^2, w]] has determinant w*w - w^2 = 0 and rank 1
    Matrix m(f, 2, 2);
    m.at(0, 0) = f.elem(2);
    m.at(0, 1) = f.one();
    m.at(1, 0) = f.elem(4);
    m.at(1, 1) = f.elem(2);
    CHECK((m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0)).is_zero());
    CHECK(rank(m) == 1);

    CounterRng rng(11, 0);
    for (int it = 0; it < 30; ++it) {
        Matrix a = rand_matrix(f, rng, 1 + rng.next_below(5), 1 + rng.next_below(7));
        Rref ra = rref(a);
        CHECK(rref(ra.mat).mat == ra.mat);
        CHECK(row_space_equal(a, ra.mat));
    }
}

TEST_CASE("kernel bases") {
    const Field& f = f8();
    CHECK(kernel_basis(Matrix::identity(f, 3)).rows() == 0);
    Matrix zero_row(f, 1, 4);
    Matrix k = kernel_basis(zero_row);
    CHECK(k.rows() == 4);
    CHECK(rank(k) == 4);

    CounterRng rng(12, 0);
    for (int it = 0; it < 30; ++it) {
        Matrix m = rand_matrix(f, rng, 1 + rng.next_below(4), 1 + rng.next_below(7));
        Matrix kb = kernel_basis(m);
        CHECK(kb.rows() + rank(m) == m.cols());
        for (size_t i = 0; i < kb.rows(); ++i)
            for (Elem e : m.apply(kb.row(i))) CHECK(e.is_zero());
    }
}

TEST_CASE("kronecker products") {
    const Field& f = f8();
    CounterRng rng(13, 0);
    Matrix a = rand_matrix(f, rng, 3, 2);
    Matrix one(f, 1, 1);
    one.at(0, 0) = f.one();
    CHECK(kronecker(a, one) == a);
    CHECK(kronecker(one, a) == a);

    Field f4(2, 1, 2, 1);
    CounterRng rng4(14, 0);
    for (int it = 0; it < 10; ++it) {
        Matrix x = rand_matrix(f4, rng4, 2, 2);
        Matrix y = rand_matrix(f4, rng4, 2, 2);
        CHECK(kronecker(x, y) == oracles::kronecker_by_definition(x, y));
    }
}

TEST_CASE("entrywise frobenius") {
    const Field& f = f8();
    CounterRng rng(15, 0);
    Matrix m = rand_matrix(f, rng, 3, 5);
    CHECK(frobenius_entrywise(m, 0) == m);
    CHECK(frobenius_entrywise(m, 3) == m);
    for (int it = 0; it < 20; ++it) {
        Matrix a = rand_matrix(f, rng, 1 + rng.next_below(4), 1 + rng.next_below(6));
        CHECK(rank(a) == rank(frobenius_entrywise(a, 1)));
    }
}

TEST_CASE("row space comparison") {
    const Field& f = f8();
    CounterRng rng(16, 0);
    Matrix a = rand_matrix(f, rng, 3, 5);
    Matrix perm(f, 3, 5);
    for (size_t j = 0; j < 5; ++j) {
        perm.at(0, j) = a.at(2, j);
        perm.at(1, j) = a.at(0, j);
        perm.at(2, j) = a.at(1, j);
    }
    CHECK(row_space_equal(a, perm));
    Matrix scaled = a;
    for (size_t j = 0; j < 5; ++j) scaled.at(1, j) *= f.elem(5);
    CHECK(row_space_equal(a, scaled));
    CHECK_THROWS_AS(row_space_equal(a, Matrix(f, 1, 4)), std::invalid_argument);
}

TEST_CASE("vandermonde matrices") {
    const Field& f = f8();
    std::vector<Elem> s{f.one(), f.elem(2), f.elem(4)};
    Matrix v1 = skew_vandermonde(f, s, 1);
    for (size_t j = 0; j < 3; ++j) CHECK(v1.at(0, j) == f.one());
    CHECK(rank(skew_vandermonde(f, s, 3)) == 3);
    CHECK_THROWS_AS(skew_vandermonde(f, s, 0), std::invalid_argument);

    // theta = id: the skew Vandermonde is the classical one
    Field fid(2, 2, 1, 1);
    std::vector<Elem> ps{fid.elem(0), fid.elem(1), fid.elem(2), fid.elem(3)};
    CHECK(skew_vandermonde(fid, ps, 4) == vandermonde(fid, ps, 4));
}

TEST_CASE("matrix text round trip") {
    const Field& f = f8();
    CounterRng rng(17, 0);
    Matrix m = rand_matrix(f, rng, 3, 4);
    CHECK(matrix_from_text(f, to_text(m)) == m);
    CHECK_THROWS_AS(matrix_from_text(f, "oops"), std::invalid_argument);
    CHECK_THROWS_AS(matrix_from_text(f, "2 2\n1 2 3"), std::invalid_argument);
}

TEST_CASE("dimension guard") {
    const Field& f = f8();
    CHECK_THROWS_AS(Matrix(f, 4097, 1), std::invalid_argument);
}
