#include <doctest.h>

#include "skewgoppa/errors.hpp"
#include "skewgoppa/multi_ore.hpp"

using namespace skewgoppa;

namespace {
const Field& f8() {
    static Field f(2, 1, 3, 1, std::vector<uint32_t>{1, 1, 0, 1});
    return f;
}
} // namespace

TEST_CASE("almost-commutative product rules") {
    const Field& f = f8();
    MultiOrePoly x1 = MultiOrePoly::variable(f, 2, 0);
    MultiOrePoly x2 = MultiOrePoly::variable(f, 2, 1);
    Elem a = f.elem(6);
    MultiOrePoly ca = MultiOrePoly::constant(f, 2, a);

    CHECK(x1 * ca == ca * x1);
    CHECK(x2 * ca == MultiOrePoly::constant(f, 2, f.frobenius(a, 1)) * x2);
    CHECK(x1 * x2 == x2 * x1);

    // (X_1 X_m) * (a X_2) over m = 3: one twist from the single X_m
    MultiOrePoly left = MultiOrePoly::monomial(f, 3, {1, 0, 1}, f.one());
    MultiOrePoly right = MultiOrePoly::monomial(f, 3, {0, 1, 0}, a);
    MultiOrePoly expect = MultiOrePoly::monomial(f, 3, {1, 1, 1}, f.frobenius(a, 1));
    CHECK(left * right == expect);

    CHECK_THROWS_AS(x1 * MultiOrePoly::variable(f, 3, 0), std::invalid_argument);
}

TEST_CASE("center membership") {
    const Field& f = f8();
    CHECK(is_central(MultiOrePoly::one(f, 2)));
    CHECK_FALSE(is_central(MultiOrePoly::variable(f, 2, 1))); // X_m with t > 1
    CHECK(is_central(MultiOrePoly::variable(f, 2, 0)));       // X_1 commutes

    // X_1 + X_2^3 is central; w X_1 is not (coefficient outside F_2)
    MultiOrePoly central = MultiOrePoly::variable(f, 2, 0) +
                           MultiOrePoly::monomial(f, 2, {0, 3}, f.one());
    CHECK(is_central(central));
    CHECK(is_central_definitional(central));
    MultiOrePoly off = MultiOrePoly::monomial(f, 2, {1, 0}, f.elem(2));
    CHECK_FALSE(is_central(off));
    CHECK_FALSE(is_central_definitional(off));
}

TEST_CASE("factorizations expand correctly") {
    const Field& f = f8();
    // all factors are plain variables: product is the full monomial
    Poly g1 = Poly::monomial(f, f.one(), 1);
    InvariantSpec xspec = make_invariant_spec(f, f.one(), {f.one()}, 1);
    GoppaFactorization gf = make_factorization(f, {g1}, xspec);
    CHECK(gf.m() == 2);
    CHECK(gf.product_degree() == 1);
    CHECK(expand_product(gf) == MultiOrePoly::monomial(f, 2, {1, 1}, f.one()));

    // m = 1 reduces to the twisted factor itself
    GoppaFactorization uni = make_factorization(f, {}, xspec);
    CHECK(expand_product(uni) == embed_skew(make_invariant(f, xspec), 1));

    // (x_1 - 1) * X_2^3 matches the term-by-term product
    Poly lin = Poly::linear(f, f.one());
    InvariantSpec x3 = make_invariant_spec(f, f.one(), {f.one()}, 3);
    GoppaFactorization gf2 = make_factorization(f, {lin}, x3);
    MultiOrePoly direct = embed_univariate(lin, 2, 0) * embed_skew(make_invariant(f, x3), 2);
    CHECK(expand_product(gf2) == direct);
    CHECK(expand_product(gf2).degree_in(0) == 1);
    CHECK(expand_product(gf2).degree_in(1) == 3);
    CHECK(gf2.product_degree() == 3);

    // non-invariant twisted factor is rejected
    SkewPoly bad(f, {f.one(), f.zero(), f.one()}); // X^2 + 1
    CHECK_THROWS_AS(make_factorization(f, {}, bad), HypothesisError);
}

TEST_CASE("per-point annihilators") {
    const Field& f = f8();
    // all factors linear monomials: h_j is the constant prod(-s^{-1})
    Poly g1 = Poly::monomial(f, f.one(), 1);
    InvariantSpec xspec = make_invariant_spec(f, f.one(), {f.one()}, 1);
    GoppaFactorization gf = make_factorization(f, {g1}, xspec);
    std::vector<Elem> point{f.elem(3), f.elem(2)};
    MultiOrePoly h = assemble_h(gf, point);
    Elem expect = f.neg(f.inv(f.elem(3))) * f.neg(f.inv(f.elem(2)));
    CHECK(h == MultiOrePoly::constant(f, 2, expect));

    // per-variable degrees stay below the factor degrees
    Poly quad(f, {f.one(), f.one(), f.one()});
    InvariantSpec x3 = make_invariant_spec(f, f.one(), {f.one()}, 3);
    GoppaFactorization gf2 = make_factorization(f, {quad}, x3);
    MultiOrePoly h2 = assemble_h(gf2, {f.elem(2), f.elem(4)});
    CHECK(h2.degree_in(0) < 2);
    CHECK(h2.degree_in(1) < 3);

    // vanishing factor coordinate is a named hypothesis failure
    CHECK_THROWS_AS(assemble_h(gf, {f.zero(), f.elem(2)}), HypothesisError);
}

TEST_CASE("point enumeration is row-major, last coordinate fastest") {
    const Field& f = f8();
    std::vector<std::vector<Elem>> sets{{f.elem(1), f.elem(2)}, {f.elem(3), f.elem(4)}};
    auto pts = enumerate_points(sets);
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == std::vector<Elem>{f.elem(1), f.elem(3)});
    CHECK(pts[1] == std::vector<Elem>{f.elem(1), f.elem(4)});
    CHECK(pts[2] == std::vector<Elem>{f.elem(2), f.elem(3)});
    CHECK(pts[3] == std::vector<Elem>{f.elem(2), f.elem(4)});
}

TEST_CASE("membership oracle basics") {
    const Field& f = f8();
    InvariantSpec x3 = make_invariant_spec(f, f.one(), {f.one()}, 3);
    GoppaFactorization gf = make_factorization(f, {}, x3);
    std::vector<std::vector<Elem>> pts{{f.elem(1)}, {f.elem(2)}, {f.elem(4)}};
    std::vector<Elem> eta(3, f.one());

    CHECK(membership_oracle(gf, pts, eta, {f.zero(), f.zero(), f.zero()}));
    // this instance has a trivial kernel over F_2 (see the GSG example), so
    // any nonzero subfield word fails
    CHECK_FALSE(membership_oracle(gf, pts, eta, {f.one(), f.zero(), f.zero()}));
    CHECK_FALSE(membership_oracle(gf, pts, eta, {f.one(), f.one(), f.one()}));
    CHECK_THROWS_AS(membership_oracle(gf, pts, eta, {f.one()}), std::invalid_argument);
    // words outside F_{q^r}^n are rejected
    CHECK_THROWS_AS(membership_oracle(gf, pts, eta, {f.elem(2), f.zero(), f.zero()}),
                    std::invalid_argument);
}

TEST_CASE("canonical text ordering") {
    const Field& f = f8();
    MultiOrePoly p(f, 2);
    p.add_term({0, 1}, f.one());
    p.add_term({2, 0}, f.elem(3));
    p.add_term({1, 1}, f.elem(2));
    // graded lex, X_1 heaviest: (2,0), (1,1), then (0,1)
    CHECK(to_text(p) == "3 2 0\n2 1 1\n1 0 1\n");
}
