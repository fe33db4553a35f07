#include <doctest.h>

#include "oracles.hpp"
#include "skewgoppa/code.hpp"
#include "skewgoppa/rng.hpp"

using namespace skewgoppa;

namespace {
const Field& f8() {
    static Field f(2, 1, 3, 1, std::vector<uint32_t>{1, 1, 0, 1});
    return f;
}

LinearCode rand_code(const Field& f, CounterRng& rng, size_t n, size_t k) {
    Matrix m(f, k, n);
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < n; ++j) m.at(i, j) = f.elem(rng.next_below(f.order()));
    return LinearCode::from_generator(Alphabet::qt, m);
}
} // namespace

TEST_CASE("codes from parity checks") {
    const Field& f = f8();
    CHECK(LinearCode::from_parity_check(Alphabet::qt, Matrix::identity(f, 4)).dim() == 0);
    CHECK(LinearCode::from_parity_check(Alphabet::qt, Matrix(f, 1, 4)).dim() == 4);

    CounterRng rng(21, 0);
    for (int it = 0; it < 20; ++it) {
        LinearCode c = rand_code(f, rng, 2 + rng.next_below(6), 1 + rng.next_below(4));
        CHECK(LinearCode::from_parity_check(Alphabet::qt, kernel_basis(c.gen())) == c);
    }
}

TEST_CASE("duals") {
    const Field& f = f8();
    LinearCode full = full_space(f, Alphabet::qt, 4);
    CHECK(dual(full) == zero_code(f, Alphabet::qt, 4));
    CHECK(dual(zero_code(f, Alphabet::qt, 4)) == full);

    // repetition vs parity over F_2
    Field f2(2, 1, 1, 1);
    Matrix rep(f2, 1, 3);
    for (size_t j = 0; j < 3; ++j) rep.at(0, j) = f2.one();
    LinearCode rep_code = LinearCode::from_generator(Alphabet::qt, rep);
    LinearCode parity = dual(rep_code);
    CHECK(parity.dim() == 2);
    CHECK(parity == LinearCode::from_parity_check(Alphabet::qt, rep));

    CounterRng rng(22, 0);
    for (int it = 0; it < 20; ++it) {
        LinearCode c = rand_code(f, rng, 2 + rng.next_below(6), 1 + rng.next_below(4));
        LinearCode d = dual(c);
        CHECK(c.dim() + d.dim() == c.n());
        CHECK(dual(d) == c);
        // mutual orthogonality of the generator rows
        for (size_t i = 0; i < c.dim(); ++i)
            for (size_t j = 0; j < d.dim(); ++j) {
                Elem dot = f.zero();
                for (size_t x = 0; x < c.n(); ++x) dot += c.gen().at(i, x) * d.gen().at(j, x);
                CHECK(dot.is_zero());
            }
    }
}

TEST_CASE("subfield subcodes against the filter oracle") {
    const Field& f = f8();
    CHECK(subfield_subcode(full_space(f, Alphabet::qt, 3)) ==
          full_space(f, Alphabet::qr, 3));
    CHECK(subfield_subcode(zero_code(f, Alphabet::qt, 3)) == zero_code(f, Alphabet::qr, 3));

    CounterRng rng(23, 0);
    for (int it = 0; it < 25; ++it) {
        LinearCode c = rand_code(f, rng, 2 + rng.next_below(5), 1 + rng.next_below(4));
        CHECK(subfield_subcode(c) == oracles::subfield_subcode_by_filter(c));
    }
}

TEST_CASE("trace codes against the image oracle") {
    const Field& f = f8();
    CHECK(trace_code(zero_code(f, Alphabet::qt, 4)) == zero_code(f, Alphabet::qr, 4));

    CounterRng rng(24, 0);
    for (int it = 0; it < 20; ++it) {
        LinearCode c = rand_code(f, rng, 2 + rng.next_below(5), 1 + rng.next_below(3));
        CHECK(trace_code(c) == oracles::trace_code_by_image(c));
    }

    // t = r: the trace is the single-term sum, so Tr(C) = C reinterpreted
    Field ft(2, 1, 3, 3);
    CounterRng rng2(25, 0);
    Matrix g(ft, 2, 4);
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 4; ++j) g.at(i, j) = ft.elem(rng2.next_below(8));
    LinearCode c = LinearCode::from_generator(Alphabet::qt, g);
    CHECK(trace_code(c).gen() == c.gen());
}

TEST_CASE("tensor products") {
    const Field& f = f8();
    CounterRng rng(26, 0);
    LinearCode c = rand_code(f, rng, 4, 2);
    CHECK(tensor_product(c, full_space(f, Alphabet::qt, 1)) == c);
    CHECK(tensor_product(zero_code(f, Alphabet::qt, 2), c).dim() == 0);
    LinearCode c2 = rand_code(f, rng, 3, 2);
    CHECK(tensor_product(c, c2).n() == 12);
    CHECK(tensor_product(c, c2).dim() == c.dim() * c2.dim());
}

TEST_CASE("minimum distance") {
    Field f2(2, 1, 1, 1);
    Matrix rep(f2, 1, 5);
    for (size_t j = 0; j < 5; ++j) rep.at(0, j) = f2.one();
    auto d = min_distance(LinearCode::from_generator(Alphabet::qt, rep));
    CHECK(d.kind == DistanceResult::Kind::exact);
    CHECK(d.value == 5);

    const Field& f = f8();
    auto dfull = min_distance(full_space(f, Alphabet::qt, 3));
    CHECK(dfull.value == 1);
    CHECK(dfull.enumerated == 511);

    auto dzero = min_distance(zero_code(f, Alphabet::qt, 3));
    CHECK(dzero.kind == DistanceResult::Kind::zero_code);

    auto dbudget = min_distance(full_space(f, Alphabet::qt, 4), 100);
    CHECK(dbudget.kind == DistanceResult::Kind::budget_exceeded);
}

TEST_CASE("delsarte identity") {
    const Field& f = f8();
    CHECK(delsarte_check(full_space(f, Alphabet::qt, 4)));
    CHECK(delsarte_check(zero_code(f, Alphabet::qt, 4)));
    CounterRng rng(27, 0);
    for (int it = 0; it < 30; ++it)
        CHECK(delsarte_check(rand_code(f, rng, 2 + rng.next_below(7), rng.next_below(5))));
}

TEST_CASE("code text round trip") {
    const Field& f = f8();
    CounterRng rng(28, 0);
    LinearCode c = rand_code(f, rng, 5, 2);
    CHECK(code_from_text(f, to_text(c)) == c);
    LinearCode sub = subfield_subcode(c);
    std::string txt = to_text(sub);
    CHECK(txt.substr(0, 2) == "qr");
    CHECK(code_from_text(f, txt) == sub);
    CHECK_THROWS_AS(code_from_text(f, "nope\n1 1\n0\n"), std::invalid_argument);
}

TEST_CASE("membership queries") {
    const Field& f = f8();
    CounterRng rng(29, 0);
    LinearCode c = rand_code(f, rng, 5, 2);
    for (size_t i = 0; i < c.dim(); ++i) CHECK(c.contains(c.gen().row(i)));
    CHECK(c.contains(std::vector<Elem>(5, f.zero())));
    CHECK_THROWS_AS(c.contains(std::vector<Elem>(4, f.zero())), std::invalid_argument);
}
