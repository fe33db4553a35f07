#include <doctest.h>

#include "oracles.hpp"
#include "skewgoppa/field.hpp"
#include "skewgoppa/rng.hpp"

using namespace skewgoppa;

namespace {
const Field& f8() {
    static Field f(2, 1, 3, 1, std::vector<uint32_t>{1, 1, 0, 1});
    return f;
}
} // namespace

TEST_CASE("tower construction and validation") {
    CHECK(f8().order() == 8);
    CHECK(f8().q() == 2);
    CHECK(f8().subfield_order() == 2);

    Field f2(2, 1, 1, 1, std::vector<uint32_t>{1, 1}); // F_2 via x + 1
    CHECK(f2.order() == 2);
    CHECK(f2.theta_is_identity());

    // default moduli follow the smallest-integer convention
    Field f8d(2, 1, 3, 1);
    CHECK(f8d.modulus() == std::vector<uint32_t>{1, 1, 0, 1});
    Field f16(2, 1, 4, 2);
    CHECK(f16.order() == 16);
    CHECK(f16.modulus() == std::vector<uint32_t>{1, 1, 0, 0, 1});

    CHECK_THROWS_AS(Field(4, 1, 2, 1), std::invalid_argument);    // p not prime
    CHECK_THROWS_AS(Field(2, 1, 4, 3), std::invalid_argument);    // r does not divide t
    CHECK_THROWS_AS(Field(2, 1, 3, 1, std::vector<uint32_t>{1, 0, 0, 1}),
                    std::invalid_argument);                        // x^3 + 1 reducible
    CHECK_THROWS_AS(Field(2, 1, 3, 1, std::vector<uint32_t>{1, 1, 1}),
                    std::invalid_argument);                        // wrong degree
    CHECK_THROWS_AS(Field(2, 1, 25, 1), std::invalid_argument);    // above the 2^20 cap
}

TEST_CASE("frobenius powers") {
    const Field& f = f8();
    Elem w = f.elem(2);
    CHECK(f.frobenius(w, 1) == f.elem(4));  // w^2
    CHECK(f.frobenius(w, 3) == w);          // order t = 3
    Elem a = f.elem(5);                     // w^2 + 1
    CHECK(f.frobenius(a, -1) == f.frobenius(f.frobenius(a, 1), 1));
    for (uint32_t c = 0; c < 8; ++c)
        CHECK(f.frobenius(f.elem(c), 1) == f.pow(f.elem(c), 2));
}

TEST_CASE("trace to the subfield") {
    const Field& f = f8();
    CHECK(f.trace_to_subfield(f.zero()).is_zero());
    CHECK(f.trace_to_subfield(f.one()) == f.one()); // 1+1+1 in characteristic 2
    Elem w = f.elem(2);
    // w + w^2 + w^4 computed by direct summation
    Elem direct = w + f.pow(w, 2) + f.pow(w, 4);
    CHECK(f.trace_to_subfield(w) == direct);
    CHECK(f.is_in_subfield(direct));
}

TEST_CASE("partial norms") {
    const Field& f = f8();
    Elem w = f.elem(2);
    CHECK(f.partial_norm(0, f.elem(6)) == f.one());
    CHECK(f.partial_norm(2, w) == f.elem(3)); // w * w^2 = w^3 = w + 1
    for (uint32_t c = 1; c < 8; ++c) CHECK(f.partial_norm(3, f.elem(c)) == f.one());
    // closed form N_i(a) = a^{(q^i-1)/(q-1)} on every element and 0 <= i <= 2t
    for (uint32_t c = 0; c < 8; ++c)
        for (uint32_t i = 0; i <= 6; ++i)
            CHECK(f.partial_norm(i, f.elem(c)) == oracles::norm_by_exponent(f, i, f.elem(c)));
}

TEST_CASE("theta conjugation and conjugacy classes") {
    const Field& f = f8();
    Elem w = f.elem(2);
    for (uint32_t c = 0; c < 8; ++c) CHECK(f.conjugate(f.elem(c), f.one()) == f.elem(c));
    CHECK(f.conjugate(f.one(), w) == w);                   // w^2 * w^{-1}
    CHECK(f.conjugate(f.one(), f.elem(4)) == f.elem(4));   // w^4 * w^{-2}
    CHECK_THROWS_AS(f.conjugate(w, f.zero()), std::invalid_argument);

    auto zero_class = f.conjugacy_class(f.zero());
    CHECK(zero_class.size() == 1);
    CHECK(zero_class[0].is_zero());
    CHECK(f.conjugacy_class(f.one()).size() == 7); // all of F_8^*

    Field fid(2, 2, 1, 1); // theta = id: singleton classes
    CHECK(fid.conjugacy_class(fid.elem(2)).size() == 1);
}

TEST_CASE("subfield membership and expansion") {
    const Field& f = f8();
    CHECK(f.is_in_subfield(f.zero()));
    CHECK(f.is_in_subfield(f.one()));
    CHECK_FALSE(f.is_in_subfield(f.elem(2)));

    CHECK(f.expand_over_subfield(f.zero()) ==
          std::vector<Elem>{f.zero(), f.zero(), f.zero()});
    // basis {1, w, w^2}: w^2+w+1 reads off as (1,1,1)
    CHECK(f.subfield_expansion_basis() == std::vector<Elem>{f.one(), f.elem(2), f.elem(4)});
    CHECK(f.expand_over_subfield(f.elem(7)) == std::vector<Elem>{f.one(), f.one(), f.one()});
    CHECK(f.expand_over_subfield(f.elem(2)) ==
          std::vector<Elem>{f.zero(), f.one(), f.zero()});

    // round trip on every element, also for the r = 2 tower
    Field f16(2, 1, 4, 2);
    for (uint32_t c = 0; c < 16; ++c) {
        Elem a = f16.elem(c);
        auto coords = f16.expand_over_subfield(a);
        CHECK(coords.size() == 2);
        for (Elem e : coords) CHECK(f16.is_in_subfield(e));
        CHECK(f16.combine_from_subfield(coords) == a);
    }
}

TEST_CASE("element serialization") {
    const Field& f = f8();
    for (uint32_t c = 0; c < 8; ++c) {
        auto d = f.digits(f.elem(c));
        CHECK(f.from_digits(d) == f.elem(c));
    }
    CHECK_THROWS_AS(f.elem(8), std::out_of_range);
    CHECK_THROWS_AS(f.from_digits({2, 0, 0}), std::invalid_argument);
}

TEST_CASE("large field uses the table-free paths") {
    Field f(2, 1, 11, 1); // order 2048: no multiplication table
    CounterRng rng(5, 0);
    for (int i = 0; i < 50; ++i) {
        Elem a = f.elem(1 + rng.next_below(2047));
        CHECK(a * f.inv(a) == f.one());
        CHECK(f.frobenius(a, 11) == a);
    }
    Elem x = f.x();
    for (uint32_t i = 1; i < 11; ++i) CHECK(f.frobenius(x, i) != x);
}

TEST_CASE("odd characteristic arithmetic") {
    Field f(3, 1, 2, 1); // F_9
    for (uint32_t c = 0; c < 9; ++c) {
        Elem a = f.elem(c);
        CHECK((a + (-a)).is_zero());
        if (c) CHECK(a / a == f.one());
    }
    CHECK(f.frobenius(f.x(), 2) == f.x());
}
