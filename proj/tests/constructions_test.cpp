#include <doctest.h>

#include "oracles.hpp"
#include "skewgoppa/constructions.hpp"
#include "skewgoppa/errors.hpp"
#include "skewgoppa/rng.hpp"

using namespace skewgoppa;

namespace {
const Field& f8() {
    static Field f(2, 1, 3, 1, std::vector<uint32_t>{1, 1, 0, 1});
    return f;
}

std::vector<Elem> all_nonzero(const Field& f) {
    std::vector<Elem> s;
    for (uint32_t c = 1; c < f.order(); ++c) s.push_back(f.elem(c));
    return s;
}
} // namespace

TEST_CASE("generalized Reed-Solomon codes") {
    const Field& f = f8();
    std::vector<Elem> s = all_nonzero(f);
    std::vector<Elem> ones(7, f.one());

    CHECK(grs(f, s, ones, 7) == full_space(f, Alphabet::qt, 7));
    // unit multipliers recover plain Reed-Solomon: the Vandermonde rows
    CHECK(grs(f, s, ones, 3) ==
          LinearCode::from_generator(Alphabet::qt, vandermonde(f, s, 3)));
    auto d = min_distance(grs(f, s, ones, 3));
    CHECK(d.kind == DistanceResult::Kind::exact);
    CHECK(d.value == 5); // n + 1 - k

    std::vector<Elem> dup{f.one(), f.one(), f.elem(2)};
    CHECK_THROWS_AS(grs(f, dup, std::vector<Elem>(3, f.one()), 2), HypothesisError);
    std::vector<Elem> with_zero_mult{f.one(), f.zero(), f.one()};
    CHECK_THROWS_AS(grs(f, {f.one(), f.elem(2), f.elem(3)}, with_zero_mult, 2),
                    HypothesisError);
    CHECK_THROWS_AS(grs(f, s, ones, 8), HypothesisError);
}

TEST_CASE("dual multipliers") {
    const Field& f = f8();
    CounterRng rng(31, 0);
    for (int it = 0; it < 20; ++it) {
        size_t n = 3 + rng.next_below(4);
        std::vector<Elem> s;
        {
            std::set<uint32_t> used;
            while (s.size() < n) {
                Elem e = f.elem(rng.next_below(8));
                if (used.insert(e.code()).second) s.push_back(e);
            }
        }
        size_t degg = 1 + rng.next_below(n);
        Poly g = Poly::one(f);
        bool ok = true;
        for (size_t d = 0; d < degg; ++d) {
            Elem root = f.elem(rng.next_below(8));
            bool hits = false;
            for (Elem e : s)
                if (e == root) hits = true;
            if (hits) {
                ok = false;
                break;
            }
            g = g * Poly::linear(f, root);
        }
        if (!ok) continue;
        std::vector<Elem> y = grs_dual_multipliers(f, s, g);
        // GRS_{deg g}(S, g)^perp = GRS_{n - deg g}(S, y)
        CHECK(dual(grs_via_goppa(f, s, g)) == grs(f, s, y, n - degg));
    }
    // n = deg g: the dual is the zero code but y is still defined
    std::vector<Elem> s{f.one(), f.elem(2)};
    Poly g = Poly::linear(f, f.elem(4)) * Poly::linear(f, f.elem(5));
    std::vector<Elem> y = grs_dual_multipliers(f, s, g);
    CHECK(y.size() == 2);
    CHECK(dual(grs_via_goppa(f, s, g)) == zero_code(f, Alphabet::qt, 2));
}

TEST_CASE("classical Goppa codes") {
    const Field& f = f8();
    std::vector<Elem> s = all_nonzero(f);

    // degree-0 polynomial: empty parity check, the full space
    CHECK(goppa_classical(f, s, Poly::constant(f, f.elem(3))) ==
          full_space(f, Alphabet::qr, 7));

    // S = F_8^*, g = x^2 + x + 1 (no roots in F_8): k >= 7 - 6 = 1, d >= 3
    Poly g(f, {f.one(), f.one(), f.one()});
    LinearCode gamma = goppa_classical(f, s, g);
    CHECK(gamma.dim() == 1);
    auto d = min_distance(gamma);
    CHECK(d.kind == DistanceResult::Kind::exact);
    CHECK(d.value == 6);
    CHECK(d.value >= 3);

    // membership oracle agreement on every subfield word
    bool agree = true;
    oracles::for_each_subfield_word(f, 7, [&](const std::vector<Elem>& w) {
        if (goppa_membership_oracle(f, {s}, {g}, w) != gamma.contains(w)) agree = false;
    });
    CHECK(agree);

    // single nonzero coordinate is never a codeword when deg g >= 1
    std::vector<Elem> unit(7, f.zero());
    unit[3] = f.one();
    CHECK_FALSE(goppa_membership_oracle(f, {s}, {g}, unit));

    Poly vanishing = Poly::linear(f, f.one());
    CHECK_THROWS_AS(goppa_classical(f, s, vanishing), HypothesisError);
}

TEST_CASE("multivariate Goppa codes") {
    Field f4(2, 1, 2, 1);
    std::vector<std::vector<Elem>> sets{{f4.elem(0), f4.elem(1), f4.elem(2)},
                                        {f4.elem(0), f4.elem(1), f4.elem(2)}};
    std::vector<Poly> polys{Poly::linear(f4, f4.elem(3)), Poly::linear(f4, f4.elem(3))};
    LinearCode gamma = multivariate_goppa(f4, sets, polys);
    CHECK(gamma.n() == 9);
    // n - (t/r) deg g <= k <= n - deg g with deg g = 1
    CHECK(gamma.dim() >= 9 - 2);
    CHECK(gamma.dim() <= 9 - 1);
    auto d = min_distance(gamma);
    CHECK(d.kind == DistanceResult::Kind::exact);
    CHECK(d.value >= 2);

    // m = 1 reduces to the classical construction
    const Field& f = f8();
    std::vector<Elem> s = all_nonzero(f);
    Poly g(f, {f.one(), f.one(), f.one()});
    CHECK(multivariate_goppa(f, {s}, {g}) == goppa_classical(f, s, g));

    // oracle agreement on the m = 2 instance
    bool agree = true;
    oracles::for_each_subfield_word(f4, 9, [&](const std::vector<Elem>& w) {
        if (goppa_membership_oracle(f4, sets, polys, w) != gamma.contains(w)) agree = false;
    });
    CHECK(agree);
}

TEST_CASE("augmented Cartesian codes") {
    Field f4(2, 1, 2, 1);
    std::vector<std::vector<Elem>> sets{{f4.elem(0), f4.elem(1), f4.elem(2)},
                                        {f4.elem(0), f4.elem(1), f4.elem(2)}};
    std::vector<Poly> polys{Poly::linear(f4, f4.elem(3)), Poly::linear(f4, f4.elem(3))};
    LinearCode a = acar(f4, sets, polys);
    LinearCode t = tensor_product(grs_via_goppa(f4, sets[0], polys[0]),
                                  grs_via_goppa(f4, sets[1], polys[1]));
    CHECK(a == dual(t));
    CHECK(a.dim() == 8);
    auto d = min_distance(a);
    CHECK(d.value == 2); // min(deg g_j) + 1

    // degree-0 factors make A_g the whole grid: the full space
    std::vector<Poly> consts{Poly::constant(f4, f4.one()), Poly::constant(f4, f4.one())};
    CHECK(acar(f4, sets, consts) == full_space(f4, Alphabet::qt, 9));

    // m = 1: the dual of the GRS-via-Goppa code
    const Field& f = f8();
    std::vector<Elem> s{f.one(), f.elem(2), f.elem(3), f.elem(4)};
    Poly g(f, {f.one(), f.one(), f.one()});
    CHECK(acar(f, {s}, {g}) == dual(grs_via_goppa(f, s, g)));
}

TEST_CASE("generalized skew evaluation codes") {
    const Field& f = f8();
    std::vector<Elem> s{f.one(), f.elem(2), f.elem(4)};
    std::vector<Elem> ones(3, f.one());

    GseResult full = gse(f, s, ones, 3);
    CHECK(full.is_gsrs);
    CHECK(full.code == full_space(f, Alphabet::qt, 3));

    GseResult k1 = gse(f, s, ones, 1);
    auto d = min_distance(k1.code);
    CHECK(d.value == 3); // MDS: n - k + 1

    // theta = id reduces to grs
    Field fid(2, 2, 1, 1);
    std::vector<Elem> ps{fid.elem(0), fid.elem(1), fid.elem(2), fid.elem(3)};
    std::vector<Elem> v{fid.one(), fid.elem(2), fid.elem(3), fid.one()};
    CHECK(gse(fid, ps, v, 2).code == grs(fid, ps, v, 2));

    // dependent points: rank drops below n, GSE flag set, rank < k rejected
    std::vector<Elem> dep{f.elem(6), f.elem(2), f.elem(4)};
    GseResult gseres = gse(f, dep, ones, 2);
    CHECK_FALSE(gseres.is_gsrs);
    CHECK(gseres.vandermonde_rank == 2);
    CHECK_THROWS_AS(gse(f, dep, ones, 3), HypothesisError);
}

TEST_CASE("generalized skew Goppa codes: the worked instance") {
    const Field& f = f8();
    std::vector<Elem> s{f.one(), f.elem(2), f.elem(4)};
    std::vector<Elem> eta(3, f.one());
    InvariantSpec spec = make_invariant_spec(f, f.one(), {f.one()}, 3); // g = X^3
    GsgResult res = gsg(f, s, eta, spec);

    // frozen parity check: columns are the X^3 division quotients
    uint32_t expect[3][3] = {{1, 5, 7}, {1, 6, 2}, {1, 1, 1}};
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(res.H.at(i, j) == f.elem(expect[i][j]));
    CHECK(res.code.dim() == 0);
    CHECK(rank(res.H) == 3);
    CHECK(res.inverse_hypothesis);
    CHECK(res.factors.reduced);
    // g(s) = N_3(s) = 1 for every nonzero s, so R = E = I here
    for (Elem e : res.factors.Rdiag) CHECK(e == f.one());
    CHECK(rank(res.factors.T) == 3);
    CHECK(gsg_gsrs_witness(f, s, eta, spec));

    // hypothesis failures are named
    std::vector<Elem> dep{f.elem(6), f.elem(2), f.elem(4)};
    CHECK_THROWS_AS(gsg(f, dep, eta, spec), HypothesisError);
    InvariantSpec vanishing = make_invariant_spec(f, f.one(), {f.one(), f.one()}, 0);
    // g = 1 + X^3 evaluates to 0 everywhere on F_8^*
    CHECK_THROWS_AS(gsg(f, s, eta, vanishing), HypothesisError);
}

TEST_CASE("gsg without the inverse hypothesis still builds") {
    const Field& f = f8();
    // the cubic roots: P-independent, inverses dependent
    std::vector<Elem> s{f.elem(3), f.elem(5), f.elem(7)};
    std::vector<Elem> eta(3, f.one());
    InvariantSpec spec = make_invariant_spec(f, f.one(), {f.one()}, 2); // g = X^2
    GsgResult res = gsg(f, s, eta, spec);
    CHECK_FALSE(res.inverse_hypothesis);
    CHECK_FALSE(res.factors.reduced);
    CHECK(rank(res.H) <= 2);
    CHECK_THROWS_AS(gsg_gsrs_witness(f, s, eta, spec), HypothesisError);
}

TEST_CASE("theta = id: the parity check is the classical triple product") {
    Field f(2, 2, 1, 1); // F_4 with theta = id
    std::vector<Elem> s{f.elem(0), f.elem(1), f.elem(2)};
    std::vector<Elem> eta(3, f.one());
    // commutative g = (x - 3)^2
    Poly g = Poly::linear(f, f.elem(3)) * Poly::linear(f, f.elem(3));
    auto spec = is_invariant(SkewPoly(f, g.coeffs()));
    REQUIRE(spec.has_value());
    GsgResult res = gsg(f, s, eta, *spec);

    // H[i][j] = (sum_{l} g_{i+l} s_j^{l-1}) / g(s_j): the anti-triangular
    // coefficient matrix times the Vandermonde times R
    for (size_t i = 0; i < 2; ++i)
        for (size_t j = 0; j < 3; ++j) {
            Elem want = f.zero();
            Elem sp = f.one();
            for (size_t l = 1; i + l <= 2; ++l) {
                want += g.coeff(i + l) * sp;
                sp *= s[j];
            }
            want /= g.eval(s[j]);
            CHECK(res.H.at(i, j) == want);
        }
    CHECK(res.code == goppa_classical(f, s, g));
}

TEST_CASE("generalized skew multivariate Goppa codes") {
    const Field& f = f8();
    std::vector<Elem> s1{f.elem(0), f.elem(1), f.elem(2)};
    std::vector<Elem> s2{f.one(), f.elem(2), f.elem(4)};
    Poly g1 = Poly::linear(f, f.elem(7));
    InvariantSpec spec = make_invariant_spec(f, f.one(), {f.one()}, 3);
    std::vector<Elem> eta{f.one(), f.elem(3), f.elem(6)};

    GoppaInstance inst = make_goppa_instance(f, {s1, s2}, {g1}, spec, eta);
    CHECK(inst.n() == 9);
    GsmgResult res = gsmg(inst);
    CHECK(res.H.rows() == 3);
    CHECK(res.H.cols() == 9);
    CHECK(row_space_equal(res.H, res.tensor_code.gen()));
    CHECK(res.tensor_code.dim() == 3);

    // m = 1 instance equals gsg
    GoppaInstance uni = make_goppa_instance(f, {s2}, {}, spec, eta);
    GsmgResult m1 = gsmg(uni);
    GsgResult direct = gsg(f, s2, eta, spec);
    CHECK(m1.code == direct.code);
    CHECK(m1.H == direct.H);

    // instance invariants are enforced with named failures
    std::vector<Elem> with_zero{f.zero(), f.elem(2), f.elem(4)};
    CHECK_THROWS_AS(make_goppa_instance(f, {s1, with_zero}, {g1}, spec, eta),
                    HypothesisError);
    std::vector<Elem> roots{f.elem(3), f.elem(5), f.elem(7)}; // inverses dependent
    CHECK_THROWS_AS(make_goppa_instance(f, {s1, roots}, {g1}, spec, eta), HypothesisError);
    CHECK_THROWS_AS(make_goppa_instance(f, {s1, s2}, {g1}, spec, {f.one()}),
                    std::invalid_argument);
    Poly vanishing = Poly::linear(f, f.elem(1)); // hits s1
    CHECK_THROWS_AS(make_goppa_instance(f, {s1, s2}, {vanishing}, spec, eta),
                    HypothesisError);
}

TEST_CASE("parameter reports") {
    const Field& f = f8();
    std::vector<Elem> s{f.one(), f.elem(2), f.elem(4)};
    std::vector<Elem> eta(3, f.one());
    InvariantSpec spec = make_invariant_spec(f, f.one(), {f.one()}, 3);
    GsgResult res = gsg(f, s, eta, spec);
    ParameterReport rep =
        parameter_report(res.code, 3, {3}, true, false, rank(res.H), 1 << 20);
    CHECK(rep.n == 3);
    CHECK(rep.k == 0);
    CHECK(rep.k_lower == 3 - 9);
    CHECK(rep.k_upper == 0);
    CHECK(rep.k_lower_ok);
    CHECK(rep.k_upper_ok);
    CHECK(rep.distance.kind == DistanceResult::Kind::zero_code);
    CHECK(*rep.rank_h == 3);

    // GRS report: exact MDS distance
    std::vector<Elem> all = all_nonzero(f);
    LinearCode rs = grs(f, all, std::vector<Elem>(7, f.one()), 3);
    ParameterReport rrep = parameter_report(rs, 4, {4}, true, true, std::nullopt, 1 << 20);
    CHECK(rrep.mds_ok);
    CHECK(rrep.d_bound_ok);
}
