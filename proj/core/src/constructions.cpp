#include "skewgoppa/constructions.hpp"

#include <set>
#include <stdexcept>
#include <string>

#include "skewgoppa/errors.hpp"

namespace skewgoppa {

namespace {

void require_distinct(const std::vector<Elem>& points, const std::string& what) {
    std::set<uint32_t> seen;
    for (Elem s : points)
        if (!seen.insert(s.code()).second)
            throw HypothesisError(what + " must consist of distinct elements");
}

void require_nonzero(const std::vector<Elem>& mults, const std::string& what) {
    for (Elem v : mults)
        if (v.is_zero()) throw HypothesisError(what + " must be nonzero");
}

std::vector<Elem> goppa_weights(const std::vector<Elem>& points, const Poly& g) {
    std::vector<Elem> w;
    w.reserve(points.size());
    for (Elem s : points) {
        Elem gs = g.eval(s);
        if (gs.is_zero())
            throw HypothesisError("g must not vanish at any evaluation point");
        w.push_back(g.field().inv(gs));
    }
    return w;
}

Matrix scale_columns(Matrix m, const std::vector<Elem>& d) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) *= d[j];
    return m;
}

// quotient coefficient matrix of a commutative factor: entry (b, j) is the
// X^b coefficient of the quotient of g by (x - s_j)
Matrix commutative_quotient_matrix(const Field& f, const Poly& g,
                                   const std::vector<Elem>& points) {
    const size_t rho = static_cast<size_t>(g.deg());
    Matrix h(f, rho, points.size());
    for (size_t j = 0; j < points.size(); ++j) {
        Elem spow = f.one();
        // q_{j,b} = sum_{l=b+1}^{rho} g_l s_j^{l-b-1}: accumulate by l-b-1
        for (size_t off = 0; off < rho; ++off) {
            for (size_t b = 0; b + off + 1 <= rho; ++b)
                h.at(b, j) += g.coeff(b + off + 1) * spow;
            spow *= points[j];
        }
    }
    return h;
}

} // namespace

LinearCode grs(const Field& f, const std::vector<Elem>& points,
               const std::vector<Elem>& mults, size_t k) {
    require_distinct(points, "GRS evaluation points");
    require_nonzero(mults, "GRS multipliers");
    if (mults.size() != points.size())
        throw std::invalid_argument("multiplier count must match point count");
    if (k > points.size()) throw HypothesisError("GRS dimension k must satisfy k <= n");
    return LinearCode::from_generator(Alphabet::qt,
                                      scale_columns(vandermonde(f, points, k), mults));
}

LinearCode grs_via_goppa(const Field& f, const std::vector<Elem>& points, const Poly& g) {
    require_distinct(points, "GRS evaluation points");
    if (g.deg() < 0) throw std::invalid_argument("zero Goppa polynomial");
    if (static_cast<size_t>(g.deg()) > points.size())
        throw HypothesisError("GRS dimension k must satisfy k <= n");
    std::vector<Elem> w = goppa_weights(points, g);
    return LinearCode::from_generator(
        Alphabet::qt, scale_columns(vandermonde(f, points, static_cast<size_t>(g.deg())), w));
}

std::vector<Elem> grs_dual_multipliers(const Field& f, const std::vector<Elem>& points,
                                       const Poly& g) {
    require_distinct(points, "GRS evaluation points");
    std::vector<Elem> y;
    y.reserve(points.size());
    for (size_t i = 0; i < points.size(); ++i) {
        Elem gs = g.eval(points[i]);
        if (gs.is_zero())
            throw HypothesisError("g must not vanish at any evaluation point");
        Elem denom = f.one();
        for (size_t j = 0; j < points.size(); ++j)
            if (j != i) denom *= points[i] - points[j];
        y.push_back(gs / denom);
    }
    return y;
}

LinearCode goppa_classical(const Field& f, const std::vector<Elem>& points, const Poly& g) {
    return subfield_subcode(dual(grs_via_goppa(f, points, g)));
}

bool goppa_membership_oracle(const Field& f, const std::vector<std::vector<Elem>>& sets,
                             const std::vector<Poly>& factors,
                             const std::vector<Elem>& word) {
    if (sets.size() != factors.size())
        throw std::invalid_argument("one factor per variable required");
    const size_t m = sets.size();
    for (Elem c : word)
        if (!f.is_in_subfield(c))
            throw std::invalid_argument("membership oracle word must lie in F_{q^r}^n");

    // residue dimensions; a degree-0 factor makes the quotient ring trivial
    size_t total = 1;
    std::vector<size_t> rho(m);
    for (size_t i = 0; i < m; ++i) {
        rho[i] = static_cast<size_t>(factors[i].deg());
        total *= rho[i];
    }
    if (total == 0) return true;

    // per-variable inverses of (x - s) mod g_i, padded to length rho_i
    std::vector<std::vector<std::vector<Elem>>> invs(m);
    for (size_t i = 0; i < m; ++i) {
        invs[i].reserve(sets[i].size());
        for (Elem s : sets[i]) {
            if (factors[i].eval(s).is_zero())
                throw HypothesisError("g must not vanish at any evaluation point");
            Poly inv = inverse_mod(Poly::linear(f, s), factors[i]);
            std::vector<Elem> padded(rho[i], f.zero());
            for (int d = 0; d <= inv.deg(); ++d) padded[static_cast<size_t>(d)] = inv.coeff(d);
            invs[i].push_back(std::move(padded));
        }
    }

    std::vector<size_t> sizes(m);
    for (size_t i = 0; i < m; ++i) sizes[i] = sets[i].size();
    size_t n = 1;
    for (size_t sz : sizes) n *= sz;
    if (word.size() != n) throw std::invalid_argument("word length mismatch");

    std::vector<Elem> acc(total, f.zero());
    std::vector<size_t> idx(m, 0);
    for (size_t j = 0; j < n; ++j) {
        if (!word[j].is_zero()) {
            // accumulate word[j] * tensor of the per-variable inverse residues
            for (size_t flat = 0; flat < total; ++flat) {
                Elem term = word[j];
                size_t rem = flat;
                for (size_t i = m; i-- > 0;) {
                    size_t b = rem % rho[i];
                    rem /= rho[i];
                    term *= invs[i][idx[i]][b];
                }
                acc[flat] += term;
            }
        }
        for (size_t i = m; i-- > 0;) { // last coordinate fastest
            if (++idx[i] < sizes[i]) break;
            idx[i] = 0;
        }
    }
    for (Elem e : acc)
        if (!e.is_zero()) return false;
    return true;
}

LinearCode multivariate_goppa(const Field& f, const std::vector<std::vector<Elem>>& sets,
                              const std::vector<Poly>& factors) {
    if (sets.size() != factors.size())
        throw std::invalid_argument("one factor per variable required");
    Matrix h = Matrix::identity(f, 1);
    for (size_t i = 0; i < sets.size(); ++i) {
        require_distinct(sets[i], "S_" + std::to_string(i + 1));
        if (factors[i].deg() < 0) throw std::invalid_argument("zero factor");
        if (static_cast<size_t>(factors[i].deg()) > sets[i].size())
            throw HypothesisError("deg g_i must satisfy deg g_i <= |S_i|");
        std::vector<Elem> w = goppa_weights(sets[i], factors[i]);
        Matrix hi = scale_columns(
            vandermonde(f, sets[i], static_cast<size_t>(factors[i].deg())), w);
        h = kronecker(h, hi);
    }
    return subfield_subcode(LinearCode::from_parity_check(Alphabet::qt, h));
}

LinearCode acar(const Field& f, const std::vector<std::vector<Elem>>& sets,
                const std::vector<Poly>& factors) {
    if (sets.size() != factors.size())
        throw std::invalid_argument("one factor per variable required");
    const size_t m = sets.size();
    std::vector<size_t> nsz(m), rho(m);
    for (size_t i = 0; i < m; ++i) {
        require_distinct(sets[i], "S_" + std::to_string(i + 1));
        if (factors[i].deg() < 0) throw std::invalid_argument("zero factor");
        nsz[i] = sets[i].size();
        rho[i] = static_cast<size_t>(factors[i].deg());
        if (rho[i] > nsz[i]) throw HypothesisError("deg g_i must satisfy deg g_i <= |S_i|");
    }

    // per-variable dual-style weights y_i(s) = g_i(s) / prod_{s' != s}(s - s')
    std::vector<std::vector<Elem>> y(m);
    for (size_t i = 0; i < m; ++i) y[i] = grs_dual_multipliers(f, sets[i], factors[i]);

    auto points = enumerate_points(sets);
    const size_t n = points.size();

    // exponent set A_g: the full grid minus the top corner box
    std::vector<std::vector<size_t>> exps;
    std::vector<size_t> a(m, 0);
    size_t grid = 1;
    for (size_t i = 0; i < m; ++i) grid *= nsz[i];
    for (size_t it = 0; it < grid; ++it) {
        bool corner = true;
        for (size_t i = 0; i < m; ++i)
            if (a[i] < nsz[i] - rho[i]) {
                corner = false;
                break;
            }
        if (!corner) exps.push_back(a);
        for (size_t i = m; i-- > 0;) {
            if (++a[i] < nsz[i]) break;
            a[i] = 0;
        }
    }

    Matrix g(f, exps.size(), n);
    for (size_t r = 0; r < exps.size(); ++r)
        for (size_t j = 0; j < n; ++j) {
            // weight of the point times the monomial value
            Elem v = f.one();
            std::vector<size_t> idx(m);
            size_t rem = j;
            for (size_t i = m; i-- > 0;) {
                idx[i] = rem % nsz[i];
                rem /= nsz[i];
            }
            for (size_t i = 0; i < m; ++i)
                v *= y[i][idx[i]] * f.pow(points[j][i], static_cast<int64_t>(exps[r][i]));
            g.at(r, j) = v;
        }
    return LinearCode::from_generator(Alphabet::qt, g);
}

GseResult gse(const Field& f, const std::vector<Elem>& points,
              const std::vector<Elem>& mults, size_t k) {
    if (points.empty()) throw std::invalid_argument("empty evaluation point set");
    require_nonzero(mults, "GSE multipliers");
    if (mults.size() != points.size())
        throw std::invalid_argument("multiplier count must match point count");
    if (k > points.size()) throw HypothesisError("GSE dimension k must satisfy k <= n");
    Matrix v = skew_vandermonde(f, points, points.size());
    size_t rk = rank(v);
    if (rk < k)
        throw HypothesisError("rank of the skew Vandermonde on S is below the dimension k");
    Matrix gen(f, k, points.size());
    for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < points.size(); ++j) gen.at(i, j) = v.at(i, j) * mults[j];
    return {LinearCode::from_generator(Alphabet::qt, gen), rk == points.size(), rk};
}

GsgResult gsg(const Field& f, const std::vector<Elem>& points,
              const std::vector<Elem>& eta, const InvariantSpec& spec) {
    const size_t n = points.size();
    if (eta.size() != n) throw std::invalid_argument("eta must have one entry per point");
    require_nonzero(eta, "eta multipliers");
    if (!check_p_independent(f, points))
        throw HypothesisError("evaluation set S is not P-independent");

    SkewPoly g = make_invariant(f, spec);
    const uint32_t rho = spec.rho(f);
    const uint32_t t = f.t();

    std::vector<Elem> rdiag;
    rdiag.reserve(n);
    for (Elem s : points) {
        Elem gs = evaluate(g, s);
        if (gs.is_zero())
            throw HypothesisError("coprimality (X - s_j, g)_r = 1 fails: g vanishes on S");
        rdiag.push_back(f.inv(gs));
    }

    Matrix hprime(f, rho, n);
    for (size_t j = 0; j < n; ++j) {
        std::vector<Elem> q = qcoeffs_closed_form(f, spec, points[j]);
        for (uint32_t i = 0; i < rho; ++i) hprime.at(i, j) = q[i];
    }

    Matrix h(f, rho, n);
    for (uint32_t i = 0; i < rho; ++i)
        for (size_t j = 0; j < n; ++j) h.at(i, j) = hprime.at(i, j) * rdiag[j] * eta[j];

    bool zero_free = true;
    for (Elem s : points)
        if (s.is_zero()) zero_free = false;
    bool hypothesis = zero_free && check_inverse_p_independent(f, points);

    ParityFactors factors{hprime, rdiag, eta, false, {}, Matrix(f, 0, 0), Matrix(f, 0, 0)};
    if (hypothesis && rho > 0) {
        factors.reduced = true;
        Elem grho = g.lead();
        factors.Ddiag.reserve(n);
        for (Elem s : points)
            factors.Ddiag.push_back(grho * f.frobenius(f.partial_norm(rho - 1, s), 1));
        Matrix w(f, rho, n);
        for (size_t j = 0; j < n; ++j) {
            Elem si = f.inv(points[j]);
            Elem norm = f.one();
            Elem fa = si;
            for (uint32_t i = 0; i < rho; ++i) {
                w.at(i, j) = f.frobenius(norm, 1);
                norm = fa * norm;
                fa = f.frobenius(fa, 1);
            }
        }
        // systematic reduction of H': every row is a g-coefficient combination
        // of the pure norm-ratio rows, banded with stride t, so eliminating
        // upward yields H'' = W * diag(D) while T accumulates the row ops
        Matrix hpp = hprime;
        Matrix tmat = Matrix::identity(f, rho);
        Elem grho_inv = f.inv(grho);
        for (size_t i = rho; i-- > 0;) {
            for (uint32_t b = 1; i + static_cast<size_t>(b) * t <= rho - 1; ++b) {
                Elem c = g.coeff(rho - b * t);
                if (c.is_zero()) continue;
                Elem fac = c * grho_inv;
                const size_t src = i + static_cast<size_t>(b) * t;
                for (size_t j = 0; j < n; ++j) hpp.at(i, j) -= fac * hpp.at(src, j);
                for (size_t j = 0; j < rho; ++j) tmat.at(i, j) -= fac * tmat.at(src, j);
            }
        }
        for (uint32_t i = 0; i < rho; ++i)
            for (size_t j = 0; j < n; ++j)
                if (hpp.at(i, j) != w.at(i, j) * factors.Ddiag[j])
                    throw std::logic_error("systematic reduction failed to reach W*D");
        factors.Hreduced = std::move(w);
        factors.T = std::move(tmat);
    }

    LinearCode code = subfield_subcode(LinearCode::from_parity_check(Alphabet::qt, h));
    return {std::move(code), std::move(h), std::move(factors), hypothesis, std::move(g), spec};
}

bool gsg_gsrs_witness(const Field& f, const std::vector<Elem>& points,
                      const std::vector<Elem>& eta, const InvariantSpec& spec) {
    GsgResult res = gsg(f, points, eta, spec);
    if (!res.inverse_hypothesis)
        throw HypothesisError("witness requires S^{-1} P-independent and 0 not in S");
    const uint32_t rho = spec.rho(f);
    const size_t n = points.size();
    if (rho > n) throw HypothesisError("witness requires deg g <= n");
    if (rho == 0) {
        LinearCode rhs = subfield_subcode(dual(theta_code(zero_code(f, Alphabet::qt, n), 1)));
        return res.code == rhs;
    }

    Elem grho = res.g.lead();
    std::vector<Elem> sinv, weights;
    sinv.reserve(n);
    weights.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        Elem u = grho * f.frobenius(f.partial_norm(rho - 1, points[i]), 1) /
                 evaluate(res.g, points[i]) * eta[i];
        sinv.push_back(f.inv(points[i]));
        weights.push_back(f.frobenius(u, -1));
    }
    GseResult base = gse(f, sinv, weights, rho);
    if (!base.is_gsrs)
        throw std::logic_error("S^{-1} P-independent but skew Vandermonde is rank-deficient");
    LinearCode rhs = subfield_subcode(dual(theta_code(base.code, 1)));
    return res.code == rhs;
}

size_t GoppaInstance::n() const {
    size_t n = 1;
    for (const auto& s : sets) n *= s.size();
    return n;
}

std::vector<Elem> GoppaInstance::eta_per_point() const {
    const size_t nm = sets.back().size();
    std::vector<Elem> out;
    out.reserve(n());
    for (size_t j = 0; j < n(); ++j) out.push_back(eta[j % nm]);
    return out;
}

GoppaInstance make_goppa_instance(const Field& f, std::vector<std::vector<Elem>> sets,
                                  std::vector<Poly> commutative_factors,
                                  const InvariantSpec& skew_spec, std::vector<Elem> eta) {
    const size_t m = sets.size();
    if (m == 0) throw std::invalid_argument("at least one variable required");
    if (commutative_factors.size() + 1 != m)
        throw std::invalid_argument("need m-1 commutative factors plus the twisted one");
    for (const auto& s : sets)
        if (s.empty()) throw HypothesisError("every point set must be nonempty");

    for (size_t i = 0; i + 1 < m; ++i) {
        require_distinct(sets[i], "S_" + std::to_string(i + 1));
        const Poly& g = commutative_factors[i];
        if (g.is_zero()) throw std::invalid_argument("zero factor");
        if (static_cast<size_t>(g.deg()) > sets[i].size())
            throw HypothesisError("deg g_i must satisfy deg g_i <= |S_i|");
        for (Elem s : sets[i])
            if (g.eval(s).is_zero())
                throw HypothesisError("factor g_" + std::to_string(i + 1) +
                                      " vanishes on its point set");
    }

    const auto& sm = sets.back();
    for (Elem s : sm)
        if (s.is_zero())
            throw HypothesisError("S_m must not contain 0 (its inverses must exist)");
    if (!check_p_independent(f, sm)) throw HypothesisError("S_m is not P-independent");
    if (!check_inverse_p_independent(f, sm))
        throw HypothesisError("S_m must stay P-independent upon inverting each element");

    SkewPoly gm = make_invariant(f, skew_spec);
    if (gm.deg() < 1) throw HypothesisError("the twisted factor must be nonconstant");
    if (static_cast<size_t>(gm.deg()) > sm.size())
        throw HypothesisError("deg g_m must satisfy deg g_m <= |S_m|");
    for (Elem s : sm)
        if (evaluate(gm, s).is_zero())
            throw HypothesisError("coprimality (X_m - s, g_m)_r = 1 fails on S_m");

    if (eta.size() != sm.size())
        throw std::invalid_argument("eta must have one entry per element of S_m");
    require_nonzero(eta, "eta multipliers");

    GoppaFactorization gf = make_factorization(f, std::move(commutative_factors), skew_spec);
    return GoppaInstance{&f, std::move(sets), std::move(gf), std::move(eta)};
}

GsmgResult gsmg(const GoppaInstance& inst) {
    const Field& f = *inst.f;
    const size_t m = inst.m();

    Matrix hr = Matrix::identity(f, 1);
    LinearCode tensor = full_space(f, Alphabet::qt, 1);
    for (size_t i = 0; i + 1 < m; ++i) {
        const Poly& g = inst.gf.commutative[i];
        std::vector<Elem> w = goppa_weights(inst.sets[i], g);
        Matrix hi = scale_columns(commutative_quotient_matrix(f, g, inst.sets[i]), w);
        hr = kronecker(hr, hi);
        tensor = tensor_product(tensor, grs_via_goppa(f, inst.sets[i], g));
    }

    const auto& sm = inst.sets.back();
    const uint32_t rho_m = static_cast<uint32_t>(inst.gf.skew.deg());
    std::vector<Elem> rm, u, sinv, uw;
    for (Elem s : sm) {
        Elem gs = evaluate(inst.gf.skew, s);
        rm.push_back(f.inv(gs));
        sinv.push_back(f.inv(s));
    }
    Matrix hm(f, rho_m, sm.size());
    for (size_t j = 0; j < sm.size(); ++j) {
        std::vector<Elem> q = qcoeffs_closed_form(f, inst.gf.skew_spec, sm[j]);
        for (uint32_t i = 0; i < rho_m; ++i) hm.at(i, j) = q[i] * rm[j];
    }
    hr = kronecker(hr, hm);

    Elem grho = inst.gf.skew.lead();
    for (size_t j = 0; j < sm.size(); ++j) {
        Elem uj = grho * f.frobenius(f.partial_norm(rho_m - 1, sm[j]), 1) * rm[j] * inst.eta[j];
        u.push_back(uj);
        uw.push_back(f.frobenius(uj, -1));
    }
    GseResult base = gse(f, sinv, uw, rho_m);
    if (!base.is_gsrs)
        throw std::logic_error("S_m^{-1} P-independent but skew Vandermonde is rank-deficient");
    tensor = tensor_product(tensor, theta_code(base.code, 1));

    // E applies eta_{j_m}; with the last coordinate fastest this is a plain
    // per-column scaling by eta[j mod n_m]
    Matrix h = scale_columns(std::move(hr), inst.eta_per_point());
    LinearCode code = subfield_subcode(LinearCode::from_parity_check(Alphabet::qt, h));
    return {std::move(code), std::move(h), std::move(tensor)};
}

ParameterReport parameter_report(const LinearCode& code, uint64_t deg_g,
                                 const std::vector<uint32_t>& factor_degrees,
                                 bool k_upper_claimed, bool mds_claimed,
                                 std::optional<size_t> rank_h, uint64_t budget) {
    const Field& f = code.field();
    ParameterReport rep;
    rep.n = code.n();
    rep.k = code.dim();
    rep.k_lower = static_cast<int64_t>(rep.n) -
                  static_cast<int64_t>(f.t() / f.r()) * static_cast<int64_t>(deg_g);
    rep.k_upper = static_cast<int64_t>(rep.n) - static_cast<int64_t>(deg_g);
    rep.k_lower_ok = static_cast<int64_t>(rep.k) >= rep.k_lower;
    rep.k_upper_ok = static_cast<int64_t>(rep.k) <= rep.k_upper;
    rep.k_upper_claimed = k_upper_claimed;
    rep.rank_h = rank_h;

    uint32_t min_deg = 0;
    if (!factor_degrees.empty()) {
        min_deg = factor_degrees[0];
        for (uint32_t d : factor_degrees) min_deg = std::min(min_deg, d);
    }
    rep.d_bound = min_deg + 1;
    rep.mds_claimed = mds_claimed;
    rep.distance = min_distance(code, budget);
    if (rep.distance.kind == DistanceResult::Kind::exact) {
        rep.d_bound_ok = rep.distance.value >= rep.d_bound;
        rep.mds_ok = rep.distance.value == rep.n - rep.k + 1;
    }
    return rep;
}

} // namespace skewgoppa
