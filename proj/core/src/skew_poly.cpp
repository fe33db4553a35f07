#include "skewgoppa/skew_poly.hpp"

#include <map>
#include <stdexcept>

#include "skewgoppa/errors.hpp"

namespace skewgoppa {

SkewPoly SkewPoly::monomial(const Field& f, Elem a, size_t exp) {
    if (a.is_zero()) return SkewPoly(f);
    std::vector<Elem> c(exp + 1, f.zero());
    c[exp] = a;
    return SkewPoly(f, std::move(c));
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return SkewPoly(*f_, std::move(c));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return SkewPoly(*f_, std::move(c));
}

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    if (f_ != o.f_) throw std::invalid_argument("skew product of polynomials over distinct fields");
    if (is_zero() || o.is_zero()) return SkewPoly(*f_);
    // (a X^i)(b X^j) = a theta^i(b) X^{i+j}
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) {
            if (o.c_[j].is_zero()) continue;
            c[i + j] += c_[i] * f_->frobenius(o.c_[j], static_cast<int64_t>(i));
        }
    }
    return SkewPoly(*f_, std::move(c));
}

bool operator==(const SkewPoly& a, const SkewPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) return *this;
    return scale_left(f_->inv(lead()), *this);
}

SkewPoly scale_left(Elem a, const SkewPoly& f) {
    std::vector<Elem> c = f.coeffs();
    for (auto& x : c) x = a * x;
    return SkewPoly(f.field(), std::move(c));
}

std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("skew division by zero");
    const Field& F = f.field();
    SkewPoly r = f;
    std::vector<Elem> q(f.deg() >= g.deg() ? f.deg() - g.deg() + 1 : 0, F.zero());
    while (!r.is_zero() && r.deg() >= g.deg()) {
        size_t k = static_cast<size_t>(r.deg() - g.deg());
        // (c X^k) * g has leading coefficient c * theta^k(g_lead)
        Elem c = r.lead() / F.frobenius(g.lead(), static_cast<int64_t>(k));
        q[k] = c;
        r = r - SkewPoly::monomial(F, c, k) * g;
    }
    return {SkewPoly(F, std::move(q)), r};
}

std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& f, const SkewPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("skew division by zero");
    const Field& F = f.field();
    SkewPoly r = f;
    std::vector<Elem> q(f.deg() >= g.deg() ? f.deg() - g.deg() + 1 : 0, F.zero());
    const int m = g.deg();
    while (!r.is_zero() && r.deg() >= m) {
        size_t k = static_cast<size_t>(r.deg() - m);
        // g * (c X^k) has leading coefficient g_lead * theta^m(c)
        Elem c = F.frobenius(r.lead() / g.lead(), -static_cast<int64_t>(m));
        q[k] = c;
        r = r - g * SkewPoly::monomial(F, c, k);
    }
    return {SkewPoly(F, std::move(q)), r};
}

SkewPoly rgcd(SkewPoly f, SkewPoly g) {
    while (!g.is_zero()) {
        SkewPoly r = right_divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    return f.monic();
}

SkewPoly lclm(const SkewPoly& f, const SkewPoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("lclm of the zero polynomial");
    const Field& F = f.field();
    // extended right Euclid tracking the left cofactors of f:
    // r_i = u_i * f + v_i * g; at r_N = 0, u_N * f is the lclm.
    SkewPoly r0 = f, r1 = g;
    SkewPoly u0 = SkewPoly::one(F), u1 = SkewPoly::zero(F);
    int steps = 0;
    while (!r1.is_zero()) {
        auto [q, r2] = right_divmod(r0, r1);
        SkewPoly u2 = u0 - q * u1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        u0 = std::move(u1);
        u1 = std::move(u2);
        ++steps;
    }
    SkewPoly m = (u1 * f).monic();
    // deg lclm = deg f + deg g - deg rgcd; r0 is the right gcd here
    if (steps == 0 || m.deg() != f.deg() + g.deg() - r0.deg())
        throw std::logic_error("lclm degree formula violated");
    return m;
}

SkewPoly lclm(const std::vector<SkewPoly>& polys) {
    if (polys.empty()) throw std::invalid_argument("lclm of an empty list");
    SkewPoly acc = polys.front().monic();
    if (acc.is_zero()) throw std::invalid_argument("lclm of the zero polynomial");
    for (size_t i = 1; i < polys.size(); ++i) acc = lclm(acc, polys[i]);
    return acc;
}

bool right_divides(const SkewPoly& r, const SkewPoly& f) {
    return right_divmod(f, r).second.is_zero();
}

Elem evaluate(const SkewPoly& g, Elem a) {
    const Field& F = g.field();
    Elem val = F.zero();
    Elem norm = F.one(); // N_i(a)
    Elem fa = a;         // theta^i(a)
    for (int i = 0; i <= g.deg(); ++i) {
        val += g.coeff(static_cast<size_t>(i)) * norm;
        norm = fa * norm;
        fa = F.frobenius(fa, 1);
    }
    return val;
}

InvariantSpec make_invariant_spec(const Field& f, Elem a, std::vector<Elem> v, uint32_t l) {
    if (a.is_zero()) throw std::invalid_argument("invariant spec with a = 0");
    if (v.empty()) throw std::invalid_argument("invariant spec with empty v");
    while (v.size() > 1 && v.back().is_zero()) v.pop_back();
    if (v.back().is_zero()) throw std::invalid_argument("invariant spec with v = 0");
    // fold zero low coefficients of v into the X^l factor
    size_t drop = 0;
    while (v[drop].is_zero()) ++drop;
    if (drop) {
        v.erase(v.begin(), v.begin() + static_cast<long>(drop));
        l += f.t() * static_cast<uint32_t>(drop);
    }
    for (Elem c : v)
        if (!f.is_in_base_field(c))
            throw std::invalid_argument("invariant spec coefficients of v must lie in F_q");
    if (v[0] != f.one()) {
        Elem v0 = v[0];
        a = a * v0;
        Elem v0inv = f.inv(v0);
        for (auto& c : v) c = c * v0inv;
    }
    return InvariantSpec{a, std::move(v), l};
}

std::optional<InvariantSpec> is_invariant(const SkewPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("invariance test on the zero polynomial");
    const Field& F = g.field();
    const uint32_t t = F.t();
    uint32_t l = 0;
    while (g.coeff(l).is_zero()) ++l;
    const uint32_t rho = static_cast<uint32_t>(g.deg());
    if ((rho - l) % t != 0) return std::nullopt;
    Elem a = g.coeff(l);
    Elem ainv = F.inv(a);
    std::vector<Elem> v;
    for (uint32_t u = l; u <= rho; ++u) {
        Elem c = g.coeff(u);
        if ((u - l) % t != 0) {
            if (!c.is_zero()) return std::nullopt;
            continue;
        }
        Elem ratio = ainv * c;
        if (!F.is_in_base_field(ratio)) return std::nullopt;
        v.push_back(ratio);
    }
    return InvariantSpec{a, std::move(v), l};
}

SkewPoly make_invariant(const Field& f, const InvariantSpec& spec) {
    if (spec.a.is_zero()) throw std::invalid_argument("invariant spec with a = 0");
    std::vector<Elem> c(spec.rho(f) + 1, f.zero());
    for (size_t b = 0; b < spec.v.size(); ++b) c[spec.l + b * f.t()] = spec.a * spec.v[b];
    return SkewPoly(f, std::move(c));
}

bool is_invariant_definitional(const SkewPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("invariance test on the zero polynomial");
    const Field& F = g.field();
    for (uint32_t b = 0; b < F.order(); ++b)
        if (!right_divides(g, g * SkewPoly::constant(F, F.elem(b)))) return false;
    return right_divides(g, g * SkewPoly::monomial(F, F.one(), 1));
}

bool check_p_independent(const Field& f, const std::vector<Elem>& S) {
    if (S.empty()) return true;
    std::vector<SkewPoly> factors;
    factors.reserve(S.size());
    for (Elem s : S) factors.push_back(SkewPoly::linear(f, s));
    return lclm(factors).deg() == static_cast<int>(S.size());
}

bool check_inverse_p_independent(const Field& f, const std::vector<Elem>& S) {
    std::vector<Elem> inv;
    inv.reserve(S.size());
    for (Elem s : S) {
        if (s.is_zero()) throw std::invalid_argument("inverse P-independence of a set containing 0");
        inv.push_back(f.inv(s));
    }
    return check_p_independent(f, inv);
}

bool inverse_p_independence_sufficient(const Field& f, const std::vector<Elem>& S) {
    if (!check_p_independent(f, S)) return false;
    // conjugacy classes of nonzero elements are the norm fibers, so count
    // per-class membership by the full norm N_t
    std::map<uint32_t, int> per_class;
    for (Elem s : S) {
        if (s.is_zero()) return false;
        if (++per_class[f.partial_norm(f.t(), s).code()] > 2) return false;
    }
    return true;
}

std::pair<SkewPoly, Elem> linear_left_annihilator(Elem s, const SkewPoly& g) {
    const Field& F = g.field();
    if (g.deg() < 1) throw std::invalid_argument("annihilator requires a nonconstant g");
    if (!is_invariant(g)) throw std::invalid_argument("annihilator requires an invariant g");
    auto [q, rem] = right_divmod(g, SkewPoly::linear(F, s));
    Elem r = rem.coeff(0);
    if (r.is_zero())
        throw HypothesisError("coprimality (X - s, g)_r = 1 fails: g(s) = 0");
    return {scale_left(F.neg(F.inv(r)), q), r};
}

std::vector<Elem> qcoeffs_closed_form(const Field& f, const InvariantSpec& spec, Elem s) {
    const uint32_t t = f.t();
    const uint32_t rho = spec.rho(f);
    SkewPoly g = make_invariant(f, spec);
    if (s.is_zero()) {
        // the ratio form divides by N_{i+1}(0) = 0; the division algorithm is total
        auto q = right_divmod(g, SkewPoly::linear(f, s)).first;
        std::vector<Elem> out(rho, f.zero());
        for (uint32_t i = 0; i < rho; ++i) out[i] = q.coeff(i);
        return out;
    }
    std::vector<Elem> norms(rho + 1, f.one()); // N_0..N_rho at s
    {
        Elem fa = s;
        for (uint32_t i = 0; i < rho; ++i) {
            norms[i + 1] = fa * norms[i];
            fa = f.frobenius(fa, 1);
        }
    }
    std::vector<Elem> out(rho, f.zero());
    for (uint32_t i = 0; i < rho; ++i) {
        Elem acc = f.zero();
        for (uint32_t b = 0; b <= (rho - i - 1) / t; ++b) {
            Elem gc = g.coeff(rho - b * t);
            if (gc.is_zero()) continue;
            acc += gc * norms[rho - b * t] / norms[i + 1];
        }
        out[i] = acc;
    }
    return out;
}

SkewPoly lclm_linear_incremental(const Field& f, const std::vector<Elem>& points) {
    if (points.empty()) throw std::invalid_argument("lclm of an empty list");
    SkewPoly acc = SkewPoly::linear(f, points.front());
    for (size_t i = 1; i < points.size(); ++i) {
        Elem s = points[i];
        Elem fs = evaluate(acc, s);
        if (fs.is_zero()) continue; // X - s already right-divides acc
        acc = SkewPoly::linear(f, f.conjugate(s, fs)) * acc;
    }
    return acc.monic();
}

} // namespace skewgoppa
