#include "skewgoppa/multi_ore.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "skewgoppa/errors.hpp"

namespace skewgoppa {

MultiOrePoly MultiOrePoly::one(const Field& f, size_t vars) {
    return constant(f, vars, f.one());
}

MultiOrePoly MultiOrePoly::constant(const Field& f, size_t vars, Elem a) {
    MultiOrePoly p(f, vars);
    p.add_term(Exp(vars, 0), a);
    return p;
}

MultiOrePoly MultiOrePoly::monomial(const Field& f, size_t vars, Exp e, Elem a) {
    if (e.size() != vars) throw std::invalid_argument("exponent vector length mismatch");
    MultiOrePoly p(f, vars);
    p.add_term(e, a);
    return p;
}

MultiOrePoly MultiOrePoly::variable(const Field& f, size_t vars, size_t var) {
    if (var >= vars) throw std::invalid_argument("variable index out of range");
    Exp e(vars, 0);
    e[var] = 1;
    return monomial(f, vars, e, f.one());
}

Elem MultiOrePoly::coeff(const Exp& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? f_->zero() : it->second;
}

int MultiOrePoly::degree_in(size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
    return d;
}

void MultiOrePoly::add_term(const Exp& e, Elem c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiOrePoly MultiOrePoly::operator+(const MultiOrePoly& o) const {
    if (f_ != o.f_ || m_ != o.m_) throw std::invalid_argument("Ore sum dimension mismatch");
    MultiOrePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

MultiOrePoly MultiOrePoly::operator-(const MultiOrePoly& o) const {
    if (f_ != o.f_ || m_ != o.m_) throw std::invalid_argument("Ore sum dimension mismatch");
    MultiOrePoly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, f_->neg(c));
    return out;
}

MultiOrePoly MultiOrePoly::operator*(const MultiOrePoly& o) const {
    if (f_ != o.f_ || m_ != o.m_) throw std::invalid_argument("Ore product dimension mismatch");
    MultiOrePoly out(*f_, m_);
    Exp e(m_);
    for (const auto& [eu, cu] : terms_) {
        const uint32_t twist = eu[m_ - 1]; // X_m-degree of the left monomial
        for (const auto& [ew, cw] : o.terms_) {
            for (size_t i = 0; i < m_; ++i) e[i] = eu[i] + ew[i];
            out.add_term(e, cu * f_->frobenius(cw, twist));
        }
    }
    return out;
}

bool operator==(const MultiOrePoly& a, const MultiOrePoly& b) {
    if (a.f_ != b.f_ || a.m_ != b.m_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib)
        if (ia->first != ib->first || ia->second != ib->second) return false;
    return true;
}

bool is_central(const MultiOrePoly& f) {
    const Field& F = f.field();
    for (const auto& [e, c] : f.terms()) {
        if (e.back() % F.t() != 0) return false;
        if (!F.is_in_base_field(c)) return false;
    }
    return true;
}

bool is_central_definitional(const MultiOrePoly& f) {
    const Field& F = f.field();
    for (uint32_t b = 0; b < F.order(); ++b) {
        MultiOrePoly cb = MultiOrePoly::constant(F, f.vars(), F.elem(b));
        if (f * cb != cb * f) return false;
    }
    for (size_t v = 0; v < f.vars(); ++v) {
        MultiOrePoly xv = MultiOrePoly::variable(F, f.vars(), v);
        if (f * xv != xv * f) return false;
    }
    return true;
}

MultiOrePoly embed_univariate(const Poly& g, size_t vars, size_t var) {
    MultiOrePoly out(g.field(), vars);
    MultiOrePoly::Exp e(vars, 0);
    for (int i = 0; i <= g.deg(); ++i) {
        e[var] = static_cast<uint32_t>(i);
        out.add_term(e, g.coeff(static_cast<size_t>(i)));
    }
    return out;
}

MultiOrePoly embed_skew(const SkewPoly& g, size_t vars) {
    MultiOrePoly out(g.field(), vars);
    MultiOrePoly::Exp e(vars, 0);
    for (int i = 0; i <= g.deg(); ++i) {
        e[vars - 1] = static_cast<uint32_t>(i);
        out.add_term(e, g.coeff(static_cast<size_t>(i)));
    }
    return out;
}

uint64_t GoppaFactorization::product_degree() const {
    uint64_t d = static_cast<uint64_t>(skew.deg());
    for (const Poly& g : commutative) d *= static_cast<uint64_t>(g.deg());
    return d;
}

std::vector<uint32_t> GoppaFactorization::factor_degrees() const {
    std::vector<uint32_t> out;
    for (const Poly& g : commutative) out.push_back(static_cast<uint32_t>(g.deg()));
    out.push_back(static_cast<uint32_t>(skew.deg()));
    return out;
}

GoppaFactorization make_factorization(const Field& f, std::vector<Poly> commutative,
                                      const SkewPoly& skew) {
    for (const Poly& g : commutative)
        if (g.is_zero()) throw std::invalid_argument("zero factor in Goppa factorization");
    if (skew.is_zero()) throw std::invalid_argument("zero twisted factor");
    auto spec = is_invariant(skew);
    if (!spec)
        throw HypothesisError("the twisted factor g_m is not invariant (gR != Rg)");
    return GoppaFactorization{&f, std::move(commutative), skew, *spec};
}

GoppaFactorization make_factorization(const Field& f, std::vector<Poly> commutative,
                                      const InvariantSpec& skew_spec) {
    return make_factorization(f, std::move(commutative), make_invariant(f, skew_spec));
}

MultiOrePoly expand_product(const GoppaFactorization& gf) {
    const Field& F = *gf.f;
    const size_t m = gf.m();
    MultiOrePoly acc = MultiOrePoly::one(F, m);
    for (size_t i = 0; i < gf.commutative.size(); ++i)
        acc = acc * embed_univariate(gf.commutative[i], m, i);
    return acc * embed_skew(gf.skew, m);
}

MultiOrePoly assemble_h(const GoppaFactorization& gf, const std::vector<Elem>& point) {
    const Field& F = *gf.f;
    const size_t m = gf.m();
    if (point.size() != m) throw std::invalid_argument("point arity mismatch");
    MultiOrePoly acc = MultiOrePoly::one(F, m);
    for (size_t i = 0; i + 1 < m; ++i) {
        const Poly& g = gf.commutative[i];
        Elem r = g.eval(point[i]);
        if (r.is_zero())
            throw HypothesisError("factor g_" + std::to_string(i + 1) +
                                  " vanishes at its coordinate");
        Poly q = divmod(g, Poly::linear(F, point[i])).first;
        Poly h = q * F.neg(F.inv(r));
        acc = acc * embed_univariate(h, m, i);
    }
    SkewPoly h = linear_left_annihilator(point[m - 1], gf.skew).first;
    return acc * embed_skew(h, m);
}

std::vector<std::vector<Elem>> enumerate_points(const std::vector<std::vector<Elem>>& sets) {
    size_t n = 1;
    for (const auto& s : sets) n *= s.size();
    std::vector<std::vector<Elem>> out;
    out.reserve(n);
    std::vector<size_t> idx(sets.size(), 0);
    for (size_t it = 0; it < n; ++it) {
        std::vector<Elem> point;
        point.reserve(sets.size());
        for (size_t i = 0; i < sets.size(); ++i) point.push_back(sets[i][idx[i]]);
        out.push_back(std::move(point));
        for (size_t i = sets.size(); i-- > 0;) { // last coordinate fastest
            if (++idx[i] < sets[i].size()) break;
            idx[i] = 0;
        }
    }
    return out;
}

bool membership_oracle(const GoppaFactorization& gf,
                       const std::vector<std::vector<Elem>>& points,
                       const std::vector<Elem>& eta, const std::vector<Elem>& word) {
    const Field& F = *gf.f;
    if (points.size() != word.size() || points.size() != eta.size())
        throw std::invalid_argument("membership oracle length mismatch");
    for (Elem c : word)
        if (!F.is_in_subfield(c))
            throw std::invalid_argument("membership oracle word must lie in F_{q^r}^n");
    MultiOrePoly sum(F, gf.m());
    for (size_t j = 0; j < points.size(); ++j) {
        if (word[j].is_zero()) continue;
        MultiOrePoly hj = assemble_h(gf, points[j]);
        MultiOrePoly scaled = MultiOrePoly::constant(F, gf.m(), word[j] * eta[j]) * hj;
        sum = sum + scaled;
    }
    return sum.is_zero();
}

std::string to_text(const MultiOrePoly& f) {
    // graded lexicographic, X_1 heaviest
    std::vector<std::pair<MultiOrePoly::Exp, Elem>> terms(f.terms().begin(), f.terms().end());
    auto grlex = [](const auto& a, const auto& b) {
        uint64_t ta = 0, tb = 0;
        for (uint32_t e : a.first) ta += e;
        for (uint32_t e : b.first) tb += e;
        if (ta != tb) return ta > tb;
        return a.first > b.first;
    };
    std::sort(terms.begin(), terms.end(), grlex);
    std::ostringstream os;
    for (const auto& [e, c] : terms) {
        os << c.code();
        for (uint32_t x : e) os << ' ' << x;
        os << '\n';
    }
    return os.str();
}

} // namespace skewgoppa
