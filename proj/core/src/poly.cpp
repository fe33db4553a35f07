#include "skewgoppa/poly.hpp"

#include <stdexcept>

#include "skewgoppa/errors.hpp"

namespace skewgoppa {

Poly Poly::monomial(const Field& f, Elem a, size_t exp) {
    if (a.is_zero()) return Poly(f);
    std::vector<Elem> c(exp + 1, f.zero());
    c[exp] = a;
    return Poly(f, std::move(c));
}

Poly Poly::operator+(const Poly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) + o.coeff(i);
    return Poly(*f_, std::move(c));
}

Poly Poly::operator-(const Poly& o) const {
    std::vector<Elem> c(std::max(c_.size(), o.c_.size()), f_->zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = coeff(i) - o.coeff(i);
    return Poly(*f_, std::move(c));
}

Poly Poly::operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly(*f_);
    std::vector<Elem> c(c_.size() + o.c_.size() - 1, f_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    }
    return Poly(*f_, std::move(c));
}

Poly Poly::operator*(Elem a) const {
    std::vector<Elem> c = c_;
    for (auto& x : c) x *= a;
    return Poly(*f_, std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
        if (a.c_[i] != b.c_[i]) return false;
    return true;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * f_->inv(lead());
}

Elem Poly::eval(Elem a) const {
    Elem acc = f_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * a + c_[i];
    return acc;
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
    if (g.is_zero()) throw std::invalid_argument("polynomial division by zero");
    const Field& F = f.field();
    Poly r = f;
    std::vector<Elem> q(f.deg() >= g.deg() ? f.deg() - g.deg() + 1 : 0, F.zero());
    Elem lead_inv = F.inv(g.lead());
    while (!r.is_zero() && r.deg() >= g.deg()) {
        size_t k = static_cast<size_t>(r.deg() - g.deg());
        Elem c = r.lead() * lead_inv;
        q[k] = c;
        r = r - Poly::monomial(F, c, k) * g;
    }
    return {Poly(F, std::move(q)), r};
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly inverse_mod(const Poly& a, const Poly& m) {
    const Field& F = a.field();
    // extended Euclid: t_i * a = r_i (mod m)
    Poly r0 = m, r1 = divmod(a, m).second;
    Poly t0 = Poly::zero(F), t1 = Poly::one(F);
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.deg() != 0)
        throw HypothesisError("element is not invertible modulo g (factors are not coprime)");
    return divmod(t0 * F.inv(r0.lead()), m).second;
}

} // namespace skewgoppa
