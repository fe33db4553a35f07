#pragma once

#include <utility>
#include <vector>

#include "skewgoppa/field.hpp"

namespace skewgoppa {

/// Ordinary commutative polynomial over F_{q^t}, coefficient i = coefficient
/// of x^i.  The zero polynomial has an empty coefficient list and degree -1.
class Poly {
  public:
    explicit Poly(const Field& f) : f_(&f) {}
    Poly(const Field& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static Poly zero(const Field& f) { return Poly(f); }
    static Poly one(const Field& f) { return Poly(f, {f.one()}); }
    static Poly constant(const Field& f, Elem a) { return Poly(f, {a}); }
    static Poly monomial(const Field& f, Elem a, size_t exp);
    /// x - s
    static Poly linear(const Field& f, Elem s) { return Poly(f, {f.neg(s), f.one()}); }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
    Elem lead() const { return c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(Elem a) const;
    friend bool operator==(const Poly& a, const Poly& b);
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly monic() const;
    Elem eval(Elem a) const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const Field* f_;
    std::vector<Elem> c_;
};

/// f = q*g + r with deg r < deg g; throws on g = 0.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly gcd(Poly a, Poly b); // monic
/// Inverse of a modulo m; throws HypothesisError if gcd(a, m) != 1.
Poly inverse_mod(const Poly& a, const Poly& m);

} // namespace skewgoppa
