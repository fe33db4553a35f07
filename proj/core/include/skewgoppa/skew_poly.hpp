#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "skewgoppa/field.hpp"

namespace skewgoppa {

/// Element of the Ore ring R = F_{q^t}[X;theta] with the twisted product
/// X*a = theta(a)*X.  Coefficient i is the coefficient of X^i; the zero
/// polynomial has an empty list and degree -1.
class SkewPoly {
  public:
    explicit SkewPoly(const Field& f) : f_(&f) {}
    SkewPoly(const Field& f, std::vector<Elem> coeffs) : f_(&f), c_(std::move(coeffs)) { trim(); }

    static SkewPoly zero(const Field& f) { return SkewPoly(f); }
    static SkewPoly one(const Field& f) { return SkewPoly(f, {f.one()}); }
    static SkewPoly constant(const Field& f, Elem a) { return SkewPoly(f, {a}); }
    static SkewPoly monomial(const Field& f, Elem a, size_t exp);
    /// X - s
    static SkewPoly linear(const Field& f, Elem s) { return SkewPoly(f, {f.neg(s), f.one()}); }

    const Field& field() const { return *f_; }
    bool is_zero() const { return c_.empty(); }
    int deg() const { return static_cast<int>(c_.size()) - 1; }
    Elem coeff(size_t i) const { return i < c_.size() ? c_[i] : f_->zero(); }
    Elem lead() const { return c_.back(); }
    const std::vector<Elem>& coeffs() const { return c_; }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    /// Twisted product; deg(fg) = deg f + deg g for nonzero operands.
    SkewPoly operator*(const SkewPoly& o) const;
    friend bool operator==(const SkewPoly& a, const SkewPoly& b);
    friend bool operator!=(const SkewPoly& a, const SkewPoly& b) { return !(a == b); }

    /// Left-scales by the inverse of the leading coefficient.
    SkewPoly monic() const;

  private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    const Field* f_;
    std::vector<Elem> c_;
};

/// Left scalar multiple a*f (coefficients scale on the left).
SkewPoly scale_left(Elem a, const SkewPoly& f);

/// f = q*g + r with deg r < deg g; throws on g = 0.
std::pair<SkewPoly, SkewPoly> right_divmod(const SkewPoly& f, const SkewPoly& g);
/// f = g*q + r with deg r < deg g; throws on g = 0.
std::pair<SkewPoly, SkewPoly> left_divmod(const SkewPoly& f, const SkewPoly& g);
/// Greatest common right divisor, monic.
SkewPoly rgcd(SkewPoly f, SkewPoly g);
/// Monic least common left multiple; every input right-divides the result.
SkewPoly lclm(const SkewPoly& f, const SkewPoly& g);
SkewPoly lclm(const std::vector<SkewPoly>& polys);
/// True when r right-divides f (zero right remainder).
bool right_divides(const SkewPoly& r, const SkewPoly& f);

/// Skew evaluation g(a) = sum_i g_i N_i(a); coincides with the remainder of
/// right division by X - a.
Elem evaluate(const SkewPoly& g, Elem a);

/// Decomposition of an invariant polynomial g = a * v(X^t) * X^l with
/// v over F_q, v_0 = 1, and v's last coefficient nonzero.
struct InvariantSpec {
    Elem a;
    std::vector<Elem> v; // coefficients of v as a polynomial in X^t
    uint32_t l = 0;

    uint32_t rho(const Field& f) const {
        return f.t() * static_cast<uint32_t>(v.size() - 1) + l;
    }
};

/// Validates and normalizes a spec: a != 0, v coefficients in F_q, zero low
/// coefficients of v folded into l, and v_0 scaled into a so that v_0 = 1.
InvariantSpec make_invariant_spec(const Field& f, Elem a, std::vector<Elem> v, uint32_t l);

/// Closed-form invariance test: returns the decomposition when g has nonzero
/// coefficients only at exponents l, l+t, ..., with all ratios to the lowest
/// coefficient in F_q, and nullopt otherwise.  Throws on the zero polynomial.
std::optional<InvariantSpec> is_invariant(const SkewPoly& g);

/// Expands a spec into the polynomial a * v(X^t) * X^l.
SkewPoly make_invariant(const Field& f, const InvariantSpec& spec);

/// Definitional invariance gR = Rg, decided by checking that g*b is a left
/// multiple of g for every field element b and that g*X is too.  Exponential
/// in nothing but |F|; used as the second route against is_invariant.
bool is_invariant_definitional(const SkewPoly& g);

/// True when deg lclm { X - s : s in S } = |S|.
bool check_p_independent(const Field& f, const std::vector<Elem>& S);
/// True when the set of inverses is P-independent; throws on a zero element.
bool check_inverse_p_independent(const Field& f, const std::vector<Elem>& S);
/// The sufficient condition: S is P-independent and no theta-conjugacy class
/// contributes more than two elements.
bool inverse_p_independence_sufficient(const Field& f, const std::vector<Elem>& S);

/// The unique h with deg h < deg g and h*(X-s) - 1 in Rg, together with
/// r = g(s).  Precondition: g invariant, nonconstant; throws HypothesisError
/// when g(s) = 0 (the coprimality hypothesis fails).
std::pair<SkewPoly, Elem> linear_left_annihilator(Elem s, const SkewPoly& g);

/// Quotient coefficients q_0..q_{rho-1} of g = q*(X-s) + g(s) for invariant
/// g, computed by the norm-ratio closed form; falls back to right division
/// at s = 0 where the ratio form would divide by zero.
std::vector<Elem> qcoeffs_closed_form(const Field& f, const InvariantSpec& spec, Elem s);

/// Cross-check route for the lclm of linear factors, built by the rule
/// lclm(f, X-s) = (X - ^{f(s)}s) * f when f(s) != 0 (and f itself when
/// f(s) = 0).  Independent of the extended-Euclidean path.
SkewPoly lclm_linear_incremental(const Field& f, const std::vector<Elem>& points);

} // namespace skewgoppa
