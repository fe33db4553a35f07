#pragma once

#include <cassert>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skewgoppa {

class Field;

/// Element of F_{q^t}.  The value is the base-p digit vector of the
/// polynomial-basis representation, packed as the integer sum digits[i]*p^i
/// (constant digit first).  That integer is also the serialized form used by
/// all file formats.  Elements carry a pointer to their field; mixing
/// elements of different Field instances is a programming error.
class Elem {
  public:
    Elem() = default; // null element; unusable until assigned

    uint32_t code() const { return v_; }
    const Field* field() const { return f_; }
    bool is_zero() const { return v_ == 0; }

    friend bool operator==(Elem a, Elem b) {
        assert(a.f_ == b.f_);
        return a.v_ == b.v_;
    }
    friend bool operator!=(Elem a, Elem b) { return !(a == b); }
    /// Orders by integer code; used for canonical sorting only.
    friend bool operator<(Elem a, Elem b) {
        assert(a.f_ == b.f_);
        return a.v_ < b.v_;
    }

    Elem operator+(Elem o) const;
    Elem operator-(Elem o) const;
    Elem operator-() const;
    Elem operator*(Elem o) const;
    Elem operator/(Elem o) const;
    Elem& operator+=(Elem o) { return *this = *this + o; }
    Elem& operator-=(Elem o) { return *this = *this - o; }
    Elem& operator*=(Elem o) { return *this = *this * o; }
    Elem& operator/=(Elem o) { return *this = *this / o; }

  private:
    friend class Field;
    Elem(const Field* f, uint32_t v) : f_(f), v_(v) {}

    const Field* f_ = nullptr;
    uint32_t v_ = 0;
};

/// A tower F_q <= F_{q^r} <= F_{q^t} with q = p^s, realized as
/// F_p[x]/(modulus) with deg modulus = s*t, together with the Frobenius
/// automorphism theta(a) = a^q of order t.  All operations are pure and the
/// object is immutable after construction, so concurrent use needs no
/// synchronization.
///
/// Field sizes are capped at q^t <= 2^20.  Multiplication uses a full table
/// for small fields and digit-vector arithmetic above that; inverses use a
/// table for q^t <= 65536 and an extended Euclidean computation otherwise.
class Field {
  public:
    /// Constructs the tower.  When `modulus` is omitted, picks the monic
    /// irreducible of degree s*t over F_p whose coefficient vector, read as a
    /// base-p integer with the constant digit lowest, is smallest.  Throws
    /// std::invalid_argument on non-prime p, r not dividing t, or a modulus
    /// that is non-monic, of wrong degree, or reducible.
    Field(uint32_t p, uint32_t s, uint32_t t, uint32_t r,
          std::optional<std::vector<uint32_t>> modulus = std::nullopt);

    Field(const Field&) = delete;
    Field& operator=(const Field&) = delete;

    uint32_t p() const { return p_; }
    uint32_t s() const { return s_; }
    uint32_t t() const { return t_; }
    uint32_t r() const { return r_; }
    uint64_t q() const { return q_; }
    /// |F_{q^t}| = p^(s*t).
    uint32_t order() const { return order_; }
    /// |F_{q^r}|.
    uint32_t subfield_order() const { return subfield_order_; }
    /// Degree s*t of the modulus over F_p.
    uint32_t ext_degree() const { return d_; }
    /// Monic modulus coefficients over F_p, constant first, length s*t+1.
    const std::vector<uint32_t>& modulus() const { return modulus_; }
    bool theta_is_identity() const { return t_ == 1; }

    Elem zero() const { return Elem(this, 0); }
    Elem one() const { return Elem(this, 1); }
    /// Element with the given integer code; throws std::out_of_range if
    /// code >= order().
    Elem elem(uint64_t code) const;
    /// The residue class of x, which generates the field over F_p.
    Elem x() const { return x_; }

    Elem from_digits(const std::vector<uint32_t>& digits) const;
    std::vector<uint32_t> digits(Elem a) const;

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const; // throws std::invalid_argument on zero
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, int64_t e) const;

    /// a^{q^i}; i may be negative and is reduced mod t (theta has order t).
    Elem frobenius(Elem a, int64_t i = 1) const;
    /// Trace onto F_{q^r}: sum of a^{(q^r)^i} for i = 0..t/r-1.
    Elem trace_to_subfield(Elem a) const;
    /// Partial norm N_i(a) = prod_{s<i} theta^s(a); N_0 = 1.
    Elem partial_norm(uint32_t i, Elem a) const;
    /// theta-conjugation ^b a = theta(b) * a * b^{-1}; throws on b = 0.
    Elem conjugate(Elem a, Elem b) const;
    /// Full orbit [a]_theta = { ^b a : b != 0 }, sorted by code.
    std::vector<Elem> conjugacy_class(Elem a) const;

    /// a in F_{q^r}, i.e. a^{q^r} = a.
    bool is_in_subfield(Elem a) const;
    /// a in F_q, i.e. a^q = a.
    bool is_in_base_field(Elem a) const;

    /// Coordinates of a in the fixed F_{q^r}-basis of F_{q^t} chosen at
    /// construction (powers of x(), with a greedy fallback if those were
    /// dependent).  Length t/r; entries lie in F_{q^r}.
    std::vector<Elem> expand_over_subfield(Elem a) const;
    /// Inverse of expand_over_subfield.
    Elem combine_from_subfield(const std::vector<Elem>& coords) const;
    /// The basis used by expand_over_subfield, length t/r.
    const std::vector<Elem>& subfield_expansion_basis() const { return expansion_basis_; }

    /// All elements of F_{q^r}, sorted by code.
    const std::vector<Elem>& subfield_elements() const { return subfield_elems_; }
    /// All elements of F_q, sorted by code.
    const std::vector<Elem>& base_field_elements() const { return base_elems_; }

    std::string describe() const; // e.g. "F_{2^3} tower p=2 s=1 t=3 r=1"

  private:
    uint32_t p_, s_, t_, r_, d_;
    uint64_t q_;
    uint32_t order_, subfield_order_;
    std::vector<uint32_t> modulus_;
    Elem x_;

    std::vector<uint32_t> mul_table_; // order^2 entries when order <= kMulTableMax
    std::vector<uint32_t> inv_table_; // order entries when order <= kInvTableMax
    // frob_img_[i][j] = code of theta^i(x^j), i in [0,t), j in [0,d)
    std::vector<std::vector<uint32_t>> frob_img_;
    std::vector<std::vector<uint32_t>> frob_table_; // per-element tables when small

    std::vector<Elem> subfield_elems_;
    std::vector<Elem> base_elems_;
    std::vector<Elem> subfield_fp_basis_;  // F_p-basis of F_{q^r}, size r*s
    std::vector<Elem> expansion_basis_;    // F_{q^r}-basis of F_{q^t}, size t/r
    std::vector<uint32_t> expand_inverse_; // d x d matrix over F_p, row-major

    static constexpr uint32_t kMulTableMax = 1024;
    static constexpr uint32_t kInvTableMax = 65536;
    static constexpr uint32_t kFrobTableMax = 65536;
    static constexpr uint64_t kOrderMax = 1u << 20;

    uint32_t mul_code(uint32_t a, uint32_t b) const;
    uint32_t mul_code_slow(uint32_t a, uint32_t b) const;
    uint32_t add_code(uint32_t a, uint32_t b) const;
    uint32_t inv_code(uint32_t a) const;
    uint32_t frob_code(uint32_t a, uint32_t i) const; // i in [0,t)
    void unpack(uint32_t code, uint32_t* out) const;
    uint32_t pack(const uint32_t* digits) const;
    void build_tables();
    void build_subfield_data();
};

inline Elem Elem::operator+(Elem o) const {
    assert(f_ && f_ == o.f_);
    return f_->add(*this, o);
}
inline Elem Elem::operator-(Elem o) const {
    assert(f_ && f_ == o.f_);
    return f_->sub(*this, o);
}
inline Elem Elem::operator-() const {
    assert(f_);
    return f_->neg(*this);
}
inline Elem Elem::operator*(Elem o) const {
    assert(f_ && f_ == o.f_);
    return f_->mul(*this, o);
}
inline Elem Elem::operator/(Elem o) const {
    assert(f_ && f_ == o.f_);
    return f_->div(*this, o);
}

inline Elem inv(Elem a) { return a.field()->inv(a); }
inline Elem pow(Elem a, int64_t e) { return a.field()->pow(a, e); }
inline Elem frobenius(Elem a, int64_t i = 1) { return a.field()->frobenius(a, i); }

} // namespace skewgoppa
