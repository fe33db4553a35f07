#pragma once

#include <map>
#include <string>
#include <vector>

#include "skewgoppa/poly.hpp"
#include "skewgoppa/skew_poly.hpp"

namespace skewgoppa {

/// Element of the almost-commutative multivariate Ore ring
/// F_{q^t}[X_1,...,X_m;theta]: all variables commute with each other, only
/// X_m twists constants (X_m * a = theta(a) * X_m).  Sparse exponent-map
/// representation; zero coefficients are never stored.
class MultiOrePoly {
  public:
    using Exp = std::vector<uint32_t>;

    MultiOrePoly(const Field& f, size_t vars) : f_(&f), m_(vars) {}

    static MultiOrePoly zero(const Field& f, size_t vars) { return MultiOrePoly(f, vars); }
    static MultiOrePoly one(const Field& f, size_t vars);
    static MultiOrePoly constant(const Field& f, size_t vars, Elem a);
    static MultiOrePoly monomial(const Field& f, size_t vars, Exp e, Elem a);
    /// X_{var+1} (0-based index).
    static MultiOrePoly variable(const Field& f, size_t vars, size_t var);

    const Field& field() const { return *f_; }
    size_t vars() const { return m_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Exp, Elem>& terms() const { return terms_; }
    Elem coeff(const Exp& e) const;
    /// Largest exponent of X_{var+1} over all terms (-1 when zero).
    int degree_in(size_t var) const;

    MultiOrePoly operator+(const MultiOrePoly& o) const;
    MultiOrePoly operator-(const MultiOrePoly& o) const;
    /// Almost-commutative product: passing a monomial with X_m-degree d over
    /// a coefficient applies theta^d.
    MultiOrePoly operator*(const MultiOrePoly& o) const;
    friend bool operator==(const MultiOrePoly& a, const MultiOrePoly& b);
    friend bool operator!=(const MultiOrePoly& a, const MultiOrePoly& b) { return !(a == b); }

    void add_term(const Exp& e, Elem c);

  private:
    const Field* f_;
    size_t m_;
    std::map<Exp, Elem> terms_;
};

/// Center membership by the closed form: every coefficient in F_q and every
/// exponent vector with last entry divisible by t.
bool is_central(const MultiOrePoly& f);
/// Center membership by definition: commutes with every constant and every
/// variable.  Second route for the closed form.
bool is_central_definitional(const MultiOrePoly& f);

/// g_i as a polynomial in X_{var+1} inside the m-variable ring (commutative
/// variable expected for var < m-1).
MultiOrePoly embed_univariate(const Poly& g, size_t vars, size_t var);
/// g_m into the twisted variable X_m.
MultiOrePoly embed_skew(const SkewPoly& g, size_t vars);

/// The factorization g = g_1 ... g_m with g_i in F_{q^t}[X_i] commutative for
/// i < m and g_m invariant in F_{q^t}[X_m;theta].  The degree convention is
/// the product deg g = prod_i deg g_i, which every parameter formula uses;
/// the total degree is deliberately not used anywhere.
struct GoppaFactorization {
    const Field* f;
    std::vector<Poly> commutative; // g_1..g_{m-1}
    SkewPoly skew;                 // g_m
    InvariantSpec skew_spec;

    size_t m() const { return commutative.size() + 1; }
    uint64_t product_degree() const;
    std::vector<uint32_t> factor_degrees() const;
};

/// Validates the factor list: all factors nonzero, g_m invariant.
GoppaFactorization make_factorization(const Field& f, std::vector<Poly> commutative,
                                      const SkewPoly& skew);
GoppaFactorization make_factorization(const Field& f, std::vector<Poly> commutative,
                                      const InvariantSpec& skew_spec);

/// The expanded product g_1 * ... * g_m.
MultiOrePoly expand_product(const GoppaFactorization& gf);

/// h_j = h_{1 j_1} ... h_{m j_m} where h_{i j_i} inverts X_i - s_{i j_i}
/// modulo g_i; throws HypothesisError when some g_i vanishes at its
/// coordinate.  Per-variable degrees of the result are < deg g_i.
MultiOrePoly assemble_h(const GoppaFactorization& gf, const std::vector<Elem>& point);

/// Row-major point enumeration of S_1 x ... x S_m with the last coordinate
/// varying fastest, matching Kronecker column order.
std::vector<std::vector<Elem>> enumerate_points(const std::vector<std::vector<Elem>>& sets);

/// Definitional code membership: sum_j c_j eta_j h_j = 0 in the Ore ring.
/// `eta` is per point (length n); word coordinates must lie in F_{q^r}.
bool membership_oracle(const GoppaFactorization& gf,
                       const std::vector<std::vector<Elem>>& points,
                       const std::vector<Elem>& eta, const std::vector<Elem>& word);

/// Deterministic text: one term per line "coeff e_1 ... e_m", graded
/// lexicographic with X_1 heaviest.
std::string to_text(const MultiOrePoly& f);

} // namespace skewgoppa
