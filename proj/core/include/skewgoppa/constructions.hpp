#pragma once

#include <optional>
#include <vector>

#include "skewgoppa/code.hpp"
#include "skewgoppa/multi_ore.hpp"

namespace skewgoppa {

// ---- commutative evaluation families ----

/// GRS_k(S, v): rows of the classical Vandermonde times diag(v).  Points must
/// be distinct and multipliers nonzero; k <= |S|.
LinearCode grs(const Field& f, const std::vector<Elem>& points,
               const std::vector<Elem>& mults, size_t k);

/// GRS_{deg g}(S, g): the variant weighted by g(s_i)^{-1}; its generator is a
/// parity check for the classical Goppa code.
LinearCode grs_via_goppa(const Field& f, const std::vector<Elem>& points, const Poly& g);

/// y_i = g(s_i) / prod_{j != i} (s_i - s_j); the dual of GRS_{deg g}(S, g)
/// is GRS_{n - deg g}(S, y).
std::vector<Elem> grs_dual_multipliers(const Field& f, const std::vector<Elem>& points,
                                       const Poly& g);

/// Classical Goppa code Gamma(S, g, F_{q^r}) as the subfield kernel of the
/// GRS-via-Goppa generator.
LinearCode goppa_classical(const Field& f, const std::vector<Elem>& points, const Poly& g);

/// Definitional membership: sum_i c_i / prod_j (x_j - s_{ij}) = 0 modulo g,
/// evaluated in the residue ring tensor product.  Covers m = 1 as the
/// classical congruence.  Word coordinates must lie in F_{q^r}.
bool goppa_membership_oracle(const Field& f, const std::vector<std::vector<Elem>>& sets,
                             const std::vector<Poly>& factors,
                             const std::vector<Elem>& word);

/// Multivariate Goppa code: subfield kernel of the generator of the tensor
/// product of the per-variable GRS-via-Goppa codes.
LinearCode multivariate_goppa(const Field& f, const std::vector<std::vector<Elem>>& sets,
                              const std::vector<Poly>& factors);

/// Augmented Cartesian code: the weighted evaluation code on the exponent set
/// A_g (the full grid minus its top corner box).  Equals the dual of the
/// tensor product code.
LinearCode acar(const Field& f, const std::vector<std::vector<Elem>>& sets,
                const std::vector<Poly>& factors);

// ---- skew evaluation families ----

struct GseResult {
    LinearCode code;
    bool is_gsrs;           // the skew Vandermonde on S had full rank n
    size_t vandermonde_rank;
};

/// Generalized Skew Evaluation code: first k rows of the skew Vandermonde
/// times diag(v).  Throws HypothesisError when rank(V_theta(S)) < k.  When
/// the rank is n the result is a GSRS code (MDS).
GseResult gse(const Field& f, const std::vector<Elem>& points,
              const std::vector<Elem>& mults, size_t k);

// ---- Generalized Skew Goppa ----

/// The Eq-style factorization of the GSG parity check.  H = Hprime R E always
/// holds; the reduced block (D, the theta-Vandermonde-on-inverses W, and the
/// accumulated row-reduction witness T with T H = W D R E) is present only
/// when every point is nonzero and S^{-1} is P-independent.
struct ParityFactors {
    Matrix Hprime;           // rho x n quotient coefficients q_{i,j}
    std::vector<Elem> Rdiag; // g(s_j)^{-1}
    std::vector<Elem> Ediag; // eta_j
    bool reduced = false;
    std::vector<Elem> Ddiag; // g_rho * theta(N_{rho-1}(s_j))
    Matrix Hreduced;         // W with W(i,j) = theta(N_i(s_j^{-1}))
    Matrix T;                // invertible; T H = W diag(D) R E
};

struct GsgResult {
    LinearCode code; // over F_{q^r}
    Matrix H;        // rho x n over F_{q^t}
    ParityFactors factors;
    bool inverse_hypothesis; // S^{-1} P-independent (and 0 not in S)
    SkewPoly g;
    InvariantSpec spec;
};

/// Generalized Skew Goppa code from a P-independent point set, per-point
/// multipliers, and an invariant divisor given by its spec.  Construction
/// proceeds without the S^{-1} hypothesis; only the reduced factors gate on
/// it.
GsgResult gsg(const Field& f, const std::vector<Elem>& points,
              const std::vector<Elem>& eta, const InvariantSpec& spec);

/// Verifies the subfield-subcode identity
///   Gamma~(S, eta, g, F_{q^r}) = theta(GSRS_rho(S^{-1}, theta^{-1}(u)))^perp ∩ F_{q^r}^n
/// with u_i = g_rho theta(N_{rho-1}(s_i)) g(s_i)^{-1} eta_i, building both
/// sides through independent pipelines.  Requires the S^{-1} hypothesis.
bool gsg_gsrs_witness(const Field& f, const std::vector<Elem>& points,
                      const std::vector<Elem>& eta, const InvariantSpec& spec);

// ---- Generalized Skew Multivariate Goppa ----

/// Validated GSMG input: point sets (S_m P-independent with P-independent
/// inverses), the factorization g = g_1...g_m, and the n_m multipliers
/// (eta_j depends only on j_m).  Point enumeration is row-major with the
/// last coordinate fastest, matching Kronecker column order.
struct GoppaInstance {
    const Field* f;
    std::vector<std::vector<Elem>> sets;
    GoppaFactorization gf;
    std::vector<Elem> eta; // n_m entries

    size_t m() const { return sets.size(); }
    size_t n() const;
    std::vector<std::vector<Elem>> points() const { return enumerate_points(sets); }
    /// eta expanded to one multiplier per point.
    std::vector<Elem> eta_per_point() const;
};

/// Checks every instance invariant, naming the violated hypothesis.
GoppaInstance make_goppa_instance(const Field& f, std::vector<std::vector<Elem>> sets,
                                  std::vector<Poly> commutative_factors,
                                  const InvariantSpec& skew_spec, std::vector<Elem> eta);

struct GsmgResult {
    LinearCode code;       // over F_{q^r}
    Matrix H;              // (prod rho_i) x n over F_{q^t}
    LinearCode tensor_code; // T~: generator row space equals the row space of H
};

GsmgResult gsmg(const GoppaInstance& inst);

// ---- parameter reports ----

struct ParameterReport {
    size_t n = 0;
    size_t k = 0;
    int64_t k_lower = 0; // n - (t/r) deg g
    int64_t k_upper = 0; // n - deg g
    bool k_lower_ok = false;
    bool k_upper_ok = false;
    bool k_upper_claimed = true; // false for GSG instances lacking the S^{-1} hypothesis
    DistanceResult distance{DistanceResult::Kind::zero_code, 0, 0};
    size_t d_bound = 0; // min_i(deg g_i) + 1
    bool d_bound_ok = false;   // meaningful when distance.kind == exact
    bool mds_claimed = false;  // GRS/GSRS: d = n - k + 1 exactly
    bool mds_ok = false;
    std::optional<size_t> rank_h;
};

ParameterReport parameter_report(const LinearCode& code, uint64_t deg_g,
                                 const std::vector<uint32_t>& factor_degrees,
                                 bool k_upper_claimed, bool mds_claimed,
                                 std::optional<size_t> rank_h, uint64_t budget);

} // namespace skewgoppa
