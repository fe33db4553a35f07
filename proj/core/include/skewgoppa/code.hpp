#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "skewgoppa/matrix.hpp"

namespace skewgoppa {

/// Which level of the tower the code's alphabet lives on.  The tokens match
/// the code file format header.
enum class Alphabet { qt, qr };

inline const char* alphabet_token(Alphabet a) { return a == Alphabet::qt ? "qt" : "qr"; }

/// Linear code over F_{q^t} (Alphabet::qt) or F_{q^r} (Alphabet::qr), held by
/// its canonical generator matrix: RREF with zero rows dropped.  Two codes
/// are equal iff their canonical generators are identical.  For qr codes all
/// generator entries lie in the subfield, and scalars range over it.
class LinearCode {
  public:
    static LinearCode from_generator(Alphabet level, const Matrix& gen);
    /// Kernel of H over the same alphabet.
    static LinearCode from_parity_check(Alphabet level, const Matrix& h);

    const Field& field() const { return gen_.field(); }
    Alphabet alphabet() const { return level_; }
    size_t n() const { return n_; }
    size_t dim() const { return gen_.rows(); }
    const Matrix& gen() const { return gen_; }

    uint64_t alphabet_size() const;
    std::vector<Elem> alphabet_elements() const;
    /// q_alphabet^dim, or nullopt if it exceeds 2^62.
    std::optional<uint64_t> codeword_count() const;

    bool contains(const std::vector<Elem>& word) const;

    friend bool operator==(const LinearCode& a, const LinearCode& b);
    friend bool operator!=(const LinearCode& a, const LinearCode& b) { return !(a == b); }

  private:
    LinearCode(Alphabet level, size_t n, Matrix gen)
        : level_(level), n_(n), gen_(std::move(gen)) {}

    Alphabet level_;
    size_t n_;
    Matrix gen_;
};

/// Orthogonal complement under the standard bilinear form, same alphabet.
LinearCode dual(const LinearCode& c);
/// C ∩ F_{q^r}^n as an F_{q^r}-linear code; computed by expanding each
/// parity constraint over the subfield basis, so it scales past the range of
/// codeword filtering.  Requires a qt code.
LinearCode subfield_subcode(const LinearCode& c);
/// Coordinatewise trace image Tr(C) over F_{q^r}.  Requires a qt code.
LinearCode trace_code(const LinearCode& c);
/// Generator = kronecker(gen1, gen2); same alphabet required.
LinearCode tensor_product(const LinearCode& a, const LinearCode& b);
/// Span of the union, C1 + C2.
LinearCode sum_code(const LinearCode& a, const LinearCode& b);
/// theta^i applied to every codeword.
LinearCode theta_code(const LinearCode& c, int64_t i = 1);
LinearCode full_space(const Field& f, Alphabet level, size_t n);
LinearCode zero_code(const Field& f, Alphabet level, size_t n);

struct DistanceResult {
    enum class Kind { exact, budget_exceeded, zero_code };
    Kind kind;
    size_t value = 0;      // valid when kind == exact
    uint64_t enumerated = 0;
};

inline constexpr uint64_t kDefaultDistanceBudget = uint64_t(1) << 24;

/// Exact minimum Hamming weight by enumerating all nonzero messages in plain
/// lexicographic order, provided their count fits the budget.  The zero code
/// has no distance and is reported as its own outcome.
DistanceResult min_distance(const LinearCode& c, uint64_t budget = kDefaultDistanceBudget);

/// Checks dual(C|_{F_{q^r}}) = Tr(C^perp) as F_{q^r}-subspaces.  Expected to
/// hold always; false signals an implementation bug.
bool delsarte_check(const LinearCode& c);

/// Code file format: one line "qt" or "qr", then the generator matrix text.
std::string to_text(const LinearCode& c);
LinearCode code_from_text(const Field& f, const std::string& text);

} // namespace skewgoppa
