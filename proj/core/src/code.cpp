#include "skewgoppa/code.hpp"

#include <sstream>
#include <stdexcept>

namespace skewgoppa {

namespace {

Matrix canonical(const Matrix& m) {
    Rref r = rref(m);
    Matrix out(m.field(), r.pivots.size(), m.cols());
    for (size_t i = 0; i < r.pivots.size(); ++i)
        for (size_t j = 0; j < m.cols(); ++j) out.at(i, j) = r.mat.at(i, j);
    return out;
}

void require_subfield_entries(const Matrix& m) {
    const Field& F = m.field();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!F.is_in_subfield(m.at(i, j)))
                throw std::invalid_argument("qr-level code with entries outside F_{q^r}");
}

} // namespace

LinearCode LinearCode::from_generator(Alphabet level, const Matrix& gen) {
    Matrix g = canonical(gen);
    if (level == Alphabet::qr) require_subfield_entries(g);
    return LinearCode(level, gen.cols(), std::move(g));
}

LinearCode LinearCode::from_parity_check(Alphabet level, const Matrix& h) {
    if (level == Alphabet::qr) require_subfield_entries(h);
    return from_generator(level, kernel_basis(h));
}

uint64_t LinearCode::alphabet_size() const {
    return level_ == Alphabet::qt ? field().order() : field().subfield_order();
}

std::vector<Elem> LinearCode::alphabet_elements() const {
    if (level_ == Alphabet::qr) return field().subfield_elements();
    std::vector<Elem> full;
    full.reserve(field().order());
    for (uint32_t c = 0; c < field().order(); ++c) full.push_back(field().elem(c));
    return full;
}

std::optional<uint64_t> LinearCode::codeword_count() const {
    uint64_t count = 1;
    for (size_t i = 0; i < dim(); ++i) {
        if (count > (uint64_t(1) << 62) / alphabet_size()) return std::nullopt;
        count *= alphabet_size();
    }
    return count;
}

bool LinearCode::contains(const std::vector<Elem>& word) const {
    if (word.size() != n_) throw std::invalid_argument("word length mismatch");
    const Field& F = field();
    if (level_ == Alphabet::qr)
        for (Elem e : word)
            if (!F.is_in_subfield(e)) return false;
    std::vector<Elem> w = word;
    // reduce against the canonical generator; pivot columns are unit columns
    Rref r = rref(gen_); // gen_ is already canonical; cheap for small dims
    for (size_t i = 0; i < r.pivots.size(); ++i) {
        Elem c = w[r.pivots[i]];
        if (c.is_zero()) continue;
        for (size_t j = 0; j < n_; ++j) w[j] -= c * r.mat.at(i, j);
    }
    for (Elem e : w)
        if (!e.is_zero()) return false;
    return true;
}

bool operator==(const LinearCode& a, const LinearCode& b) {
    return a.level_ == b.level_ && a.n_ == b.n_ && a.gen_ == b.gen_;
}

LinearCode dual(const LinearCode& c) {
    return LinearCode::from_generator(c.alphabet(), kernel_basis(c.gen()));
}

LinearCode subfield_subcode(const LinearCode& c) {
    if (c.alphabet() != Alphabet::qt)
        throw std::invalid_argument("subfield subcode of a code already over F_{q^r}");
    const Field& F = c.field();
    const size_t blocks = F.t() / F.r();
    Matrix h = kernel_basis(c.gen());
    // expand each constraint sum_j H[i][j] c_j = 0 over the subfield basis:
    // with H[i][j] = sum_u E_u[i][j] beta^u, the word (over F_{q^r}) must
    // satisfy every E_u row separately
    Matrix expanded(F, h.rows() * blocks, c.n());
    for (size_t i = 0; i < h.rows(); ++i)
        for (size_t j = 0; j < c.n(); ++j) {
            std::vector<Elem> coords = F.expand_over_subfield(h.at(i, j));
            for (size_t u = 0; u < blocks; ++u) expanded.at(i * blocks + u, j) = coords[u];
        }
    return LinearCode::from_parity_check(Alphabet::qr, expanded);
}

LinearCode trace_code(const LinearCode& c) {
    if (c.alphabet() != Alphabet::qt)
        throw std::invalid_argument("trace code of a code already over F_{q^r}");
    const Field& F = c.field();
    const auto& basis = F.subfield_expansion_basis();
    Matrix rows(F, c.dim() * basis.size(), c.n());
    for (size_t i = 0; i < c.dim(); ++i)
        for (size_t u = 0; u < basis.size(); ++u)
            for (size_t j = 0; j < c.n(); ++j)
                rows.at(i * basis.size() + u, j) =
                    F.trace_to_subfield(basis[u] * c.gen().at(i, j));
    return LinearCode::from_generator(Alphabet::qr, rows);
}

LinearCode tensor_product(const LinearCode& a, const LinearCode& b) {
    if (a.alphabet() != b.alphabet())
        throw std::invalid_argument("tensor product of codes over different alphabets");
    return LinearCode::from_generator(a.alphabet(), kronecker(a.gen(), b.gen()));
}

LinearCode sum_code(const LinearCode& a, const LinearCode& b) {
    if (a.alphabet() != b.alphabet() || a.n() != b.n())
        throw std::invalid_argument("sum of incompatible codes");
    return LinearCode::from_generator(a.alphabet(), stack(a.gen(), b.gen()));
}

LinearCode theta_code(const LinearCode& c, int64_t i) {
    // theta maps F_{q^r} into itself, so the alphabet level survives
    return LinearCode::from_generator(c.alphabet(), frobenius_entrywise(c.gen(), i));
}

LinearCode full_space(const Field& f, Alphabet level, size_t n) {
    return LinearCode::from_generator(level, Matrix::identity(f, n));
}

LinearCode zero_code(const Field& f, Alphabet level, size_t n) {
    return LinearCode::from_generator(level, Matrix(f, 0, n));
}

namespace {

struct DistanceSearch {
    const LinearCode& code;
    std::vector<Elem> alphabet;
    std::vector<std::vector<Elem>> partial; // partial[i] = contribution of rows < i
    size_t best;
    uint64_t seen = 0;

    void run(size_t level, bool nonzero) {
        const size_t k = code.dim();
        if (level == k) {
            if (!nonzero) return;
            ++seen;
            size_t wt = 0;
            for (const Elem& e : partial[k])
                if (!e.is_zero()) ++wt;
            if (wt < best) best = wt;
            return;
        }
        for (const Elem& a : alphabet) {
            const auto& prev = partial[level];
            auto& next = partial[level + 1];
            if (a.is_zero()) {
                next = prev;
                run(level + 1, nonzero);
            } else {
                for (size_t j = 0; j < code.n(); ++j)
                    next[j] = prev[j] + a * code.gen().at(level, j);
                run(level + 1, true);
            }
        }
    }
};

} // namespace

DistanceResult min_distance(const LinearCode& c, uint64_t budget) {
    if (c.dim() == 0) return {DistanceResult::Kind::zero_code, 0, 0};
    // message count is alphabet^dim - 1; saturate against the budget
    const uint64_t asize = c.alphabet_size();
    uint64_t total = 1;
    for (size_t i = 0; i < c.dim(); ++i) {
        if (total > (budget + 1) / asize) return {DistanceResult::Kind::budget_exceeded, 0, 0};
        total *= asize;
    }
    if (total - 1 > budget) return {DistanceResult::Kind::budget_exceeded, 0, 0};

    DistanceSearch search{c, c.alphabet_elements(), {}, c.n(), 0};
    search.partial.assign(c.dim() + 1, std::vector<Elem>(c.n(), c.field().zero()));
    search.run(0, false);
    return {DistanceResult::Kind::exact, search.best, search.seen};
}

bool delsarte_check(const LinearCode& c) {
    LinearCode lhs = dual(subfield_subcode(c));
    LinearCode rhs = trace_code(dual(c));
    return lhs == rhs;
}

std::string to_text(const LinearCode& c) {
    std::ostringstream os;
    os << alphabet_token(c.alphabet()) << '\n' << to_text(c.gen());
    return os.str();
}

LinearCode code_from_text(const Field& f, const std::string& text) {
    std::istringstream is(text);
    std::string level;
    if (!(is >> level) || (level != "qt" && level != "qr"))
        throw std::invalid_argument("code text: bad alphabet header");
    std::string rest((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
    return LinearCode::from_generator(level == "qt" ? Alphabet::qt : Alphabet::qr,
                                      matrix_from_text(f, rest));
}

} // namespace skewgoppa
