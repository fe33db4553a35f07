#pragma once

// Test-only oracles, independent of the library paths they check.

#include <vector>

#include "skewgoppa/code.hpp"
#include "skewgoppa/field.hpp"
#include "skewgoppa/matrix.hpp"

namespace oracles {

using namespace skewgoppa;

// N_i(a) via the exponent closed form a^{(q^i - 1)/(q - 1)}
inline Elem norm_by_exponent(const Field& f, uint32_t i, Elem a) {
    if (i == 0) return f.one();
    if (a.is_zero()) return f.zero();
    uint64_t e = 0, qp = 1;
    for (uint32_t k = 0; k < i; ++k) {
        e += qp;
        qp *= f.q();
    }
    return f.pow(a, static_cast<int64_t>(e));
}

// every word of F_{q^r}^n, passed to fn
template <typename Fn>
void for_each_subfield_word(const Field& f, size_t n, Fn&& fn) {
    const auto& alpha = f.subfield_elements();
    std::vector<size_t> idx(n, 0);
    std::vector<Elem> w(n, alpha[0]);
    while (true) {
        fn(w);
        size_t i = 0;
        for (; i < n; ++i) {
            if (++idx[i] < alpha.size()) {
                w[i] = alpha[idx[i]];
                break;
            }
            idx[i] = 0;
            w[i] = alpha[0];
        }
        if (i == n) break;
    }
}

// subfield subcode by brute-force filtering of all subfield words
inline LinearCode subfield_subcode_by_filter(const LinearCode& c) {
    const Field& f = c.field();
    std::vector<std::vector<Elem>> members;
    for_each_subfield_word(f, c.n(), [&](const std::vector<Elem>& w) {
        if (c.contains(w)) members.push_back(w);
    });
    return LinearCode::from_generator(Alphabet::qr,
                                      Matrix::from_rows(f, members, c.n()));
}

// trace code by imaging every codeword (enumerates q^{t k} messages)
inline LinearCode trace_code_by_image(const LinearCode& c) {
    const Field& f = c.field();
    std::vector<Elem> alpha;
    for (uint32_t v = 0; v < f.order(); ++v) alpha.push_back(f.elem(v));
    std::vector<std::vector<Elem>> rows;
    std::vector<size_t> idx(c.dim(), 0);
    while (true) {
        std::vector<Elem> w(c.n(), f.zero());
        for (size_t i = 0; i < c.dim(); ++i)
            for (size_t j = 0; j < c.n(); ++j) w[j] += alpha[idx[i]] * c.gen().at(i, j);
        for (auto& e : w) e = f.trace_to_subfield(e);
        rows.push_back(w);
        size_t i = 0;
        for (; i < c.dim(); ++i) {
            if (++idx[i] < alpha.size()) break;
            idx[i] = 0;
        }
        if (i == c.dim()) break;
    }
    return LinearCode::from_generator(Alphabet::qr, Matrix::from_rows(f, rows, c.n()));
}

// Kronecker product straight from the definition
inline Matrix kronecker_by_definition(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            m.at(i, j) = a.at(i / b.rows(), j / b.cols()) * b.at(i % b.rows(), j % b.cols());
    return m;
}

} // namespace oracles
