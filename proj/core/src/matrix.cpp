#include "skewgoppa/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace skewgoppa {

namespace {
constexpr size_t kDimMax = 4096;

void check_dims(size_t rows, size_t cols) {
    if (rows > kDimMax || cols > kDimMax)
        throw std::invalid_argument("matrix dimension exceeds the 4096 cap");
}
} // namespace

Matrix::Matrix(const Field& f, size_t rows, size_t cols)
    : f_(&f), rows_(rows), cols_(cols),
      a_((check_dims(rows, cols), rows * cols), f.zero()) {}

Matrix Matrix::identity(const Field& f, size_t n) {
    Matrix m(f, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
}

Matrix Matrix::diagonal(const Field& f, const std::vector<Elem>& d) {
    Matrix m(f, d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const Field& f, const std::vector<std::vector<Elem>>& rows,
                         size_t cols) {
    Matrix m(f, rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw std::invalid_argument("ragged row list");
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Elem> Matrix::row(size_t i) const {
    return std::vector<Elem>(a_.begin() + static_cast<long>(i * cols_),
                             a_.begin() + static_cast<long>((i + 1) * cols_));
}

Matrix Matrix::transpose() const {
    Matrix m(*f_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (f_ != o.f_) throw std::invalid_argument("matrix product over distinct fields");
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix m(*f_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            Elem c = at(i, k);
            if (c.is_zero()) continue;
            for (size_t j = 0; j < o.cols_; ++j) m.at(i, j) += c * o.at(k, j);
        }
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (size_t i = 0; i < a.a_.size(); ++i)
        if (a.a_[i] != b.a_[i]) return false;
    return true;
}

std::vector<Elem> Matrix::apply(const std::vector<Elem>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
    std::vector<Elem> out(rows_, f_->zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

Rref rref(const Matrix& m) {
    const Field& F = m.field();
    Matrix r = m;
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < r.cols() && row < r.rows(); ++col) {
        size_t sel = row;
        while (sel < r.rows() && r.at(sel, col).is_zero()) ++sel;
        if (sel == r.rows()) continue;
        if (sel != row)
            for (size_t j = 0; j < r.cols(); ++j) std::swap(r.at(sel, j), r.at(row, j));
        Elem piv_inv = F.inv(r.at(row, col));
        for (size_t j = col; j < r.cols(); ++j) r.at(row, j) *= piv_inv;
        for (size_t i = 0; i < r.rows(); ++i) {
            if (i == row) continue;
            Elem c = r.at(i, col);
            if (c.is_zero()) continue;
            for (size_t j = col; j < r.cols(); ++j) r.at(i, j) -= c * r.at(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(r), std::move(pivots)};
}

size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
    const Field& F = m.field();
    Rref r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (size_t c : r.pivots) is_pivot[c] = true;
    Matrix k(F, m.cols() - r.pivots.size(), m.cols());
    size_t out = 0;
    for (size_t fc = 0; fc < m.cols(); ++fc) {
        if (is_pivot[fc]) continue;
        k.at(out, fc) = F.one();
        for (size_t i = 0; i < r.pivots.size(); ++i) k.at(out, r.pivots[i]) = -r.mat.at(i, fc);
        ++out;
    }
    return k;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (&a.field() != &b.field())
        throw std::invalid_argument("Kronecker product over distinct fields");
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (size_t ia = 0; ia < a.rows(); ++ia)
        for (size_t ja = 0; ja < a.cols(); ++ja) {
            Elem c = a.at(ia, ja);
            if (c.is_zero()) continue;
            for (size_t ib = 0; ib < b.rows(); ++ib)
                for (size_t jb = 0; jb < b.cols(); ++jb)
                    m.at(ia * b.rows() + ib, ja * b.cols() + jb) = c * b.at(ib, jb);
        }
    return m;
}

Matrix frobenius_entrywise(const Matrix& m, int64_t i) {
    const Field& F = m.field();
    Matrix out = m;
    for (size_t r = 0; r < m.rows(); ++r)
        for (size_t c = 0; c < m.cols(); ++c) out.at(r, c) = F.frobenius(m.at(r, c), i);
    return out;
}

bool row_space_equal(const Matrix& a, const Matrix& b) {
    if (&a.field() != &b.field() || a.cols() != b.cols())
        throw std::invalid_argument("row space comparison shape mismatch");
    Rref ra = rref(a), rb = rref(b);
    if (ra.pivots.size() != rb.pivots.size()) return false;
    for (size_t i = 0; i < ra.pivots.size(); ++i) {
        if (ra.pivots[i] != rb.pivots[i]) return false;
        for (size_t j = 0; j < a.cols(); ++j)
            if (ra.mat.at(i, j) != rb.mat.at(i, j)) return false;
    }
    return true;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
    if (&top.field() != &bottom.field() || top.cols() != bottom.cols())
        throw std::invalid_argument("stack shape mismatch");
    Matrix m(top.field(), top.rows() + bottom.rows(), top.cols());
    for (size_t i = 0; i < top.rows(); ++i)
        for (size_t j = 0; j < top.cols(); ++j) m.at(i, j) = top.at(i, j);
    for (size_t i = 0; i < bottom.rows(); ++i)
        for (size_t j = 0; j < top.cols(); ++j) m.at(top.rows() + i, j) = bottom.at(i, j);
    return m;
}

Matrix skew_vandermonde(const Field& f, const std::vector<Elem>& s, size_t rows) {
    if (rows < 1) throw std::invalid_argument("skew Vandermonde needs at least one row");
    Matrix m(f, rows, s.size());
    for (size_t j = 0; j < s.size(); ++j) {
        Elem norm = f.one(); // N_i(s_j)
        Elem fa = s[j];
        for (size_t i = 0; i < rows; ++i) {
            m.at(i, j) = norm;
            norm = fa * norm;
            fa = f.frobenius(fa, 1);
        }
    }
    return m;
}

Matrix vandermonde(const Field& f, const std::vector<Elem>& s, size_t rows) {
    Matrix m(f, rows, s.size());
    for (size_t j = 0; j < s.size(); ++j) {
        Elem p = f.one();
        for (size_t i = 0; i < rows; ++i) {
            m.at(i, j) = p;
            p *= s[j];
        }
    }
    return m;
}

std::string to_text(const Matrix& m) {
    std::ostringstream os;
    os << m.rows() << ' ' << m.cols() << '\n';
    for (size_t i = 0; i < m.rows(); ++i) {
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ' ';
            os << m.at(i, j).code();
        }
        os << '\n';
    }
    return os.str();
}

Matrix matrix_from_text(const Field& f, const std::string& text) {
    std::istringstream is(text);
    size_t rows = 0, cols = 0;
    if (!(is >> rows >> cols)) throw std::invalid_argument("matrix text: bad header");
    Matrix m(f, rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < cols; ++j) {
            uint64_t code = 0;
            if (!(is >> code)) throw std::invalid_argument("matrix text: missing entries");
            m.at(i, j) = f.elem(code);
        }
    return m;
}

} // namespace skewgoppa
