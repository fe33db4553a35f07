#include "skewgoppa/field.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace skewgoppa {

namespace {

bool is_prime(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

uint32_t digit_inv_mod(uint32_t a, uint32_t p) {
    // Fermat; p prime, a != 0
    uint32_t res = 1, base = a % p, e = p - 2;
    while (e) {
        if (e & 1) res = res * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return res;
}

// --- dense F_p[x] helpers for modulus validation (little-endian digit vectors) ---

using FpPoly = std::vector<uint32_t>;

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mod(FpPoly a, const FpPoly& f, uint32_t p) {
    fp_trim(a);
    const size_t df = f.size() - 1;
    const uint32_t lead_inv = digit_inv_mod(f.back(), p);
    while (a.size() >= f.size()) {
        uint32_t c = a.back() * lead_inv % p;
        size_t shift = a.size() - f.size();
        if (c != 0)
            for (size_t i = 0; i < f.size(); ++i)
                a[shift + i] = (a[shift + i] + (p - c * f[i] % p)) % p;
        a.pop_back();
        fp_trim(a);
        (void)df;
    }
    return a;
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, uint32_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return fp_mod(std::move(c), f, p);
}

FpPoly fp_powmod(FpPoly base, uint64_t e, const FpPoly& f, uint32_t p) {
    FpPoly res = {1};
    base = fp_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) res = fp_mulmod(res, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return res;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint32_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        FpPoly r = fp_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    fp_trim(a);
    return a;
}

// x^{p^k} mod f via k successive p-th powers of x
FpPoly fp_frob_power_of_x(uint32_t k, const FpPoly& f, uint32_t p) {
    FpPoly h = fp_mod({0, 1}, f, p);
    for (uint32_t i = 0; i < k; ++i) h = fp_powmod(h, p, f, p);
    return h;
}

bool fp_irreducible(const FpPoly& f, uint32_t p) {
    const uint32_t d = static_cast<uint32_t>(f.size()) - 1;
    if (d == 0) return false;
    if (d == 1) return true;
    // x^{p^d} == x mod f
    FpPoly xq = fp_frob_power_of_x(d, f, p);
    FpPoly x = fp_mod({0, 1}, f, p);
    if (xq != x) return false;
    // gcd(x^{p^{d/l}} - x, f) = 1 for every prime l | d
    uint32_t rem = d;
    for (uint32_t l = 2; l <= rem; ++l) {
        if (rem % l != 0) continue;
        while (rem % l == 0) rem /= l;
        FpPoly h = fp_sub(fp_frob_power_of_x(d / l, f, p), x, p);
        FpPoly g = fp_gcd(f, std::move(h), p);
        if (g.size() > 1) return false;
    }
    return true;
}

// --- tiny dense linear algebra over F_p for basis/coordinate work ---

// Row-reduce M (rows x cols, row-major) in place; returns pivot columns.
std::vector<int> fp_eliminate(std::vector<uint32_t>& m, size_t rows, size_t cols, uint32_t p) {
    std::vector<int> pivot_of_row;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t sel = row;
        while (sel < rows && m[sel * cols + col] == 0) ++sel;
        if (sel == rows) continue;
        if (sel != row)
            for (size_t j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[row * cols + j]);
        uint32_t piv_inv = digit_inv_mod(m[row * cols + col], p);
        for (size_t j = 0; j < cols; ++j) m[row * cols + j] = m[row * cols + j] * piv_inv % p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row) continue;
            uint32_t c = m[i * cols + col];
            if (c == 0) continue;
            for (size_t j = 0; j < cols; ++j)
                m[i * cols + j] = (m[i * cols + j] + (p - c) * m[row * cols + j]) % p;
        }
        pivot_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    return pivot_of_row;
}

// Kernel basis (as row vectors of length cols) of the rows x cols matrix m.
std::vector<std::vector<uint32_t>> fp_kernel(std::vector<uint32_t> m, size_t rows, size_t cols,
                                             uint32_t p) {
    std::vector<int> pivots = fp_eliminate(m, rows, cols, p);
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<uint32_t>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<uint32_t> v(cols, 0);
        v[fc] = 1;
        for (size_t i = 0; i < pivots.size(); ++i) {
            uint32_t c = m[i * cols + fc];
            if (c) v[static_cast<size_t>(pivots[i])] = (p - c) % p;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse of the d x d matrix m (row-major) over F_p, or empty if singular.
std::vector<uint32_t> fp_invert(const std::vector<uint32_t>& m, size_t d, uint32_t p) {
    std::vector<uint32_t> aug(d * 2 * d, 0);
    for (size_t i = 0; i < d; ++i) {
        for (size_t j = 0; j < d; ++j) aug[i * 2 * d + j] = m[i * d + j];
        aug[i * 2 * d + d + i] = 1;
    }
    std::vector<int> piv = fp_eliminate(aug, d, 2 * d, p);
    if (piv.size() != d || static_cast<size_t>(piv.back()) >= d) return {};
    std::vector<uint32_t> out(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) out[i * d + j] = aug[i * 2 * d + d + j];
    return out;
}

} // namespace

Field::Field(uint32_t p, uint32_t s, uint32_t t, uint32_t r,
             std::optional<std::vector<uint32_t>> modulus)
    : p_(p), s_(s), t_(t), r_(r) {
    if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
    if (s < 1 || t < 1 || r < 1) throw std::invalid_argument("tower exponents must be >= 1");
    if (t % r != 0) throw std::invalid_argument("intermediate degree r must divide t");
    d_ = s_ * t_;
    uint64_t order = 1;
    for (uint32_t i = 0; i < d_; ++i) {
        order *= p_;
        if (order > kOrderMax) throw std::invalid_argument("field order exceeds the 2^20 cap");
    }
    order_ = static_cast<uint32_t>(order);
    q_ = 1;
    for (uint32_t i = 0; i < s_; ++i) q_ *= p_;
    uint64_t so = 1;
    for (uint32_t i = 0; i < r_ * s_; ++i) so *= p_;
    subfield_order_ = static_cast<uint32_t>(so);

    if (modulus) {
        modulus_ = std::move(*modulus);
        if (modulus_.size() != d_ + 1)
            throw std::invalid_argument("modulus must have degree s*t");
        for (uint32_t c : modulus_)
            if (c >= p_) throw std::invalid_argument("modulus digit out of range [0,p)");
        if (modulus_.back() != 1) throw std::invalid_argument("modulus must be monic");
        if (!fp_irreducible(modulus_, p_))
            throw std::invalid_argument("modulus is reducible over F_p");
    } else {
        // smallest monic irreducible of degree d, ordered by the base-p
        // integer value of the low coefficients (constant digit lowest)
        for (uint64_t c = 0; c < order; ++c) {
            FpPoly f(d_ + 1, 0);
            uint64_t v = c;
            for (uint32_t i = 0; i < d_; ++i) {
                f[i] = static_cast<uint32_t>(v % p_);
                v /= p_;
            }
            f[d_] = 1;
            if (fp_irreducible(f, p_)) {
                modulus_ = std::move(f);
                break;
            }
        }
        if (modulus_.empty()) throw std::logic_error("no irreducible modulus found");
    }

    // residue class of x
    if (d_ == 1) {
        x_ = Elem(this, (p_ - modulus_[0]) % p_);
    } else {
        x_ = Elem(this, p_);
    }

    build_tables();
    build_subfield_data();

    // theta(a) = a^q must have order exactly t; since x generates the field
    // over F_p it suffices to check on x.
    for (uint32_t i = 1; i < t_; ++i)
        if (frob_code(x_.code(), i) == x_.code())
            throw std::logic_error("Frobenius a -> a^q has order < t on this modulus");
    if (frob_code(x_.code(), 0) != x_.code()) throw std::logic_error("Frobenius table corrupt");
}

void Field::unpack(uint32_t code, uint32_t* out) const {
    for (uint32_t i = 0; i < d_; ++i) {
        out[i] = code % p_;
        code /= p_;
    }
}

uint32_t Field::pack(const uint32_t* digits) const {
    uint32_t code = 0;
    for (uint32_t i = d_; i-- > 0;) code = code * p_ + digits[i];
    return code;
}

uint32_t Field::add_code(uint32_t a, uint32_t b) const {
    if (p_ == 2) return a ^ b;
    uint32_t da[32], db[32];
    unpack(a, da);
    unpack(b, db);
    for (uint32_t i = 0; i < d_; ++i) da[i] = (da[i] + db[i]) % p_;
    return pack(da);
}

uint32_t Field::mul_code_slow(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    uint32_t da[32], db[32];
    unpack(a, da);
    unpack(b, db);
    uint32_t conv[64] = {0};
    for (uint32_t i = 0; i < d_; ++i) {
        if (da[i] == 0) continue;
        for (uint32_t j = 0; j < d_; ++j) conv[i + j] = (conv[i + j] + da[i] * db[j]) % p_;
    }
    for (uint32_t j = 2 * d_ - 2 + 1; j-- > d_;) {
        uint32_t c = conv[j];
        if (c == 0) continue;
        conv[j] = 0;
        for (uint32_t i = 0; i < d_; ++i)
            conv[j - d_ + i] = (conv[j - d_ + i] + (p_ - c * modulus_[i] % p_)) % p_;
    }
    return pack(conv);
}

uint32_t Field::mul_code(uint32_t a, uint32_t b) const {
    if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * order_ + b];
    return mul_code_slow(a, b);
}

uint32_t Field::inv_code(uint32_t a) const {
    if (a == 0) throw std::invalid_argument("inverse of zero");
    if (!inv_table_.empty()) return inv_table_[a];
    // extended Euclid in F_p[x] mod modulus
    FpPoly r0 = modulus_, r1;
    r1.reserve(d_);
    {
        uint32_t da[32];
        unpack(a, da);
        for (uint32_t i = 0; i < d_; ++i) r1.push_back(da[i]);
        fp_trim(r1);
    }
    FpPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        // r0 = q*r1 + r2
        FpPoly q;
        FpPoly r2 = r0;
        fp_trim(r2);
        const uint32_t lead_inv = digit_inv_mod(r1.back(), p_);
        q.assign(r2.size() > r1.size() ? r2.size() - r1.size() + 1 : 1, 0);
        while (r2.size() >= r1.size() && !r2.empty()) {
            uint32_t c = r2.back() * lead_inv % p_;
            size_t shift = r2.size() - r1.size();
            q[shift] = c;
            for (size_t i = 0; i < r1.size(); ++i)
                r2[shift + i] = (r2[shift + i] + (p_ - c * r1[i] % p_)) % p_;
            fp_trim(r2);
        }
        // t2 = t0 - q*t1
        FpPoly qt1;
        if (!q.empty() && !t1.empty()) {
            qt1.assign(q.size() + t1.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i)
                for (size_t j = 0; j < t1.size(); ++j)
                    qt1[i + j] = (qt1[i + j] + q[i] * t1[j]) % p_;
        }
        FpPoly t2 = fp_sub(t0, qt1, p_);
        r0 = std::move(r1);
        r1 = std::move(r2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is the gcd (a constant, since modulus is irreducible)
    uint32_t ginv = digit_inv_mod(r0[0], p_);
    uint32_t buf[32] = {0};
    t0.resize(d_, 0);
    for (uint32_t i = 0; i < d_; ++i) buf[i] = t0[i] * ginv % p_;
    return pack(buf);
}

uint32_t Field::frob_code(uint32_t a, uint32_t i) const {
    i %= t_;
    if (i == 0) return a;
    if (!frob_table_.empty()) return frob_table_[i][a];
    uint32_t da[32];
    unpack(a, da);
    uint32_t acc = 0;
    for (uint32_t j = 0; j < d_; ++j)
        for (uint32_t c = 0; c < da[j]; ++c) acc = add_code(acc, frob_img_[i][j]);
    return acc;
}

void Field::build_tables() {
    // Frobenius images theta^i(x^j) for i in [0,t), j in [0,d)
    frob_img_.assign(t_, std::vector<uint32_t>(d_, 0));
    for (uint32_t j = 0; j < d_; ++j) {
        uint32_t digits[32] = {0};
        digits[j] = 1;
        frob_img_[0][j] = pack(digits);
    }
    if (t_ > 1) {
        for (uint32_t j = 0; j < d_; ++j) {
            // (x^j)^q by square-and-multiply on codes
            uint32_t base = frob_img_[0][j], res = 1;
            uint64_t e = q_;
            while (e) {
                if (e & 1) res = mul_code_slow(res, base);
                base = mul_code_slow(base, base);
                e >>= 1;
            }
            frob_img_[1][j] = res;
        }
        for (uint32_t i = 2; i < t_; ++i)
            for (uint32_t j = 0; j < d_; ++j) {
                uint32_t da[32];
                unpack(frob_img_[i - 1][j], da);
                uint32_t acc = 0;
                for (uint32_t k = 0; k < d_; ++k)
                    for (uint32_t c = 0; c < da[k]; ++c) acc = add_code(acc, frob_img_[1][k]);
                frob_img_[i][j] = acc;
            }
    }
    if (order_ <= kFrobTableMax && t_ > 1) {
        frob_table_.assign(t_, std::vector<uint32_t>(order_));
        for (uint32_t a = 0; a < order_; ++a) frob_table_[0][a] = a;
        for (uint32_t a = 0; a < order_; ++a) {
            uint32_t da[32];
            unpack(a, da);
            uint32_t acc = 0;
            for (uint32_t k = 0; k < d_; ++k)
                for (uint32_t c = 0; c < da[k]; ++c) acc = add_code(acc, frob_img_[1][k]);
            frob_table_[1][a] = acc;
        }
        for (uint32_t i = 2; i < t_; ++i)
            for (uint32_t a = 0; a < order_; ++a)
                frob_table_[i][a] = frob_table_[1][frob_table_[i - 1][a]];
    }
    if (order_ <= kMulTableMax) {
        mul_table_.assign(static_cast<size_t>(order_) * order_, 0);
        // a*b is linear in the digits of b: build a*x^j by shifting, then combine
        for (uint32_t a = 0; a < order_; ++a) {
            uint32_t ax[32]; // codes of a*x^j
            ax[0] = a;
            uint32_t xcode = d_ == 1 ? x_.code() : p_;
            for (uint32_t j = 1; j < d_; ++j) ax[j] = mul_code_slow(ax[j - 1], xcode);
            for (uint32_t b = 0; b < order_; ++b) {
                uint32_t db[32];
                unpack(b, db);
                uint32_t acc = 0;
                for (uint32_t j = 0; j < d_; ++j)
                    for (uint32_t c = 0; c < db[j]; ++c) acc = add_code(acc, ax[j]);
                mul_table_[static_cast<size_t>(a) * order_ + b] = acc;
            }
        }
    }
    if (order_ <= kInvTableMax) {
        inv_table_.assign(order_, 0);
        for (uint32_t a = 1; a < order_; ++a) {
            if (inv_table_[a]) continue;
            uint32_t ia = [&] {
                // temporarily bypass the (empty-at-this-point) table path
                std::vector<uint32_t> saved;
                saved.swap(inv_table_);
                uint32_t v = inv_code(a);
                saved.swap(inv_table_);
                return v;
            }();
            inv_table_[a] = ia;
            inv_table_[ia] = a;
        }
    }
}

void Field::build_subfield_data() {
    auto fixed_space = [&](uint32_t power) {
        // kernel over F_p of (theta^power - id) acting on digit vectors
        std::vector<uint32_t> m(static_cast<size_t>(d_) * d_, 0);
        for (uint32_t j = 0; j < d_; ++j) {
            uint32_t digits[32] = {0};
            digits[j] = 1;
            uint32_t img = frob_code(pack(digits), power % t_);
            uint32_t di[32];
            unpack(img, di);
            for (uint32_t i = 0; i < d_; ++i)
                m[static_cast<size_t>(i) * d_ + j] = (di[i] + p_ - (i == j ? 1u : 0u)) % p_;
        }
        return fp_kernel(std::move(m), d_, d_, p_);
    };

    auto span_elems = [&](const std::vector<std::vector<uint32_t>>& basis) {
        std::vector<Elem> out;
        size_t count = 1;
        for (size_t i = 0; i < basis.size(); ++i) count *= p_;
        out.reserve(count);
        std::vector<uint32_t> sel(basis.size(), 0);
        for (size_t it = 0; it < count; ++it) {
            uint32_t digits[32] = {0};
            for (size_t b = 0; b < basis.size(); ++b)
                for (uint32_t i = 0; i < d_; ++i)
                    digits[i] = (digits[i] + sel[b] * basis[b][i]) % p_;
            out.push_back(Elem(this, pack(digits)));
            for (size_t b = 0; b < basis.size(); ++b) {
                if (++sel[b] < p_) break;
                sel[b] = 0;
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    };

    auto sub_basis = fixed_space(r_);
    if (sub_basis.size() != static_cast<size_t>(r_) * s_)
        throw std::logic_error("subfield F_{q^r} has unexpected F_p-dimension");
    subfield_elems_ = span_elems(sub_basis);
    subfield_fp_basis_.clear();
    for (auto& v : sub_basis) subfield_fp_basis_.push_back(Elem(this, pack(v.data())));

    if (r_ == 1) {
        base_elems_ = subfield_elems_;
    } else {
        auto base_basis = fixed_space(1);
        if (base_basis.size() != s_)
            throw std::logic_error("base field F_q has unexpected F_p-dimension");
        base_elems_ = span_elems(base_basis);
    }

    // F_{q^r}-basis of F_{q^t} for coordinate expansion: try powers of x,
    // fall back to a greedy scan if they turn out dependent.
    const uint32_t blocks = t_ / r_;
    const uint32_t block = r_ * s_;
    auto build_matrix = [&](const std::vector<Elem>& cand) {
        std::vector<uint32_t> m(static_cast<size_t>(d_) * cand.size() * block, 0);
        size_t cols = cand.size() * block;
        for (size_t j = 0; j < cand.size(); ++j)
            for (uint32_t k = 0; k < block; ++k) {
                uint32_t prod = mul_code(cand[j].code(), subfield_fp_basis_[k].code());
                uint32_t dd[32];
                unpack(prod, dd);
                for (uint32_t i = 0; i < d_; ++i) m[i * cols + j * block + k] = dd[i];
            }
        return m;
    };

    std::vector<Elem> cand;
    cand.reserve(blocks);
    Elem pw = one();
    for (uint32_t j = 0; j < blocks; ++j) {
        cand.push_back(pw);
        pw = Elem(this, mul_code(pw.code(), x_.code()));
    }
    auto m = build_matrix(cand);
    auto inv = fp_invert(m, d_, p_);
    if (inv.empty()) {
        // greedy scan; for an irreducible modulus the power basis always
        // works, so this is a safety net only
        cand.clear();
        for (uint32_t code = 1; code < order_ && cand.size() < blocks; ++code) {
            cand.push_back(Elem(this, code));
            auto probe = build_matrix(cand);
            std::vector<int> piv = fp_eliminate(probe, d_, cand.size() * block, p_);
            if (piv.size() != cand.size() * block) cand.pop_back();
        }
        if (cand.size() != blocks) throw std::logic_error("no subfield expansion basis found");
        m = build_matrix(cand);
        inv = fp_invert(m, d_, p_);
        if (inv.empty()) throw std::logic_error("subfield expansion basis not invertible");
    }
    expansion_basis_ = std::move(cand);
    expand_inverse_ = std::move(inv);
}

Elem Field::elem(uint64_t code) const {
    if (code >= order_) throw std::out_of_range("element code out of range");
    return Elem(this, static_cast<uint32_t>(code));
}

Elem Field::from_digits(const std::vector<uint32_t>& digits) const {
    if (digits.size() != d_) throw std::invalid_argument("digit vector must have length s*t");
    uint32_t buf[32];
    for (uint32_t i = 0; i < d_; ++i) {
        if (digits[i] >= p_) throw std::invalid_argument("digit out of range [0,p)");
        buf[i] = digits[i];
    }
    return Elem(this, pack(buf));
}

std::vector<uint32_t> Field::digits(Elem a) const {
    assert(a.field() == this);
    uint32_t buf[32];
    unpack(a.code(), buf);
    return std::vector<uint32_t>(buf, buf + d_);
}

Elem Field::add(Elem a, Elem b) const { return Elem(this, add_code(a.code(), b.code())); }

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::neg(Elem a) const {
    if (p_ == 2) return a;
    uint32_t da[32];
    unpack(a.code(), da);
    for (uint32_t i = 0; i < d_; ++i) da[i] = (p_ - da[i]) % p_;
    return Elem(this, pack(da));
}

Elem Field::mul(Elem a, Elem b) const { return Elem(this, mul_code(a.code(), b.code())); }

Elem Field::inv(Elem a) const { return Elem(this, inv_code(a.code())); }

Elem Field::pow(Elem a, int64_t e) const {
    if (e < 0) {
        a = inv(a);
        e = -e;
    }
    Elem res = one(), base = a;
    uint64_t u = static_cast<uint64_t>(e);
    while (u) {
        if (u & 1) res = mul(res, base);
        base = mul(base, base);
        u >>= 1;
    }
    return res;
}

Elem Field::frobenius(Elem a, int64_t i) const {
    int64_t m = i % static_cast<int64_t>(t_);
    if (m < 0) m += t_;
    return Elem(this, frob_code(a.code(), static_cast<uint32_t>(m)));
}

Elem Field::trace_to_subfield(Elem a) const {
    Elem acc = zero();
    for (uint32_t i = 0; i < t_ / r_; ++i) acc = add(acc, frobenius(a, static_cast<int64_t>(r_) * i));
    return acc;
}

Elem Field::partial_norm(uint32_t i, Elem a) const {
    Elem norm = one();
    Elem cur = a;
    for (uint32_t k = 0; k < i; ++k) {
        norm = mul(norm, cur);
        cur = frobenius(cur, 1);
    }
    return norm;
}

Elem Field::conjugate(Elem a, Elem b) const {
    if (b.is_zero()) throw std::invalid_argument("conjugation by zero");
    return mul(mul(frobenius(b, 1), a), inv(b));
}

std::vector<Elem> Field::conjugacy_class(Elem a) const {
    if (a.is_zero()) return {zero()};
    std::set<uint32_t> orbit;
    for (uint32_t b = 1; b < order_; ++b)
        orbit.insert(conjugate(a, Elem(this, b)).code());
    std::vector<Elem> out;
    out.reserve(orbit.size());
    for (uint32_t c : orbit) out.push_back(Elem(this, c));
    return out;
}

bool Field::is_in_subfield(Elem a) const { return frobenius(a, r_) == a; }

bool Field::is_in_base_field(Elem a) const { return frobenius(a, 1) == a; }

std::vector<Elem> Field::expand_over_subfield(Elem a) const {
    const uint32_t blocks = t_ / r_;
    const uint32_t block = r_ * s_;
    uint32_t da[32];
    unpack(a.code(), da);
    // y = expand_inverse_ * digits(a) over F_p
    std::vector<Elem> out;
    out.reserve(blocks);
    for (uint32_t j = 0; j < blocks; ++j) {
        Elem cj = zero();
        for (uint32_t k = 0; k < block; ++k) {
            uint32_t y = 0;
            const size_t row = static_cast<size_t>(j) * block + k;
            for (uint32_t i = 0; i < d_; ++i)
                y = (y + expand_inverse_[row * d_ + i] * da[i]) % p_;
            for (uint32_t c = 0; c < y; ++c) cj = add(cj, subfield_fp_basis_[k]);
        }
        out.push_back(cj);
    }
    return out;
}

Elem Field::combine_from_subfield(const std::vector<Elem>& coords) const {
    if (coords.size() != t_ / r_)
        throw std::invalid_argument("coordinate vector must have length t/r");
    Elem acc = zero();
    for (size_t j = 0; j < coords.size(); ++j)
        acc = add(acc, mul(coords[j], expansion_basis_[j]));
    return acc;
}

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << order_ << " (p=" << p_ << " s=" << s_ << " t=" << t_ << " r=" << r_ << ")";
    return os.str();
}

} // namespace skewgoppa
