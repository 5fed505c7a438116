#include "mackeyss/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace mss {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows)
{
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_)
            throw std::invalid_argument("ragged matrix literal");
        for (long long v : r)
            data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVector& d)
{
    IntMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<IntVector>& cols)
{
    IntMatrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows)
            throw std::invalid_argument("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r)
            m(r, c) = cols[c][r];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void IntMatrix::set_column(std::size_t c, const IntVector& v)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const
{
    IntMatrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& idx) const
{
    IntMatrix b(idx.size(), cols_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            b(r, c) = (*this)(idx[r], c);
    return b;
}

IntMatrix IntMatrix::select_cols(const std::vector<std::size_t>& idx) const
{
    IntMatrix b(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            b(r, c) = (*this)(r, idx[c]);
    return b;
}

bool IntMatrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t c = 0; c < cols_; ++c)
        std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
    if (a == b)
        return;
    for (std::size_t r = 0; r < rows_; ++r)
        std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k.is_zero())
        return;
    Integer* d = &data_[dst * cols_];
    const Integer* s = &data_[src * cols_];
    for (std::size_t c = 0; c < cols_; ++c)
        if (!s[c].is_zero())
            d[c] += k * s[c];
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Integer& k)
{
    if (k.is_zero())
        return;
    for (std::size_t r = 0; r < rows_; ++r) {
        const Integer& s = (*this)(r, src);
        if (!s.is_zero())
            (*this)(r, dst) += k * s;
    }
}

void IntMatrix::negate_row(std::size_t r)
{
    for (std::size_t c = 0; c < cols_; ++c)
        (*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = -(*this)(r, c);
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("apply: dimension mismatch");
    IntVector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (v[c].is_zero())
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Integer& a = (*this)(r, c);
            if (!a.is_zero())
                out[r] += a * v[c];
        }
    }
    return out;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Integer& x = a(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                const Integer& y = b(k, j);
                if (!y.is_zero())
                    p(i, j) += x * y;
            }
        }
    return p;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix sum: dimension mismatch");
    IntMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i)
        s.data_[i] += b.data_[i];
    return s;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    IntMatrix s = a;
    for (std::size_t i = 0; i < s.data_.size(); ++i)
        s.data_[i] -= b.data_[i];
    return s;
}

IntMatrix operator*(const Integer& k, const IntMatrix& a)
{
    IntMatrix s = a;
    for (auto& x : s.data_)
        x *= k;
    return s;
}

bool operator==(const IntMatrix& a, const IntMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string IntMatrix::str() const
{
    std::ostringstream os;
    os << "[";
    for (std::size_t r = 0; r < rows_; ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < cols_; ++c)
            os << (c ? " " : "") << (*this)(r, c);
    }
    os << "]";
    return os.str();
}

IntMatrix hcat(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols() == 0)
        return b.rows() == a.rows() || a.rows() == 0 ? b : throw std::invalid_argument("hcat: row mismatch");
    if (b.cols() == 0)
        return a;
    if (a.rows() != b.rows())
        throw std::invalid_argument("hcat: row mismatch");
    IntMatrix m(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(r, a.cols() + c) = b(r, c);
    }
    return m;
}

IntMatrix vcat(const IntMatrix& a, const IntMatrix& b)
{
    return hcat(a.transpose(), b.transpose()).transpose();
}

IntMatrix block_diag(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            m(a.rows() + r, a.cols() + c) = b(r, c);
    return m;
}

Integer determinant(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return Integer(1);
    IntMatrix a = m;
    Integer prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero())
                ++p;
            if (p == n)
                return Integer(0);
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : -a(n - 1, n - 1);
}

IntVector SmithForm::diagonal() const
{
    std::size_t k = std::min(D.rows(), D.cols());
    IntVector d(k);
    for (std::size_t i = 0; i < k; ++i)
        d[i] = D(i, i);
    return d;
}

namespace {

struct SmithWork {
    IntMatrix& A;
    IntMatrix* U;
    IntMatrix* Uinv;
    IntMatrix* V;
    IntMatrix* Vinv;

    // row dst += k * row src on A; U tracks row ops, Uinv their inverses.
    void row_add(std::size_t dst, std::size_t src, const Integer& k)
    {
        A.add_row_multiple(dst, src, k);
        if (U)
            U->add_row_multiple(dst, src, k);
        if (Uinv)
            Uinv->add_col_multiple(src, dst, -k);
    }
    void col_add(std::size_t dst, std::size_t src, const Integer& k)
    {
        A.add_col_multiple(dst, src, k);
        if (V)
            V->add_col_multiple(dst, src, k);
        if (Vinv)
            Vinv->add_row_multiple(src, dst, -k);
    }
    void row_swap(std::size_t a, std::size_t b)
    {
        A.swap_rows(a, b);
        if (U)
            U->swap_rows(a, b);
        if (Uinv)
            Uinv->swap_cols(a, b);
    }
    void col_swap(std::size_t a, std::size_t b)
    {
        A.swap_cols(a, b);
        if (V)
            V->swap_cols(a, b);
        if (Vinv)
            Vinv->swap_rows(a, b);
    }
    void row_neg(std::size_t r)
    {
        A.negate_row(r);
        if (U)
            U->negate_row(r);
        if (Uinv)
            Uinv->negate_col(r);
    }
};

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m, SmithOptions opt)
{
    SmithForm out;
    out.D = m;
    std::size_t R = m.rows(), C = m.cols();
    if (opt.want_u)
        out.U = IntMatrix::identity(R);
    if (opt.want_uinv)
        out.Uinv = IntMatrix::identity(R);
    if (opt.want_v)
        out.V = IntMatrix::identity(C);
    if (opt.want_vinv)
        out.Vinv = IntMatrix::identity(C);
    SmithWork w{out.D, opt.want_u ? &out.U : nullptr, opt.want_uinv ? &out.Uinv : nullptr,
                opt.want_v ? &out.V : nullptr, opt.want_vinv ? &out.Vinv : nullptr};
    IntMatrix& A = out.D;

    std::size_t t = 0;
    for (; t < R && t < C; ++t) {
        // Pivot: entry of minimal absolute value in the trailing block.
        for (;;) {
            std::size_t pr = R, pc = C;
            Integer best;
            for (std::size_t i = t; i < R; ++i)
                for (std::size_t j = t; j < C; ++j) {
                    const Integer& x = A(i, j);
                    if (x.is_zero())
                        continue;
                    if (pr == R || abs(x) < best) {
                        best = abs(x);
                        pr = i;
                        pc = j;
                        if (best.is_one())
                            goto found;
                    }
                }
        found:
            if (pr == R)
                goto done;
            w.row_swap(t, pr);
            w.col_swap(t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < R; ++i) {
                if (A(i, t).is_zero())
                    continue;
                Integer q = floor_div(A(i, t), A(t, t));
                w.row_add(i, t, -q);
                if (!A(i, t).is_zero())
                    clean = false;
            }
            for (std::size_t j = t + 1; j < C; ++j) {
                if (A(t, j).is_zero())
                    continue;
                Integer q = floor_div(A(t, j), A(t, t));
                w.col_add(j, t, -q);
                if (!A(t, j).is_zero())
                    clean = false;
            }
            if (!clean)
                continue;
            // Row and column are clear; enforce divisibility of the trailing block.
            bool divisible = true;
            for (std::size_t i = t + 1; i < R && divisible; ++i)
                for (std::size_t j = t + 1; j < C; ++j)
                    if (!divides(A(t, t), A(i, j))) {
                        w.row_add(t, i, Integer(1));
                        divisible = false;
                        break;
                    }
            if (divisible)
                break;
        }
        if (A(t, t).sign() < 0)
            w.row_neg(t);
    }
done:
    out.rank = 0;
    for (std::size_t i = 0; i < std::min(R, C); ++i)
        if (!A(i, i).is_zero())
            ++out.rank;
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    SmithOptions opt;
    opt.want_u = false;
    SmithForm s = smith_normal_form(m, opt);
    std::vector<std::size_t> idx;
    for (std::size_t j = s.rank; j < m.cols(); ++j)
        idx.push_back(j);
    return s.V.select_cols(idx);
}

}  // namespace mss
