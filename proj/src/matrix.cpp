#include "sextic/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace sextic {

Vector zero_vector(const Field& f, std::size_t n)
{
    return Vector(n, Scalar::zero(f));
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero())
            return false;
    return true;
}

Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size() || a.empty())
        throw std::invalid_argument("dot: length mismatch");
    Scalar s = Scalar::zero(a[0].field());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero())
            s += a[i] * b[i];
    return s;
}

Vector axpy(const Scalar& a, const Vector& x, const Vector& y)
{
    if (x.size() != y.size())
        throw std::invalid_argument("axpy: length mismatch");
    Vector r = y;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            r[i] += a * x[i];
    return r;
}

Vector scaled(const Scalar& a, const Vector& x)
{
    Vector r = x;
    for (auto& e : r)
        e *= a;
    return r;
}

std::string to_string(const Vector& v)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : "") << v[i].to_string();
    os << ')';
    return os.str();
}

Matrix::Matrix(const Field& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::identity(const Field& f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, 0, cols);
    for (const auto& r : rows)
        m.append_row(r);
    return m;
}

Matrix Matrix::from_ints(const Field& f, std::initializer_list<std::initializer_list<long>> rows)
{
    std::size_t cols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(f, 0, cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw std::invalid_argument("from_ints: ragged rows");
        Vector v;
        for (long x : r)
            v.emplace_back(f, x);
        m.append_row(v);
    }
    return m;
}

Vector Matrix::row(std::size_t i) const
{
    return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
}

void Matrix::set_row(std::size_t i, const Vector& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("set_row: length mismatch");
    for (std::size_t j = 0; j < cols_; ++j)
        data_[i * cols_ + j] = v[j];
}

void Matrix::append_row(const Vector& v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("append_row: length mismatch");
    for (const auto& x : v)
        if (x.field() != field_)
            throw FieldMismatch(field_, x.field());
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
}

Vector Matrix::column(std::size_t j) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        v.push_back((*this)(i, j));
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t(j, i) = (*this)(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const
{
    if (cols_ != o.rows_)
        throw std::invalid_argument("matrix product: shape mismatch");
    if (field_ != o.field_)
        throw FieldMismatch(field_, o.field_);
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero())
                continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero())
                    r(i, j) += a * o(k, j);
        }
    return r;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (v.size() != cols_)
        throw std::invalid_argument("matrix-vector product: shape mismatch");
    Vector r = zero_vector(field_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (!v[j].is_zero() && !(*this)(i, j).is_zero())
                r[i] += (*this)(i, j) * v[j];
    return r;
}

Matrix Matrix::operator-() const
{
    Matrix r = *this;
    for (auto& x : r.data_)
        x = -x;
    return r;
}

Matrix Matrix::operator+(const Matrix& o) const
{
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("matrix sum: shape mismatch");
    Matrix r = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        r.data_[i] += o.data_[i];
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const
{
    return *this + (-o);
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) const
{
    Matrix r(field_, rs.size(), cs.size());
    for (std::size_t i = 0; i < rs.size(); ++i)
        for (std::size_t j = 0; j < cs.size(); ++j)
            r(i, j) = (*this)(rs[i], cs[j]);
    return r;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (!x.is_zero())
            return false;
    return true;
}

bool Matrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i))
                return false;
    return true;
}

bool Matrix::operator==(const Matrix& o) const
{
    if (field_ != o.field_)
        throw FieldMismatch(field_, o.field_);
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols_ != bottom.cols_)
        throw std::invalid_argument("vstack: column mismatch");
    if (top.field_ != bottom.field_)
        throw FieldMismatch(top.field_, bottom.field_);
    Matrix r = top;
    r.data_.insert(r.data_.end(), bottom.data_.begin(), bottom.data_.end());
    r.rows_ += bottom.rows_;
    return r;
}

std::string Matrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i)
        os << ::sextic::to_string(row(i)) << '\n';
    return os.str();
}

namespace {

// ---- F_p kernels on raw residues ----

struct ModMatrix {
    std::size_t rows, cols;
    std::uint64_t p;
    std::vector<std::uint64_t> a;
    std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
};

ModMatrix to_mod(const Matrix& m)
{
    ModMatrix r{m.rows(), m.cols(), m.field().characteristic(), {}};
    r.a.resize(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.a[i * m.cols() + j] = m(i, j).residue();
    return r;
}

// Reduces to RREF in place; returns pivot columns. `det` tracks the determinant
// of the row operations when non-null (square input only).
std::vector<std::size_t> mod_rref(ModMatrix& m, bool full, std::uint64_t* det)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    std::uint64_t d = 1;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m.at(piv, c) == 0)
            ++piv;
        if (piv == m.rows) {
            if (det)
                d = 0;
            continue;
        }
        if (piv != r) {
            for (std::size_t j = 0; j < m.cols; ++j)
                std::swap(m.at(piv, j), m.at(r, j));
            d = (m.p - d) % m.p;
        }
        std::uint64_t pv = m.at(r, c);
        d = d * pv % m.p;
        std::uint64_t inv = inverse_mod(static_cast<std::uint32_t>(pv), static_cast<std::uint32_t>(m.p));
        for (std::size_t j = c; j < m.cols; ++j)
            m.at(r, j) = m.at(r, j) * inv % m.p;
        for (std::size_t i = full ? 0 : r + 1; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0)
                continue;
            std::uint64_t f = m.at(i, c);
            for (std::size_t j = c; j < m.cols; ++j)
                m.at(i, j) = (m.at(i, j) + (m.p - f) * m.at(r, j)) % m.p;
        }
        pivots.push_back(c);
        ++r;
    }
    if (det)
        *det = pivots.size() == m.rows ? d : 0;
    return pivots;
}

// ---- Q kernels: fraction-free on integer rows ----

std::vector<mpz_class> integer_rows(const Matrix& m, mpq_class* scale)
{
    std::vector<mpz_class> a(m.rows() * m.cols());
    mpq_class s = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const mpq_class& q = m(i, j).rational();
            a[i * m.cols() + j] = q.get_num() * (l / q.get_den());
        }
        s *= l;
    }
    if (scale)
        *scale = s;
    return a;
}

// Bareiss elimination. Returns rank; `last_pivot` receives the final leading
// minor (the determinant of the scaled matrix when it is square and full rank).
std::size_t bareiss(std::vector<mpz_class>& a, std::size_t rows, std::size_t cols, mpz_class* last_pivot,
                    int* sign)
{
    mpz_class prev = 1;
    std::size_t k = 0;
    int sg = 1;
    for (std::size_t c = 0; c < cols && k < rows; ++c) {
        std::size_t piv = k;
        while (piv < rows && a[piv * cols + c] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != k) {
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[k * cols + j]);
            sg = -sg;
        }
        const mpz_class& pk = a[k * cols + c];
        for (std::size_t i = k + 1; i < rows; ++i) {
            mpz_class& aic = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class& aij = a[i * cols + j];
                aij = pk * aij - aic * a[k * cols + j];
                mpz_divexact(aij.get_mpz_t(), aij.get_mpz_t(), prev.get_mpz_t());
            }
            aic = 0;
        }
        prev = pk;
        ++k;
    }
    if (last_pivot)
        *last_pivot = prev;
    if (sign)
        *sign = sg;
    return k;
}

} // namespace

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    if (m.field().is_prime()) {
        ModMatrix mm = to_mod(m);
        return mod_rref(mm, false, nullptr).size();
    }
    auto a = integer_rows(m, nullptr);
    return bareiss(a, m.rows(), m.cols(), nullptr, nullptr);
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const Field& f = m.field();
    if (m.rows() == 0)
        return Scalar::one(f);
    if (f.is_prime()) {
        ModMatrix mm = to_mod(m);
        std::uint64_t d = 0;
        mod_rref(mm, false, &d);
        return Scalar(f, static_cast<long>(d));
    }
    mpq_class scale;
    auto a = integer_rows(m, &scale);
    mpz_class last;
    int sign = 1;
    std::size_t r = bareiss(a, m.rows(), m.cols(), &last, &sign);
    if (r < m.rows())
        return Scalar::zero(f);
    return Scalar(mpq_class(sign * last) / scale);
}

Matrix adjugate(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (n != m.cols())
        throw std::invalid_argument("adjugate of a non-square matrix");
    Matrix adj(m.field(), n, n);
    if (n == 1) {
        adj(0, 0) = Scalar::one(m.field());
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<std::size_t> rs, cs;
            for (std::size_t k = 0; k < n; ++k) {
                if (k != j)
                    rs.push_back(k);
                if (k != i)
                    cs.push_back(k);
            }
            Scalar minor = determinant(m.submatrix(rs, cs));
            adj(i, j) = (i + j) % 2 ? -minor : minor;
        }
    return adj;
}

Echelon rref(const Matrix& m)
{
    const Field& f = m.field();
    if (f.is_prime()) {
        ModMatrix mm = to_mod(m);
        auto pivots = mod_rref(mm, true, nullptr);
        Matrix out(f, pivots.size(), m.cols());
        for (std::size_t i = 0; i < pivots.size(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                out(i, j) = Scalar(f, static_cast<long>(mm.at(i, j)));
        return {std::move(out), std::move(pivots)};
    }
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<mpq_class> a(rows * cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            a[i * cols + j] = m(i, j).rational();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && sgn(a[piv * cols + c]) == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j)
                std::swap(a[piv * cols + j], a[r * cols + j]);
        mpq_class inv = 1 / a[r * cols + c];
        for (std::size_t j = c; j < cols; ++j)
            a[r * cols + j] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || sgn(a[i * cols + c]) == 0)
                continue;
            mpq_class fct = a[i * cols + c];
            for (std::size_t j = c; j < cols; ++j)
                a[i * cols + j] -= fct * a[r * cols + j];
        }
        pivots.push_back(c);
        ++r;
    }
    Matrix out(f, pivots.size(), cols);
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < cols; ++j)
            out(i, j) = Scalar(a[i * cols + j]);
    return {std::move(out), std::move(pivots)};
}

} // namespace sextic
