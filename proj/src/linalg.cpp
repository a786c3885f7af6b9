#include "weakore/linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace weakore {

// ---------------------------------------------------------------- Vector

Vector::Vector(std::size_t dim, std::vector<Entry> entries) : dim_(dim) {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& [i, v] : entries) {
        if (i >= dim_) throw std::out_of_range("vector index out of range");
        if (!entries_.empty() && entries_.back().first == i) {
            entries_.back().second += v;
            if (entries_.back().second.is_zero()) entries_.pop_back();
        } else if (!v.is_zero()) {
            entries_.emplace_back(i, std::move(v));
        }
    }
}

Vector Vector::unit(std::size_t dim, std::size_t i, const Scalar& value) {
    return Vector(dim, {{i, value}});
}

Vector Vector::from_dense(std::span<const Scalar> values) {
    Vector v(values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!values[i].is_zero()) v.entries_.emplace_back(i, values[i]);
    return v;
}

Scalar Vector::operator[](std::size_t i) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                               [](const Entry& e, std::size_t k) { return e.first < k; });
    if (it != entries_.end() && it->first == i) return it->second;
    return Scalar(0);
}

std::vector<Scalar> Vector::to_dense() const {
    std::vector<Scalar> out(dim_);
    for (const auto& [i, v] : entries_) out[i] = v;
    return out;
}

Vector& Vector::add_scaled(const Vector& other, const Scalar& c) {
    if (other.dim_ != dim_) throw std::invalid_argument("vector dimension mismatch");
    if (c.is_zero() || other.entries_.empty()) return *this;
    std::vector<Entry> merged;
    merged.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == entries_.end() || b->first < a->first) {
            merged.emplace_back(b->first, b->second * c);
            ++b;
        } else {
            Scalar s = a->second + b->second * c;
            if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
            ++a;
            ++b;
        }
    }
    entries_ = std::move(merged);
    return *this;
}

Vector& Vector::operator*=(const Scalar& c) {
    if (c.is_zero()) {
        entries_.clear();
        return *this;
    }
    for (auto& e : entries_) e.second *= c;
    return *this;
}

Vector Vector::operator-() const {
    Vector r = *this;
    for (auto& e : r.entries_) e.second = -e.second;
    return r;
}

bool operator==(const Vector& a, const Vector& b) {
    if (a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        if (a.entries_[k].first != b.entries_[k].first ||
            !(a.entries_[k].second == b.entries_[k].second))
            return false;
    return true;
}

bool canonical_less(const Vector& a, const Vector& b) {
    if (a.dim_ != b.dim_) return a.dim_ < b.dim_;
    std::size_t n = std::min(a.entries_.size(), b.entries_.size());
    for (std::size_t k = 0; k < n; ++k) {
        const auto& [ia, va] = a.entries_[k];
        const auto& [ib, vb] = b.entries_[k];
        if (ia != ib) return ia < ib;
        if (!(va == vb)) return canonical_less(va, vb);
    }
    return a.entries_.size() < b.entries_.size();
}

Scalar Vector::dot(const Vector& other) const {
    Scalar s(0);
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() && b != other.entries_.end()) {
        if (a->first < b->first) {
            ++a;
        } else if (b->first < a->first) {
            ++b;
        } else {
            s += a->second * b->second;
            ++a;
            ++b;
        }
    }
    return s;
}

std::string Vector::to_string(std::span<const std::string> labels) const {
    if (entries_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, v] : entries_) {
        std::string label = i < labels.size() ? labels[i] : "b" + std::to_string(i);
        std::string coeff = v.to_string();
        bool negative = v.is_rational() && sgn(v.rational()) < 0;
        if (negative) coeff = (-v).to_string();
        if (first) {
            if (negative) os << "-";
        } else {
            os << (negative ? " - " : " + ");
        }
        if (coeff != "1") os << coeff << "*";
        os << label;
        first = false;
    }
    return os.str();
}

Vector tensor(const Vector& a, const Vector& b) {
    Vector out(a.dim() * b.dim());
    std::vector<Vector::Entry> entries;
    entries.reserve(a.nnz() * b.nnz());
    for (const auto& [i, x] : a.entries())
        for (const auto& [j, y] : b.entries()) entries.emplace_back(i * b.dim() + j, x * y);
    return Vector(a.dim() * b.dim(), std::move(entries));
}

// ---------------------------------------------------------------- Accumulator

Accumulator::Accumulator(std::size_t dim) : dim_(dim), values_(dim), touched_(dim, 0) {}

void Accumulator::add(std::size_t i, const Scalar& c) {
    if (c.is_zero()) return;
    if (!touched_[i]) {
        touched_[i] = 1;
        order_.push_back(i);
        values_[i] = c;
    } else {
        values_[i] += c;
    }
}

void Accumulator::add_scaled(const Vector& v, const Scalar& c) {
    if (c.is_zero()) return;
    for (const auto& [i, x] : v.entries()) add(i, x * c);
}

Vector Accumulator::take() {
    std::sort(order_.begin(), order_.end());
    std::vector<Vector::Entry> entries;
    entries.reserve(order_.size());
    for (std::size_t i : order_) {
        if (!values_[i].is_zero()) entries.emplace_back(i, std::move(values_[i]));
        values_[i] = Scalar(0);
        touched_[i] = 0;
    }
    order_.clear();
    return Vector(dim_, std::move(entries));
}

// ---------------------------------------------------------------- Matrix

namespace {

bool column_major_less(const Matrix::Triplet& a, const Matrix::Triplet& b) {
    return a.col != b.col ? a.col < b.col : a.row < b.row;
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Triplet> entries)
    : rows_(rows), cols_(cols) {
    std::stable_sort(entries.begin(), entries.end(), column_major_less);
    for (auto& t : entries) {
        if (t.row >= rows_ || t.col >= cols_) throw std::out_of_range("matrix index out of range");
        if (!entries_.empty() && entries_.back().row == t.row && entries_.back().col == t.col) {
            entries_.back().value += t.value;
            if (entries_.back().value.is_zero()) entries_.pop_back();
        } else if (!t.value.is_zero()) {
            entries_.push_back(std::move(t));
        }
    }
}

Matrix Matrix::identity(std::size_t n, const Scalar& one) {
    std::vector<Triplet> t;
    for (std::size_t i = 0; i < n; ++i) t.push_back({i, i, one});
    return Matrix(n, n, std::move(t));
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
    std::vector<Triplet> t;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dim() != rows) throw std::invalid_argument("column dimension mismatch");
        for (const auto& [r, v] : columns[c].entries()) t.push_back({r, c, v});
    }
    return Matrix(rows, columns.size(), std::move(t));
}

Matrix Matrix::from_rows(std::size_t cols, std::span<const Vector> rows) {
    std::vector<Triplet> t;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].dim() != cols) throw std::invalid_argument("row dimension mismatch");
        for (const auto& [c, v] : rows[r].entries()) t.push_back({r, c, v});
    }
    return Matrix(rows.size(), cols, std::move(t));
}

Matrix Matrix::from_dense(const std::vector<std::vector<Scalar>>& rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    std::vector<Triplet> t;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw std::invalid_argument("ragged dense matrix");
        for (std::size_t c = 0; c < cols; ++c) t.push_back({r, c, rows[r][c]});
    }
    return Matrix(rows.size(), cols, std::move(t));
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
    Triplet key{r, c, Scalar(0)};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key, column_major_less);
    if (it != entries_.end() && it->row == r && it->col == c) return it->value;
    return Scalar(0);
}

Vector Matrix::column(std::size_t c) const {
    Triplet key{0, c, Scalar(0)};
    auto it = std::lower_bound(entries_.begin(), entries_.end(), key, column_major_less);
    std::vector<Vector::Entry> e;
    for (; it != entries_.end() && it->col == c; ++it) e.emplace_back(it->row, it->value);
    return Vector(rows_, std::move(e));
}

std::vector<Vector> Matrix::columns() const {
    std::vector<std::vector<Vector::Entry>> cols(cols_);
    for (const auto& t : entries_) cols[t.col].emplace_back(t.row, t.value);
    std::vector<Vector> out;
    out.reserve(cols_);
    for (auto& c : cols) out.emplace_back(rows_, std::move(c));
    return out;
}

std::vector<Vector> Matrix::row_vectors() const { return transpose().columns(); }

Vector Matrix::apply(const Vector& x) const {
    if (x.dim() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
    Accumulator acc(rows_);
    auto it = entries_.begin();
    for (const auto& [c, xv] : x.entries()) {
        it = std::lower_bound(it, entries_.end(), Triplet{0, c, Scalar(0)}, column_major_less);
        for (auto jt = it; jt != entries_.end() && jt->col == c; ++jt) acc.add(jt->row, jt->value * xv);
    }
    return acc.take();
}

Matrix Matrix::transpose() const {
    std::vector<Triplet> t;
    t.reserve(entries_.size());
    for (const auto& e : entries_) t.push_back({e.col, e.row, e.value});
    return Matrix(cols_, rows_, std::move(t));
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    std::vector<Vector> cols;
    cols.reserve(b.cols_);
    for (const auto& c : b.columns()) cols.push_back(a.apply(c));
    return Matrix::from_columns(a.rows_, cols);
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum mismatch");
    std::vector<Matrix::Triplet> t = a.entries_;
    t.insert(t.end(), b.entries_.begin(), b.entries_.end());
    return Matrix(a.rows_, a.cols_, std::move(t));
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + Scalar(-1) * b; }

Matrix operator*(const Scalar& c, const Matrix& m) {
    std::vector<Matrix::Triplet> t;
    for (const auto& e : m.entries_) t.push_back({e.row, e.col, e.value * c});
    return Matrix(m.rows_, m.cols_, std::move(t));
}

bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.entries_.size() != b.entries_.size())
        return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k) {
        const auto& x = a.entries_[k];
        const auto& y = b.entries_[k];
        if (x.row != y.row || x.col != y.col || !(x.value == y.value)) return false;
    }
    return true;
}

std::optional<std::size_t> first_differing_column(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return 0;
    auto ca = a.columns();
    auto cb = b.columns();
    for (std::size_t c = 0; c < ca.size(); ++c)
        if (!(ca[c] == cb[c])) return c;
    return std::nullopt;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    std::vector<Matrix::Triplet> t;
    t.reserve(a.nnz() * b.nnz());
    for (const auto& x : a.entries())
        for (const auto& y : b.entries())
            t.push_back({x.row * b.rows() + y.row, x.col * b.cols() + y.col, x.value * y.value});
    return Matrix(a.rows() * b.rows(), a.cols() * b.cols(), std::move(t));
}

// ---------------------------------------------------------------- elimination

Vector RowReducer::reduce(Vector v) const {
    for (const auto& [pc, row] : pivot_rows_) {
        Scalar c = v[pc];
        if (!c.is_zero()) v.add_scaled(row, -c);
    }
    return v;
}

bool RowReducer::add_row(Vector row) {
    if (row.dim() != cols_) throw std::invalid_argument("row width mismatch");
    row = reduce(std::move(row));
    if (row.is_zero()) return false;
    auto [pc, lead] = row.entries().front();
    if (lead.modulus() != 0) modulus_ = lead.modulus();
    row *= lead.inverse();
    for (auto& [other_pc, other] : pivot_rows_) {
        Scalar c = other[pc];
        if (!c.is_zero()) other.add_scaled(row, -c);
    }
    auto pos = std::lower_bound(pivot_rows_.begin(), pivot_rows_.end(), pc,
                                [](const auto& p, std::size_t k) { return p.first < k; });
    pivot_rows_.emplace(pos, pc, std::move(row));
    return true;
}

std::vector<Vector> RowReducer::basis() const {
    std::vector<Vector> out;
    for (const auto& [pc, row] : pivot_rows_) out.push_back(row);
    return out;
}

std::vector<std::size_t> RowReducer::pivot_columns() const {
    std::vector<std::size_t> out;
    for (const auto& [pc, row] : pivot_rows_) out.push_back(pc);
    return out;
}

std::vector<Vector> RowReducer::kernel() const {
    std::vector<char> is_pivot(cols_, 0);
    for (const auto& [pc, row] : pivot_rows_) is_pivot[pc] = 1;
    std::vector<Vector> out;
    for (std::size_t f = 0; f < cols_; ++f) {
        if (is_pivot[f]) continue;
        Scalar one = modulus_ ? Scalar::residue(1, modulus_) : Scalar(1);
        std::vector<Vector::Entry> e{{f, one}};
        for (const auto& [pc, row] : pivot_rows_) {
            Scalar c = row[f];
            if (!c.is_zero()) e.emplace_back(pc, -c);
        }
        out.emplace_back(cols_, std::move(e));
    }
    return out;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
    RowReducer rr(m.cols());
    for (auto& row : m.row_vectors()) rr.add_row(std::move(row));
    return rr.kernel();
}

std::size_t rank(const Matrix& m) {
    RowReducer rr(m.cols());
    for (auto& row : m.row_vectors()) rr.add_row(std::move(row));
    return rr.rank();
}

std::vector<Vector> image_basis(const Matrix& m) {
    RowReducer rr(m.rows());
    for (auto& col : m.columns()) rr.add_row(std::move(col));
    return rr.basis();
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
    if (b.dim() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
    const std::size_t n = m.cols();
    RowReducer rr(n + 1);
    auto rows = m.row_vectors();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        std::vector<Vector::Entry> e(rows[r].entries().begin(), rows[r].entries().end());
        Scalar rhs = b[r];
        if (!rhs.is_zero()) e.emplace_back(n, rhs);
        rr.add_row(Vector(n + 1, std::move(e)));
    }
    std::vector<Vector::Entry> x;
    for (const auto& row : rr.basis()) {
        std::size_t pc = row.entries().front().first;
        if (pc == n) return std::nullopt;
        Scalar v = row[n];
        if (!v.is_zero()) x.emplace_back(pc, v);
    }
    return Vector(n, std::move(x));
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < m.rows(); ++i) cols.push_back(*solve(m, Vector::unit(m.rows(), i)));
    return Matrix::from_columns(m.rows(), cols);
}

}  // namespace weakore
