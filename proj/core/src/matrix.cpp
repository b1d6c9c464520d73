#include "resband/matrix.hpp"

#include "resband/errors.hpp"

namespace resband {

CycMatrix CycMatrix::operator*(const CycMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw invariant_error("matrix shape mismatch");
    CycMatrix r(rows_, rhs.cols_, lcm_order(order_, rhs.order_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                if (rhs.at(k, j).is_zero()) continue;
                r.a_[i * rhs.cols_ + j] += at(i, k) * rhs.at(k, j);
            }
        }
    return r;
}

bool CycMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

namespace {

// Row-reduce a working copy to RREF. Returns pivot column per pivot row.
// PivotOrder controls the row scan when picking a pivot, exercising a
// different elimination path for cross-checks.
std::vector<std::size_t> rref(std::vector<std::vector<Cyclotomic>>& m, PivotOrder order) {
    std::vector<std::size_t> pivot_cols;
    if (m.empty()) return pivot_cols;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = rows;
        if (order == PivotOrder::TopDown) {
            for (std::size_t r = row; r < rows; ++r)
                if (!m[r][col].is_zero()) { pivot = r; break; }
        } else {
            for (std::size_t r = rows; r-- > row;)
                if (!m[r][col].is_zero()) { pivot = r; break; }
        }
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        Cyclotomic inv = m[row][col].inverse();
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            Cyclotomic f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

std::vector<std::vector<Cyclotomic>> to_rows(const CycMatrix& m) {
    std::vector<std::vector<Cyclotomic>> rows(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        rows[r].reserve(m.cols());
        for (std::size_t c = 0; c < m.cols(); ++c) rows[r].push_back(m.at(r, c));
    }
    return rows;
}

} // namespace

std::size_t rank(const CycMatrix& m, PivotOrder order) {
    auto rows = to_rows(m);
    return rref(rows, order).size();
}

KernelResult kernel(const CycMatrix& m, PivotOrder order) {
    auto rows = to_rows(m);
    auto pivot_cols = rref(rows, order);
    KernelResult result;
    std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Cyclotomic> v(cols, Cyclotomic::zero(m.order()));
        v[free_col] = Cyclotomic::one(m.order());
        for (std::size_t p = 0; p < pivot_cols.size(); ++p) {
            if (pivot_cols[p] < free_col && !rows[p][free_col].is_zero())
                v[pivot_cols[p]] = -rows[p][free_col];
        }
        // normalize: first nonzero coordinate equals 1
        for (auto& x : v) {
            if (x.is_zero()) continue;
            if (!(x == Cyclotomic::one(m.order()))) {
                Cyclotomic inv = x.inverse();
                for (auto& y : v) y *= inv;
            }
            break;
        }
        result.basis.push_back(std::move(v));
    }
    result.dimension = result.basis.size();
    return result;
}

} // namespace resband
