#pragma once

#include "resband/cyclotomic.hpp"

#include <vector>

namespace resband {

// Dense matrix over Q(zeta_M), row-major. All entries share one order
// (entries of smaller order are lifted on insertion).
class CycMatrix {
public:
    CycMatrix() : rows_(0), cols_(0), order_(1) {}
    CycMatrix(std::size_t rows, std::size_t cols, unsigned order = 1)
        : rows_(rows), cols_(cols), order_(order), a_(rows * cols, Cyclotomic::zero(order)) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    unsigned order() const { return order_; }

    const Cyclotomic& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, const Cyclotomic& v) { a_[r * cols_ + c] = v.lifted_to(order_); }

    CycMatrix operator*(const CycMatrix& rhs) const;
    bool is_zero() const;

private:
    std::size_t rows_, cols_;
    unsigned order_;
    std::vector<Cyclotomic> a_;
};

enum class PivotOrder { TopDown, BottomUp };

struct KernelResult {
    std::size_t dimension = 0;
    // Basis vectors in reduced form: pivot columns ascending, each vector
    // rescaled so its first nonzero coordinate is 1.
    std::vector<std::vector<Cyclotomic>> basis;
};

std::size_t rank(const CycMatrix& m, PivotOrder order = PivotOrder::TopDown);
KernelResult kernel(const CycMatrix& m, PivotOrder order = PivotOrder::TopDown);

} // namespace resband
