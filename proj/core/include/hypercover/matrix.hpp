#pragma once

#include "hypercover/errors.hpp"
#include "hypercover/numeric.hpp"

#include <cstddef>
#include <vector>

namespace hypercover {

// Dense integer matrix, row-major, arbitrary-precision entries.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Int& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Int& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntMatrix transpose() const;

    // Submatrix keeping the given columns, in the given order.
    IntMatrix select_columns(const std::vector<std::size_t>& cols) const;

    void swap_rows(std::size_t a, std::size_t b);

    // Largest absolute entry; 0 for an empty matrix.
    Int sup_norm() const;

    bool operator==(const IntMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

// Canonical nonzero integer vector: entries share no common factor and the
// first nonzero entry is positive.
class KernelVector {
public:
    // Canonicalizes v; rejects empty or all-zero input.
    static KernelVector canonical(std::vector<Int> v);

    const std::vector<Int>& coords() const { return coords_; }
    std::size_t dimension() const { return coords_.size(); }

    bool operator==(const KernelVector&) const = default;

private:
    KernelVector() = default;
    std::vector<Int> coords_;
};

} // namespace hypercover
