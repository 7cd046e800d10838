#include "hypercover/matrix.hpp"

#include <utility>

namespace hypercover {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows[0].size();
    for (const auto& row : rows)
        if (row.size() != c)
            throw usage_error("IntMatrix::from_rows: ragged rows");
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = rows[i][j];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::select_columns(const std::vector<std::size_t>& cols) const {
    for (std::size_t c : cols)
        if (c >= cols_)
            throw usage_error("IntMatrix::select_columns: column index out of range");
    IntMatrix m(rows_, cols.size());
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            m.at(i, j) = at(i, cols[j]);
    return m;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j)
        std::swap(at(a, j), at(b, j));
}

Int IntMatrix::sup_norm() const {
    Int best = 0;
    for (const Int& x : data_)
        if (abs(x) > best) best = abs(x);
    return best;
}

KernelVector KernelVector::canonical(std::vector<Int> v) {
    if (v.empty())
        throw usage_error("KernelVector: empty vector");
    if (!canonicalize_primitive(v))
        throw usage_error("KernelVector: zero vector");
    KernelVector k;
    k.coords_ = std::move(v);
    return k;
}

} // namespace hypercover
