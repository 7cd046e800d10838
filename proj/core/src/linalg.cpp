#include "hypercover/linalg.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cassert>

namespace hypercover {

namespace {

// Fraction-free elimination in place. Returns the pivot count; pivot column
// positions are appended to pivot_cols when requested. Pivots are the first
// nonzero entry scanning each column top-down, so the result is deterministic.
std::size_t bareiss(IntMatrix& a, int* sign, std::vector<std::size_t>* pivot_cols) {
    const std::size_t r = a.rows(), c = a.cols();
    Int prev = 1;
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && a.at(p, col) == 0) ++p;
        if (p == r) continue;
        if (p != row) {
            a.swap_rows(p, row);
            if (sign) *sign = -*sign;
        }
        for (std::size_t i = row + 1; i < r; ++i) {
            for (std::size_t j = col + 1; j < c; ++j) {
                Int num = a.at(i, j) * a.at(row, col) - a.at(i, col) * a.at(row, j);
                assert(num % prev == 0);
                a.at(i, j) = num / prev;
            }
            a.at(i, col) = 0;
        }
        prev = a.at(row, col);
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return row;
}

// Gauss-Jordan over the rationals on an augmented matrix [m | extra].
// Returns the reduced rows and the pivot columns among the first m.cols()
// columns. extra may be empty.
struct Reduced {
    std::vector<std::vector<Rat>> rows;
    std::vector<std::size_t> pivot_cols;
};

Reduced rref(const IntMatrix& m, const std::vector<Int>& extra) {
    const std::size_t r = m.rows(), c = m.cols();
    const std::size_t width = c + (extra.empty() ? 0 : 1);
    Reduced out;
    out.rows.assign(r, std::vector<Rat>(width, Rat(0)));
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) out.rows[i][j] = Rat(m.at(i, j));
        if (!extra.empty()) out.rows[i][c] = Rat(extra[i]);
    }
    std::size_t row = 0;
    for (std::size_t col = 0; col < c && row < r; ++col) {
        std::size_t p = row;
        while (p < r && out.rows[p][col] == 0) ++p;
        if (p == r) continue;
        std::swap(out.rows[p], out.rows[row]);
        const Rat piv = out.rows[row][col];
        for (std::size_t j = col; j < width; ++j) out.rows[row][j] /= piv;
        for (std::size_t i = 0; i < r; ++i) {
            if (i == row || out.rows[i][col] == 0) continue;
            const Rat f = out.rows[i][col];
            for (std::size_t j = col; j < width; ++j)
                out.rows[i][j] -= f * out.rows[row][j];
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

} // namespace

std::size_t rank_exact(const IntMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntMatrix a = m;
    return bareiss(a, nullptr, nullptr);
}

Int determinant_exact(const IntMatrix& m) {
    if (m.rows() != m.cols())
        throw usage_error("determinant_exact: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    int sign = 1;
    if (bareiss(a, &sign, nullptr) < n) return 0;
    Int d = a.at(n - 1, n - 1);
    return sign < 0 ? Int(-d) : d;
}

std::optional<KernelVector> kernel_vector(const IntMatrix& m) {
    const std::size_t c = m.cols();
    if (c == 0) return std::nullopt;
    Reduced red = rref(m, {});
    if (red.pivot_cols.size() == c) return std::nullopt;

    std::vector<bool> is_pivot(c, false);
    for (std::size_t pc : red.pivot_cols) is_pivot[pc] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;

    std::vector<Rat> x(c, Rat(0));
    x[free_col] = 1;
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        x[red.pivot_cols[i]] = -red.rows[i][free_col];

    Int scale = 1;
    for (const Rat& xi : x)
        scale = boost::multiprecision::lcm(scale, denominator(xi));
    std::vector<Int> v(c);
    for (std::size_t j = 0; j < c; ++j)
        v[j] = numerator(x[j]) * (scale / denominator(x[j]));
    return KernelVector::canonical(std::move(v));
}

bool columns_independent(const IntMatrix& m, const std::vector<std::size_t>& cols) {
    for (std::size_t c : cols)
        if (c >= m.cols())
            throw usage_error("columns_independent: column index out of range");
    if (cols.size() > m.rows()) return false;
    return rank_exact(m.select_columns(cols)) == cols.size();
}

std::optional<std::vector<Rat>> solve_particular(const IntMatrix& m,
                                                 const std::vector<Int>& rhs) {
    if (rhs.size() != m.rows())
        throw usage_error("solve_particular: right-hand side length mismatch");
    const std::size_t c = m.cols();
    std::vector<Int> extra = rhs;
    if (extra.empty()) extra.push_back(0); // keep the augmented column for 0-row systems
    Reduced red = rref(m, extra);
    for (std::size_t i = red.pivot_cols.size(); i < red.rows.size(); ++i)
        if (red.rows[i][c] != 0) return std::nullopt;
    std::vector<Rat> z(c, Rat(0));
    for (std::size_t i = 0; i < red.pivot_cols.size(); ++i)
        z[red.pivot_cols[i]] = red.rows[i][c];
    return z;
}

} // namespace hypercover
