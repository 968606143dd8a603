#include "gessel/linalg.hpp"

#include <utility>

namespace gessel {

RationalVector solve_linear(RationalMatrix a, RationalVector b) {
    const size_t n = a.size();
    if (b.size() != n) throw PreconditionViolation("solve_linear: matrix/vector size mismatch");
    for (const auto& row : a)
        if (row.size() != n) throw PreconditionViolation("solve_linear: matrix is not square");

    for (size_t col = 0; col < n; ++col) {
        size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) throw SingularSystem("solve_linear: singular matrix");
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            Rational f = a[row][col] / a[col][col];
            a[row][col] = 0;
            for (size_t j = col + 1; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }

    RationalVector x(n);
    for (size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (size_t j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

} // namespace gessel
