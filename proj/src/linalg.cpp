#include "mldeg/linalg.hpp"

#include "mldeg/error.hpp"

#include <utility>

namespace mldeg {

Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n)
            throw Error(ErrorCode::DimensionMismatch, "determinant of a non-square matrix");
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && m[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            return 0;
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col] == 0)
                continue;
            Rational factor = m[r][col] / m[col][col];
            for (std::size_t c = col; c < n; ++c)
                m[r][c] -= factor * m[col][c];
        }
    }
    return det;
}

RationalMatrix rref(RationalMatrix m)
{
    if (m.empty())
        return m;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0)
            ++pivot;
        if (pivot == m.size())
            continue;
        std::swap(m[pivot], m[row]);
        Rational inv = 1 / m[row][col];
        for (std::size_t c = col; c < cols; ++c)
            m[row][c] *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0)
                continue;
            Rational factor = m[r][col];
            for (std::size_t c = col; c < cols; ++c)
                m[r][c] -= factor * m[row][c];
        }
        ++row;
    }
    m.resize(row);
    return m;
}

std::size_t rank(const RationalMatrix& m)
{
    return rref(m).size();
}

} // namespace mldeg
