#include "abx/linalg.hpp"

#include <utility>

namespace abx {

Rref rref(Matrix m, std::size_t cols)
{
    Rref out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && sgn(m[p][c]) == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[r]);
        Rational inv = 1 / m[r][c];
        for (std::size_t j = c; j < cols; ++j)
            m[r][j] *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || sgn(m[i][c]) == 0)
                continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < cols; ++j)
                m[i][j] -= f * m[r][j];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    m.resize(r);
    out.rows = std::move(m);
    return out;
}

int rank(const Matrix& m)
{
    if (m.empty())
        return 0;
    return static_cast<int>(rref(m, m[0].size()).pivots.size());
}

std::vector<Point> nullspace(const Matrix& m, std::size_t cols)
{
    Rref r = rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (int p : r.pivots)
        is_pivot[p] = true;
    std::vector<Point> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f])
            continue;
        Point v = zero_point(cols);
        v[f] = 1;
        for (std::size_t i = 0; i < r.rows.size(); ++i)
            v[r.pivots[i]] = -r.rows[i][f];
        basis.push_back(primitive(v));
    }
    return basis;
}

std::optional<Point> solve(const Matrix& a, const Point& b)
{
    std::size_t n = a.empty() ? 0 : a[0].size();
    Matrix aug(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        aug[i] = a[i];
        aug[i].push_back(b.at(i));
    }
    Rref r = rref(std::move(aug), n + 1);
    if (r.pivots.size() != n)
        return std::nullopt;
    if (!r.pivots.empty() && r.pivots.back() == static_cast<int>(n))
        return std::nullopt;
    Point x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[r.pivots[i]] = r.rows[i][n];
    return x;
}

Rational determinant(Matrix m)
{
    std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(m[p][c]) == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (sgn(m[i][c]) == 0)
                continue;
            Rational f = m[i][c] / m[c][c];
            for (std::size_t j = c; j < n; ++j)
                m[i][j] -= f * m[c][j];
        }
    }
    return d;
}

Integer determinant(IntMatrix m)
{
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    int sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0)
                ++p;
            if (p == n)
                return 0;
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                m[i][j] = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), m[i][j].get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

Matrix transpose(const Matrix& m)
{
    if (m.empty())
        return {};
    Matrix t(m[0].size(), Point(m.size()));
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j)
            t[j][i] = m[i][j];
    return t;
}

} // namespace abx
