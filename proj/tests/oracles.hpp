#pragma once

// Independent reference computations for the unit tests. Nothing here calls the library's geometry.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "abx/rational.hpp"

namespace oracle {

using abx::Point;
using abx::Rational;

inline Rational cross(const Point& o, const Point& a, const Point& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain, counter-clockwise, collinear points dropped.
inline std::vector<Point> hull2(std::vector<Point> pts)
{
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3)
        return pts;
    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0)
            --k;
        h[k++] = p;
    }
    for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0)
            --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

inline Rational shoelace(const std::vector<Point>& pts)
{
    auto h = hull2(pts);
    Rational s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Point& a = h[i];
        const Point& b = h[(i + 1) % h.size()];
        s += a[0] * b[1] - a[1] * b[0];
    }
    return abs(s) / 2;
}

inline std::vector<Point> msum(const std::vector<Point>& a, const std::vector<Point>& b)
{
    std::vector<Point> out;
    for (const auto& x : a)
        for (const auto& y : b)
            out.push_back({x[0] + y[0], x[1] + y[1]});
    return out;
}

inline std::vector<Point> neg(std::vector<Point> a)
{
    for (auto& p : a)
        for (auto& x : p)
            x = -x;
    return a;
}

// V(A, B) in the plane from Vol(A + B) = Vol(A) + 2 V(A, B) + Vol(B).
inline Rational mixed2(const std::vector<Point>& a, const std::vector<Point>& b)
{
    return (shoelace(msum(a, b)) - shoelace(a) - shoelace(b)) / 2;
}

// Vertices of {x : <a_i, x> <= b_i} in the plane, by intersecting every pair of lines.
inline std::vector<Point> vertices2(const std::vector<std::pair<Point, Rational>>& hs)
{
    std::vector<Point> out;
    for (std::size_t i = 0; i < hs.size(); ++i)
        for (std::size_t j = i + 1; j < hs.size(); ++j) {
            const auto& [a, s] = hs[i];
            const auto& [b, t] = hs[j];
            Rational det = a[0] * b[1] - a[1] * b[0];
            if (det == 0)
                continue;
            Point x{(s * b[1] - a[1] * t) / det, (a[0] * t - s * b[0]) / det};
            bool ok = true;
            for (const auto& [c, u] : hs)
                ok = ok && c[0] * x[0] + c[1] * x[1] <= u;
            if (ok)
                out.push_back(x);
        }
    return hull2(out);
}

// pred[b] has bit a set iff a < b, as in abx::Poset.
inline long linear_extensions(int n, const std::vector<std::uint32_t>& pred, std::uint32_t subset)
{
    std::vector<int> elems;
    for (int i = 0; i < n; ++i)
        if (subset >> i & 1u)
            elems.push_back(i);
    long count = 0;
    do {
        bool ok = true;
        for (std::size_t x = 0; x < elems.size() && ok; ++x)
            for (std::size_t y = x + 1; y < elems.size() && ok; ++y)
                if (pred[elems[x]] >> elems[y] & 1u)
                    ok = false;
        count += ok;
    } while (std::next_permutation(elems.begin(), elems.end()));
    return count;
}

inline long e_j(int n, const std::vector<std::uint32_t>& p, const std::vector<std::uint32_t>& q, int j)
{
    long s = 0;
    std::uint32_t all = (1u << n) - 1;
    for (std::uint32_t J = 0; J <= all; ++J)
        if (__builtin_popcount(J) == j)
            s += linear_extensions(n, p, J) * linear_extensions(n, q, all ^ J);
    return s;
}

} // namespace oracle

namespace testing_util {

inline abx::Rational q(long a, long b = 1) { return abx::ratio(a, b); }

inline std::vector<abx::Point> pts(std::initializer_list<std::initializer_list<abx::Rational>> xs)
{
    std::vector<abx::Point> out;
    for (const auto& x : xs)
        out.emplace_back(x);
    return out;
}

} // namespace testing_util
