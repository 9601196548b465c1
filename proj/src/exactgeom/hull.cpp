#include "hull.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace abx::detail {

namespace {

using i128 = __int128;

i128 abs_of(i128 x) { return x < 0 ? -x : x; }
Integer abs_of(const Integer& x) { return abs(x); }

i128 gcd_of(i128 a, i128 b)
{
    a = abs_of(a);
    b = abs_of(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Integer gcd_of(const Integer& a, const Integer& b)
{
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

void divide(i128& x, const i128& g) { x /= g; }
void divide(Integer& x, const Integer& g) { mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t()); }

Integer to_integer(i128 x)
{
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    Integer hi = static_cast<unsigned long>(static_cast<unsigned long long>(u >> 64));
    Integer lo = static_cast<unsigned long>(static_cast<unsigned long long>(u));
    Integer r = (hi << 64) + lo;
    return neg ? Integer(-r) : r;
}
Integer to_integer(const Integer& x) { return x; }

template <class T> T from_integer(const Integer& x);
template <> Integer from_integer<Integer>(const Integer& x) { return x; }
template <> i128 from_integer<i128>(const Integer& x)
{
    Integer a = abs(x);
    Integer hi = a >> 64;
    Integer lo = a - (hi << 64);
    unsigned __int128 u = (static_cast<unsigned __int128>(hi.get_ui()) << 64) | lo.get_ui();
    i128 r = static_cast<i128>(u);
    return sgn(x) < 0 ? -r : r;
}

// Laplace expansion; used only for the small sizes the fast path admits.
i128 det_of(std::vector<std::vector<i128>> m)
{
    std::size_t n = m.size();
    if (n == 0)
        return 1;
    if (n == 1)
        return m[0][0];
    if (n == 2)
        return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    i128 total = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0)
            continue;
        std::vector<std::vector<i128>> minor(n - 1, std::vector<i128>(n - 1));
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0, jj = 0; j < n; ++j)
                if (j != c)
                    minor[i - 1][jj++] = m[i][j];
        i128 d = m[0][c] * det_of(std::move(minor));
        total += c % 2 ? -d : d;
    }
    return total;
}

Integer det_of(std::vector<std::vector<Integer>> m) { return determinant(std::move(m)); }

template <class T> T dot_of(const std::vector<T>& a, const std::vector<T>& b)
{
    T s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

// Rank of integer rows by fraction-free elimination.
int int_rank(std::vector<IntVector> rows, int k)
{
    int r = 0;
    for (int c = 0; c < k && r < static_cast<int>(rows.size()); ++c) {
        int p = r;
        while (p < static_cast<int>(rows.size()) && rows[p][c] == 0)
            ++p;
        if (p == static_cast<int>(rows.size()))
            continue;
        std::swap(rows[p], rows[r]);
        for (std::size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][c] == 0)
                continue;
            Integer a = rows[r][c], b = rows[i][c];
            Integer g = 0;
            for (int j = 0; j < k; ++j) {
                rows[i][j] = rows[i][j] * a - rows[r][j] * b;
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), rows[i][j].get_mpz_t());
            }
            if (g > 1)
                for (auto& x : rows[i])
                    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        }
        ++r;
    }
    return r;
}

template <class T> struct Facet {
    std::vector<int> verts;
    std::vector<int> nb;
    std::vector<T> normal;
    T offset;
    std::vector<int> outside;
    bool alive = true;
    unsigned visible = 0;
    unsigned tested = 0;
    bool tested_result = false;
};

struct KeyHash {
    std::size_t operator()(const std::vector<int>& v) const
    {
        std::size_t h = 1469598103934665603ull;
        for (int x : v)
            h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

template <class T> class Builder {
public:
    using Vec = std::vector<T>;

    Builder(std::vector<Vec> pts, int k) : pts_(std::move(pts)), k_(k) {}

    void run()
    {
        initial_simplex();
        std::vector<int> work;
        for (int f = 0; f < static_cast<int>(facets_.size()); ++f)
            if (!facets_[f].outside.empty())
                work.push_back(f);
        while (!work.empty()) {
            int f = work.back();
            work.pop_back();
            if (!facets_[f].alive || facets_[f].outside.empty())
                continue;
            int p = furthest(f);
            for (int g : add_point(f, p))
                if (!facets_[g].outside.empty())
                    work.push_back(g);
        }
    }

    HullSummary summarize(bool want_fan) const
    {
        HullSummary out;
        std::map<Vec, T> planes;
        std::vector<char> cand(pts_.size(), 0);
        for (const auto& f : facets_) {
            if (!f.alive)
                continue;
            planes.emplace(f.normal, f.offset);
            for (int v : f.verts)
                cand[v] = 1;
        }
        for (const auto& [n, off] : planes) {
            IntVector in(n.size());
            for (std::size_t j = 0; j < n.size(); ++j)
                in[j] = to_integer(n[j]);
            out.planes.emplace_back(std::move(in), to_integer(off));
        }
        for (int i = 0; i < static_cast<int>(pts_.size()); ++i) {
            if (!cand[i])
                continue;
            std::vector<IntVector> tight;
            std::size_t idx = 0;
            for (const auto& [n, off] : planes) {
                if (dot_of(n, pts_[i]) == off)
                    tight.push_back(out.planes[idx].first);
                ++idx;
            }
            if (static_cast<int>(tight.size()) >= k_ && int_rank(std::move(tight), k_) == k_)
                out.extreme.push_back(i);
        }

        const Vec& a = pts_[out.extreme.front()];
        T total = 0;
        for (const auto& f : facets_) {
            if (!f.alive || dot_of(f.normal, a) == f.offset)
                continue;
            std::vector<Vec> m(k_, Vec(k_));
            for (int i = 0; i < k_; ++i)
                for (int j = 0; j < k_; ++j)
                    m[i][j] = pts_[f.verts[i]][j] - a[j];
            total += abs_of(det_of(std::move(m)));
            if (want_fan) {
                std::vector<int> s{out.extreme.front()};
                s.insert(s.end(), f.verts.begin(), f.verts.end());
                out.fan.push_back(std::move(s));
            }
        }
        out.fan_det_sum = to_integer(total);
        return out;
    }

private:
    std::vector<Vec> pts_;
    int k_;
    std::vector<Facet<T>> facets_;
    Vec csum_; // (k+1) times an interior point
    unsigned stamp_ = 0;

    bool above(const Facet<T>& f, int p) const { return dot_of(f.normal, pts_[p]) > f.offset; }

    void make_plane(Facet<T>& f) const
    {
        const Vec& base = pts_[f.verts[0]];
        std::vector<Vec> rows(k_ - 1, Vec(k_));
        for (int i = 1; i < k_; ++i)
            for (int j = 0; j < k_; ++j)
                rows[i - 1][j] = pts_[f.verts[i]][j] - base[j];
        f.normal.assign(k_, T(0));
        T g = 0;
        for (int j = 0; j < k_; ++j) {
            std::vector<Vec> minor(k_ - 1, Vec(k_ - 1));
            for (int i = 0; i < k_ - 1; ++i)
                for (int c = 0, cc = 0; c < k_; ++c)
                    if (c != j)
                        minor[i][cc++] = rows[i][c];
            f.normal[j] = det_of(std::move(minor));
            if (j % 2)
                f.normal[j] = -f.normal[j];
            g = gcd_of(g, f.normal[j]);
        }
        for (auto& x : f.normal)
            divide(x, g);
        f.offset = dot_of(f.normal, base);
        if (dot_of(f.normal, csum_) > T(k_ + 1) * f.offset) {
            for (auto& x : f.normal)
                x = -x;
            f.offset = -f.offset;
        }
    }

    void initial_simplex()
    {
        // Greedy affinely independent selection, trying coordinate extremes first.
        std::vector<int> chosen;
        Matrix basis;
        std::vector<int> basis_piv;
        auto try_add = [&](int p) {
            if (std::find(chosen.begin(), chosen.end(), p) != chosen.end())
                return;
            if (chosen.empty()) {
                chosen.push_back(p);
                return;
            }
            Point v(k_);
            for (int j = 0; j < k_; ++j)
                v[j] = Rational(to_integer(pts_[p][j] - pts_[chosen[0]][j]));
            for (std::size_t r = 0; r < basis.size(); ++r) {
                if (sgn(v[basis_piv[r]]) == 0)
                    continue;
                Rational f = v[basis_piv[r]] / basis[r][basis_piv[r]];
                for (int j = 0; j < k_; ++j)
                    v[j] -= f * basis[r][j];
            }
            for (int j = 0; j < k_; ++j)
                if (sgn(v[j]) != 0) {
                    basis.push_back(v);
                    basis_piv.push_back(j);
                    chosen.push_back(p);
                    return;
                }
        };
        int n = static_cast<int>(pts_.size());
        for (int j = 0; j < k_ && static_cast<int>(chosen.size()) <= k_; ++j) {
            int lo = 0, hi = 0;
            for (int p = 1; p < n; ++p) {
                if (pts_[p][j] < pts_[lo][j])
                    lo = p;
                if (pts_[p][j] > pts_[hi][j])
                    hi = p;
            }
            try_add(lo);
            if (static_cast<int>(chosen.size()) <= k_)
                try_add(hi);
        }
        for (int p = 0; p < n && static_cast<int>(chosen.size()) <= k_; ++p)
            try_add(p);
        if (static_cast<int>(chosen.size()) != k_ + 1)
            throw Error("hull: point set is not full-dimensional");

        csum_.assign(k_, T(0));
        for (int p : chosen)
            for (int j = 0; j < k_; ++j)
                csum_[j] += pts_[p][j];

        // Facet i omits chosen[i]; its neighbour across the ridge omitting chosen[j] is facet j.
        for (int i = 0; i <= k_; ++i) {
            Facet<T> f;
            for (int j = 0; j <= k_; ++j)
                if (j != i) {
                    f.verts.push_back(chosen[j]);
                    f.nb.push_back(j);
                }
            make_plane(f);
            facets_.push_back(std::move(f));
        }
        std::vector<char> in_simplex(n, 0);
        for (int p : chosen)
            in_simplex[p] = 1;
        for (int p = 0; p < n; ++p) {
            if (in_simplex[p])
                continue;
            for (auto& f : facets_)
                if (above(f, p)) {
                    f.outside.push_back(p);
                    break;
                }
        }
    }

    int furthest(int fi) const
    {
        const Facet<T>& f = facets_[fi];
        int best = f.outside[0];
        T bd = dot_of(f.normal, pts_[best]);
        for (std::size_t i = 1; i < f.outside.size(); ++i) {
            T d = dot_of(f.normal, pts_[f.outside[i]]);
            if (d > bd) {
                bd = d;
                best = f.outside[i];
            }
        }
        return best;
    }

    std::vector<int> add_point(int start, int p)
    {
        ++stamp_;
        std::vector<int> visible{start};
        facets_[start].visible = stamp_;
        std::vector<std::pair<int, int>> horizon; // (visible facet, ridge position)
        for (std::size_t q = 0; q < visible.size(); ++q) {
            int g = visible[q];
            for (int j = 0; j < k_; ++j) {
                int h = facets_[g].nb[j];
                Facet<T>& fh = facets_[h];
                if (fh.visible == stamp_)
                    continue;
                if (fh.tested != stamp_) {
                    fh.tested = stamp_;
                    fh.tested_result = above(fh, p);
                    if (fh.tested_result) {
                        fh.visible = stamp_;
                        visible.push_back(h);
                        continue;
                    }
                }
                if (!fh.tested_result)
                    horizon.emplace_back(g, j);
            }
        }

        std::vector<int> created;
        std::unordered_map<std::vector<int>, std::pair<int, int>, KeyHash> open;
        for (auto [g, j] : horizon) {
            Facet<T> nf;
            nf.verts = facets_[g].verts;
            nf.verts[j] = p;
            nf.nb.assign(k_, -1);
            int h = facets_[g].nb[j];
            nf.nb[j] = h;
            make_plane(nf);
            int id = static_cast<int>(facets_.size());
            for (auto& x : facets_[h].nb)
                if (x == g)
                    x = id;
            facets_.push_back(std::move(nf));
            created.push_back(id);
            for (int i = 0; i < k_; ++i) {
                if (i == j)
                    continue;
                std::vector<int> key;
                key.reserve(k_ - 1);
                for (int t = 0; t < k_; ++t)
                    if (t != i)
                        key.push_back(facets_[id].verts[t]);
                std::sort(key.begin(), key.end());
                auto it = open.find(key);
                if (it == open.end()) {
                    open.emplace(std::move(key), std::make_pair(id, i));
                } else {
                    auto [other, oi] = it->second;
                    facets_[id].nb[i] = other;
                    facets_[other].nb[oi] = id;
                    open.erase(it);
                }
            }
        }
        if (!open.empty())
            throw Error("hull: inconsistent horizon");

        for (int g : visible) {
            Facet<T>& fg = facets_[g];
            fg.alive = false;
            for (int q : fg.outside) {
                if (q == p)
                    continue;
                for (int c : created)
                    if (above(facets_[c], q)) {
                        facets_[c].outside.push_back(q);
                        break;
                    }
            }
            fg.outside.clear();
            fg.outside.shrink_to_fit();
        }
        return created;
    }
};

template <class T> HullSummary run(const std::vector<IntVector>& pts, int k, bool want_fan)
{
    std::vector<std::vector<T>> conv(pts.size(), std::vector<T>(k));
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (int j = 0; j < k; ++j)
            conv[i][j] = from_integer<T>(pts[i][j]);
    Builder<T> b(std::move(conv), k);
    b.run();
    return b.summarize(want_fan);
}

} // namespace

HullSummary hull_summary(const std::vector<IntVector>& pts, int k, bool want_fan)
{
    // Bounds every determinant, dot product and orientation test formed:
    // entries are at most 2M in magnitude, determinants have at most k! terms.
    Integer m = 0;
    for (const auto& p : pts)
        for (const auto& x : p)
            if (abs(x) > m)
                m = abs(x);
    double b = static_cast<double>(mpz_sizeinbase(m.get_mpz_t(), 2));
    double bits = std::log2(std::tgamma(k + 1.0)) + std::log2(k + 1.0) + k * (1.0 + b) + 1.0;
    if (bits < 124)
        return run<i128>(pts, k, want_fan);
    return run<Integer>(pts, k, want_fan);
}

} // namespace abx::detail
