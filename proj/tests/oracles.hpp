#pragma once

// Deliberately naive reference implementations. They work on plain digit
// vectors and share no code with the library beyond the Word accessors.

#include "hampack/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace oracle {

using Digits = std::vector<int>;
using BigRat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Digits digits(const hampack::Word &w)
{
    Digits d(static_cast<std::size_t>(w.length()));
    for (int i = 0; i < w.length(); ++i)
        d[static_cast<std::size_t>(i)] = w[i];
    return d;
}

inline std::vector<Digits> digits(const hampack::Code &c)
{
    std::vector<Digits> out;
    for (const auto &w : c)
        out.push_back(digits(w));
    return out;
}

inline int dist(const Digits &a, const Digits &b)
{
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        d += a[i] != b[i];
    return d;
}

inline int wt(const Digits &a)
{
    int s = 0;
    for (int x : a)
        s += x != 0;
    return s;
}

/// Odometer over all q^n vertices.
inline void each_vertex(int n, int q, const std::function<void(const Digits &)> &f)
{
    Digits v(static_cast<std::size_t>(n), 0);
    for (;;) {
        f(v);
        int i = n - 1;
        while (i >= 0 && v[static_cast<std::size_t>(i)] == q - 1)
            v[static_cast<std::size_t>(i--)] = 0;
        if (i < 0)
            return;
        ++v[static_cast<std::size_t>(i)];
    }
}

inline std::size_t max_coverage(const std::vector<Digits> &c, int n, int q, int r)
{
    std::size_t best = 0;
    each_vertex(n, q, [&](const Digits &v) {
        std::size_t k = 0;
        for (const auto &w : c)
            k += dist(v, w) <= r;
        best = std::max(best, k);
    });
    return best;
}

/// Ball counts over centers with the given parity (-1: every center).
inline std::map<std::size_t, std::size_t> ball_count_histogram(const std::vector<Digits> &c, int n, int center_parity)
{
    std::map<std::size_t, std::size_t> hist;
    each_vertex(n, 2, [&](const Digits &v) {
        if (center_parity >= 0 && wt(v) % 2 != center_parity)
            return;
        std::size_t k = 0;
        for (const auto &w : c)
            k += dist(v, w) <= 1;
        ++hist[k];
    });
    return hist;
}

inline bool only_zero_or_two(const std::map<std::size_t, std::size_t> &hist)
{
    for (const auto &[k, cnt] : hist)
        if (k != 0 && k != 2)
            return false;
    return true;
}

inline bool is_unitrade(const std::vector<Digits> &c, int n)
{
    return only_zero_or_two(ball_count_histogram(c, n, -1));
}

inline bool is_extended_unitrade(const std::vector<Digits> &c, int n)
{
    if (c.empty())
        return true;
    int p = wt(c[0]) % 2;
    for (const auto &w : c)
        if (wt(w) % 2 != p)
            return false;
    return only_zero_or_two(ball_count_histogram(c, n, 1 - p));
}

/// Coefficients of (1 - z)^i (1 + z)^(n - i), indexed [k][i].
inline std::vector<std::vector<BigInt>> krawtchouk_by_polynomials(int n)
{
    std::vector<std::vector<BigInt>> k(static_cast<std::size_t>(n + 1), std::vector<BigInt>(static_cast<std::size_t>(n + 1)));
    for (int i = 0; i <= n; ++i) {
        std::vector<BigInt> poly{1};
        for (int f = 0; f < n; ++f) {
            int sign = f < i ? -1 : 1;
            std::vector<BigInt> next(poly.size() + 1, 0);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                next[d] += poly[d];
                next[d + 1] += sign * poly[d];
            }
            poly = next;
        }
        for (int d = 0; d <= n; ++d)
            k[static_cast<std::size_t>(d)][static_cast<std::size_t>(i)] = poly[static_cast<std::size_t>(d)];
    }
    return k;
}

/// Dual distance distribution from character sums:
/// B'_k = |C|^{-2} sum_{wt(u)=k} (sum_c (-1)^{u.c})^2.
inline std::vector<BigRat> dual_distribution_by_characters(const std::vector<Digits> &c, int n)
{
    std::vector<BigRat> out(static_cast<std::size_t>(n + 1), 0);
    each_vertex(n, 2, [&](const Digits &u) {
        long s = 0;
        for (const auto &w : c) {
            int dot = 0;
            for (int i = 0; i < n; ++i)
                dot ^= u[static_cast<std::size_t>(i)] & w[static_cast<std::size_t>(i)];
            s += dot ? -1 : 1;
        }
        out[static_cast<std::size_t>(wt(u))] += BigRat(s * s);
    });
    BigRat sz2 = BigRat(c.size() * c.size());
    for (auto &x : out)
        x /= sz2;
    return out;
}

/// Average distance distribution by the double sum over codeword pairs.
inline std::vector<BigRat> distance_distribution(const std::vector<Digits> &c, int n)
{
    std::vector<BigRat> out(static_cast<std::size_t>(n + 1), 0);
    for (const auto &a : c)
        for (const auto &b : c)
            out[static_cast<std::size_t>(dist(a, b))] += 1;
    for (auto &x : out)
        x /= BigRat(c.size());
    return out;
}

inline int rank_gf2(std::vector<Digits> rows)
{
    int rank = 0;
    std::size_t n = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = static_cast<std::size_t>(rank);
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != static_cast<std::size_t>(rank) && rows[r][col])
                for (std::size_t j = 0; j < n; ++j)
                    rows[r][j] ^= rows[static_cast<std::size_t>(rank)][j];
        ++rank;
    }
    return rank;
}

/// Largest lambda-fold r-packing (multiplicities up to lambda) of H(n,q), by
/// trying every multiplicity vector with a coverage-feasibility cut only.
inline std::size_t max_packing_exhaustive(int n, int q, int lambda, int r)
{
    std::vector<Digits> verts;
    each_vertex(n, q, [&](const Digits &v) { verts.push_back(v); });
    std::size_t nv = verts.size();
    std::vector<std::vector<std::size_t>> nbhd(nv);
    for (std::size_t a = 0; a < nv; ++a)
        for (std::size_t b = 0; b < nv; ++b)
            if (dist(verts[a], verts[b]) <= r)
                nbhd[a].push_back(b);
    std::vector<int> load(nv, 0);
    std::size_t best = 0;
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t idx, std::size_t size) {
        if (idx == nv) {
            best = std::max(best, size);
            return;
        }
        for (int m = 0; m <= lambda; ++m) {
            bool ok = true;
            for (std::size_t b : nbhd[idx])
                if (load[b] + m > lambda)
                    ok = false;
            if (!ok)
                break;
            for (std::size_t b : nbhd[idx])
                load[b] += m;
            rec(idx + 1, size + static_cast<std::size_t>(m));
            for (std::size_t b : nbhd[idx])
                load[b] -= m;
        }
    };
    rec(0, 0);
    return best;
}

/// Smallest nonempty extended unitrade of length n by scanning every subset
/// of the even-weight words. Feasible for n <= 4.
inline std::size_t min_extended_unitrade_bruteforce(int n)
{
    std::vector<Digits> even;
    each_vertex(n, 2, [&](const Digits &v) {
        if (wt(v) % 2 == 0)
            even.push_back(v);
    });
    std::size_t best = SIZE_MAX;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << even.size()); ++mask) {
        std::vector<Digits> c;
        for (std::size_t i = 0; i < even.size(); ++i)
            if (mask >> i & 1)
                c.push_back(even[i]);
        if (c.size() < best && is_extended_unitrade(c, n))
            best = c.size();
    }
    return best;
}

}  // namespace oracle
