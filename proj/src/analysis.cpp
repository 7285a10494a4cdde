#include "hampack/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <thread>

namespace hampack {

namespace {

struct Coverage {
    std::size_t count = 0;
    Word vertex;
};

// Best (count, vertex) where larger count wins and ties go to the smaller vertex.
void improve(Coverage &best, std::size_t count, const Word &v)
{
    if (count > best.count || (count == best.count && v < best.vertex)) {
        best.count = count;
        best.vertex = v;
    }
}

Coverage scan_full_space(const Code &c, int r, unsigned threads)
{
    const SpaceParams space = c.space();
    const std::uint64_t total = space.volume();
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(total, 64))));
    std::vector<Coverage> partial(threads, Coverage{0, Word(space)});
    auto work = [&](unsigned t) {
        Coverage best{0, Word(space)};
        bool first = true;
        const std::uint64_t lo = total * t / threads, hi = total * (t + 1) / threads;
        for (std::uint64_t k = lo; k < hi; ++k) {
            Word v = vertex_at(space, k);
            std::size_t cnt = 0;
            for_each_in_ball(v, r, [&](const Word &w) { cnt += c.count(w); });
            if (first) {
                best = {cnt, v};
                first = false;
            } else {
                improve(best, cnt, v);
            }
        }
        partial[t] = best;
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t)
            pool.emplace_back(work, t);
    }
    Coverage best = partial[0];
    for (unsigned t = 1; t < threads; ++t)
        improve(best, partial[t].count, partial[t].vertex);
    return best;
}

// Coverage of every vertex within distance r of some codeword, sorted by vertex.
std::vector<std::pair<Word, std::size_t>> coverage_map(const Code &c, int r)
{
    std::vector<Word> hits;
    for (const auto &x : c)
        for_each_in_ball(x, r, [&](const Word &w) { hits.push_back(w); });
    std::sort(hits.begin(), hits.end());
    std::vector<std::pair<Word, std::size_t>> out;
    for (std::size_t i = 0; i < hits.size();) {
        std::size_t j = i;
        while (j < hits.size() && hits[j] == hits[i])
            ++j;
        out.emplace_back(hits[i], j - i);
        i = j;
    }
    return out;
}

Coverage scan_ball_union(const Code &c, int r)
{
    Coverage best{0, Word(c.space())};
    for (const auto &[v, cnt] : coverage_map(c, r))
        improve(best, cnt, v);
    return best;
}

void require_binary(const Code &c, const char *what)
{
    if (!c.space().binary())
        throw SpaceMismatch(std::string(what) + " needs a binary code");
}

// Adjacency lists on the distinct words of t: i ~ j when lo <= d <= hi.
std::vector<std::vector<std::size_t>> distance_graph(const std::vector<Word> &w, int lo, int hi)
{
    std::vector<std::vector<std::size_t>> adj(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            int d = hamming_distance(w[i], w[j]);
            if (d >= lo && d <= hi) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    return adj;
}

}  // namespace

PackingReport verify_packing(const Code &c, int lambda, int r, ScanMode mode, unsigned threads)
{
    if (lambda < 1)
        throw std::invalid_argument("lambda must be positive");
    if (r < 0 || r > c.length())
        throw std::invalid_argument("radius " + std::to_string(r) + " outside [0,n]");
    PackingReport rep;
    rep.lambda = lambda;
    rep.r = r;
    rep.size = c.size();
    rep.duplicate_words = c.duplicates();
    if (mode == ScanMode::automatic) {
        // Vertices outside every codeword ball have coverage zero.
        const double vol = std::pow(static_cast<double>(c.space().q), c.length());
        const double work = 2.0 * static_cast<double>(c.size()) * static_cast<double>(ball_size(c.space(), r));
        mode = (vol <= work && vol < 1e8) ? ScanMode::full_space : ScanMode::ball_union;
    }
    Coverage best{0, Word(c.space())};
    if (mode == ScanMode::full_space) {
        best = scan_full_space(c, r, threads);
        rep.full_space_scan = true;
    } else if (!c.empty()) {
        best = scan_ball_union(c, r);
    }
    rep.max_coverage = best.count;
    rep.witness = best.vertex;
    return rep;
}

namespace {

// Repeated words are reported with their multiplicity; unitrades are sets.
bool reject_repeats(const Code &t, TradeCheck &res)
{
    auto dups = t.duplicates();
    if (dups.empty())
        return false;
    res.ok = false;
    res.witness = dups.front();
    res.witness_count = t.count(dups.front());
    return true;
}

}  // namespace

TradeCheck is_unitrade(const Code &t)
{
    TradeCheck res;
    if (reject_repeats(t, res))
        return res;
    for (const auto &[center, cnt] : coverage_map(t, 1))
        if (cnt != 2) {
            res.ok = false;
            res.witness = center;
            res.witness_count = cnt;
            return res;
        }
    return res;
}

bool halved_cube_characterization(const Code &t)
{
    require_binary(t, "halved_cube_characterization");
    if (!t.is_set() || (t.length() % 2) != 0)
        return t.empty();
    const auto &w = t.words();
    auto adj = distance_graph(w, 2, 2);
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (static_cast<int>(adj[i].size()) != t.length() / 2)
            return false;
        for (std::size_t a = 0; a < adj[i].size(); ++a)
            for (std::size_t b = a + 1; b < adj[i].size(); ++b)
                if (hamming_distance(w[adj[i][a]], w[adj[i][b]]) == 2)
                    return false;
    }
    return true;
}

TradeCheck is_extended_unitrade(const Code &t)
{
    require_binary(t, "is_extended_unitrade");
    TradeCheck res;
    if (t.empty())
        return res;
    if (reject_repeats(t, res))
        return res;
    const int parity = t[0].parity();
    for (const auto &w : t)
        if (w.parity() != parity)
            throw std::invalid_argument("is_extended_unitrade: words of mixed parity (" + t[0].str() + ", "
                                        + w.str() + ")");
    // Only balls centered at the opposite parity are constrained.
    for (const auto &[center, cnt] : coverage_map(t, 1)) {
        if (center.parity() == parity)
            continue;
        if (cnt != 2) {
            res.ok = false;
            res.witness = center;
            res.witness_count = cnt;
            break;
        }
    }
    if (t.length() >= 5 && res.ok != halved_cube_characterization(t))
        throw std::logic_error("extended unitrade check disagrees with the halved-cube characterization");
    return res;
}

BipartiteResult is_bipartite_unitrade(const Code &t, bool extended)
{
    if (extended ? !is_extended_unitrade(t) : !is_unitrade(t))
        throw std::invalid_argument("is_bipartite_unitrade: input is not a unitrade");
    BipartiteResult res;
    const auto &w = t.words();
    auto adj = distance_graph(w, extended ? 2 : 1, 2);
    std::vector<int> color(w.size(), -1);
    std::vector<std::size_t> parent(w.size(), 0);
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (color[s] >= 0)
            continue;
        color[s] = 0;
        parent[s] = s;
        std::queue<std::size_t> bfs;
        bfs.push(s);
        while (!bfs.empty()) {
            std::size_t u = bfs.front();
            bfs.pop();
            for (auto v : adj[u]) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    bfs.push(v);
                } else if (color[v] == color[u]) {
                    // Paths to the BFS root from both ends close an odd walk.
                    std::vector<Word> left, right;
                    for (std::size_t x = u;; x = parent[x]) {
                        left.push_back(w[x]);
                        if (parent[x] == x)
                            break;
                    }
                    for (std::size_t x = v;; x = parent[x]) {
                        right.push_back(w[x]);
                        if (parent[x] == x)
                            break;
                    }
                    while (left.size() >= 2 && right.size() >= 2 && left[left.size() - 2] == right[right.size() - 2]) {
                        left.pop_back();
                        right.pop_back();
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    res.odd_cycle = std::move(left);
                    res.odd_cycle.insert(res.odd_cycle.end(), right.begin(), right.end());
                    return res;
                }
            }
        }
    }
    std::vector<Word> a, b;
    for (std::size_t i = 0; i < w.size(); ++i)
        (color[i] == 0 ? a : b).push_back(w[i]);
    res.parts = std::make_pair(Code(t.space(), std::move(a)), Code(t.space(), std::move(b)));
    return res;
}

bool is_antipodal(const Code &t)
{
    require_binary(t, "is_antipodal");
    for (const auto &w : t)
        if (t.count(antipode(w)) != t.count(w))
            return false;
    return true;
}

std::vector<Code> primary_components(const Code &t, bool extended)
{
    if (extended ? !is_extended_unitrade(t) : !is_unitrade(t))
        throw std::invalid_argument("primary_components: input is not a unitrade");
    const auto &w = t.words();
    auto adj = distance_graph(w, extended ? 2 : 1, 2);
    std::vector<int> comp(w.size(), -1);
    std::vector<Code> out;
    for (std::size_t s = 0; s < w.size(); ++s) {
        if (comp[s] >= 0)
            continue;
        std::vector<Word> members;
        std::vector<std::size_t> stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            auto u = stack.back();
            stack.pop_back();
            members.push_back(w[u]);
            for (auto v : adj[u])
                if (comp[v] < 0) {
                    comp[v] = comp[s];
                    stack.push_back(v);
                }
        }
        out.emplace_back(t.space(), std::move(members));
    }
    return out;
}

const char *to_string(ReducibilityCertificate::Kind k)
{
    switch (k) {
    case ReducibilityCertificate::Kind::irreducible:
        return "irreducible";
    case ReducibilityCertificate::Kind::factorization:
        return "factorization";
    case ReducibilityCertificate::Kind::unknown:
        break;
    }
    return "unknown";
}

Code project(const Code &c, std::span<const int> coords)
{
    if (coords.empty())
        throw std::invalid_argument("projection onto zero coordinates");
    SpaceParams space(static_cast<int>(coords.size()), c.space().q);
    std::vector<Word> out;
    out.reserve(c.size());
    std::vector<int> s(coords.size());
    for (const auto &w : c) {
        for (std::size_t i = 0; i < coords.size(); ++i)
            s[i] = w[coords[i]];
        out.emplace_back(space, s);
    }
    return Code(space, std::move(out));
}

ReducibilityCertificate reducibility_certificate(const Code &t)
{
    require_binary(t, "reducibility_certificate");
    ReducibilityCertificate cert;
    const int n = t.length();
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x)
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        return x;
    };
    const auto &w = t.words();
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            std::uint64_t diff = w[i].bits() ^ w[j].bits();
            if (std::popcount(diff) != 2)
                continue;
            int a = std::countr_zero(diff);
            int b = std::countr_zero(diff & (diff - 1));
            parent[static_cast<std::size_t>(find(a))] = find(b);
        }
    std::map<int, std::vector<int>> groups;
    for (int i = 0; i < n; ++i)
        groups[find(i)].push_back(i);
    for (auto &[root, members] : groups)
        cert.coordinate_components.push_back(members);
    std::sort(cert.coordinate_components.begin(), cert.coordinate_components.end());

    const std::size_t k = cert.coordinate_components.size();
    if (k == 1) {
        cert.kind = ReducibilityCertificate::Kind::irreducible;
        return cert;
    }
    if (t.empty() || !t.is_set() || k > 20) {
        cert.kind = ReducibilityCertificate::Kind::unknown;
        return cert;
    }
    // The last component always goes right, so each split is tried once.
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        std::vector<int> left, right;
        for (std::size_t c = 0; c < k; ++c) {
            auto &side = ((mask >> c) & 1u) ? left : right;
            side.insert(side.end(), cert.coordinate_components[c].begin(), cert.coordinate_components[c].end());
        }
        std::sort(left.begin(), left.end());
        std::sort(right.begin(), right.end());
        Code u = project(t, left).distinct();
        Code v = project(t, right).distinct();
        if (u.size() * v.size() != t.size())
            continue;
        cert.kind = ReducibilityCertificate::Kind::factorization;
        cert.factorization = Factorization{std::move(left), std::move(right), std::move(u), std::move(v)};
        return cert;
    }
    // Every concatenation splits along coordinate components, so none exists.
    cert.kind = ReducibilityCertificate::Kind::irreducible;
    return cert;
}

std::vector<std::vector<Integer>> krawtchouk_table(int n)
{
    if (n < 0)
        throw std::invalid_argument("negative length");
    std::vector<std::vector<Integer>> k(static_cast<std::size_t>(n + 1), std::vector<Integer>(static_cast<std::size_t>(n + 1)));
    for (int kk = 0; kk <= n; ++kk)
        for (int i = 0; i <= n; ++i) {
            Integer s = 0;
            for (int j = 0; j <= kk; ++j) {
                Integer term = binomial(i, j) * binomial(n - i, kk - j);
                s += (j % 2) ? -term : term;
            }
            k[static_cast<std::size_t>(kk)][static_cast<std::size_t>(i)] = s;
        }
    return k;
}

std::vector<Rational> macwilliams_transform(std::span<const Rational> b, std::size_t code_size)
{
    if (code_size == 0)
        throw std::invalid_argument("MacWilliams transform of an empty code");
    const int n = static_cast<int>(b.size()) - 1;
    auto k = krawtchouk_table(n);
    std::vector<Rational> out(b.size());
    for (int kk = 0; kk <= n; ++kk) {
        Rational s = 0;
        for (int i = 0; i <= n; ++i)
            s += b[static_cast<std::size_t>(i)] * Rational(k[static_cast<std::size_t>(kk)][static_cast<std::size_t>(i)]);
        out[static_cast<std::size_t>(kk)] = s / Rational(static_cast<long long>(code_size));
    }
    return out;
}

std::vector<Rational> inverse_macwilliams_transform(std::span<const Rational> b_dual, std::size_t code_size)
{
    const int n = static_cast<int>(b_dual.size()) - 1;
    auto k = krawtchouk_table(n);
    std::vector<Rational> out(b_dual.size());
    const Rational scale = Rational(static_cast<long long>(code_size)) / Rational(pow_int(2, static_cast<unsigned>(n)));
    for (int kk = 0; kk <= n; ++kk) {
        Rational s = 0;
        for (int i = 0; i <= n; ++i)
            s += b_dual[static_cast<std::size_t>(i)] * Rational(k[static_cast<std::size_t>(kk)][static_cast<std::size_t>(i)]);
        out[static_cast<std::size_t>(kk)] = s * scale;
    }
    return out;
}

std::vector<Integer> weight_distribution(const Code &c, const Word &x)
{
    std::vector<Integer> a(static_cast<std::size_t>(c.length() + 1), 0);
    for (const auto &w : c)
        a[static_cast<std::size_t>(hamming_distance(w, x))] += 1;
    return a;
}

DistanceData distance_data(const Code &c, const std::optional<Word> &x)
{
    if (c.empty())
        throw std::invalid_argument("distance_data of an empty code");
    DistanceData d;
    d.n = c.length();
    d.size = c.size();
    std::vector<Integer> pair_counts(static_cast<std::size_t>(d.n + 1), 0);
    for (const auto &u : c)
        for (const auto &v : c)
            pair_counts[static_cast<std::size_t>(hamming_distance(u, v))] += 1;
    for (const auto &p : pair_counts)
        d.B.push_back(Rational(p) / Rational(static_cast<long long>(c.size())));
    if (x)
        d.A_x = weight_distribution(c, *x);
    d.K = krawtchouk_table(d.n);
    if (c.space().binary())
        d.B_dual = macwilliams_transform(d.B, c.size());
    return d;
}

bool oa_strength1_check(const Code &t)
{
    require_binary(t, "oa_strength1_check");
    for (int i = 0; i < t.length(); ++i) {
        std::size_t ones = 0;
        for (const auto &w : t)
            ones += static_cast<std::size_t>(w[i]);
        if (2 * ones != t.size())
            return false;
    }
    return true;
}

Rational average_distance(const Code &t, const Word &v)
{
    if (t.empty())
        throw std::invalid_argument("average distance to an empty set");
    long long total = 0;
    for (const auto &w : t)
        total += hamming_distance(w, v);
    return Rational(total) / Rational(static_cast<long long>(t.size()));
}

int inner_radius(const Code &t)
{
    if (t.empty())
        throw std::invalid_argument("inner radius of an empty set");
    int best = t.length() + 1;
    for (const auto &x : t) {
        int far = 0;
        for (const auto &y : t)
            far = std::max(far, hamming_distance(x, y));
        best = std::min(best, far);
    }
    return best;
}

bool PairProfile::satisfies_relations() const
{
    for (int i = 0; i <= n; ++i) {
        auto k = static_cast<std::size_t>(i);
        if (2 * W_minus[k] + W_star[k] != static_cast<std::size_t>(i) * W_i[k])
            return false;
        if (W_star[k] + 2 * W_plus[k] != static_cast<std::size_t>(n - i) * W_i[k])
            return false;
        if (i >= 2 && W_minus[k] != W_plus[k - 2])
            return false;
    }
    return true;
}

PairProfile pair_profile(const Code &t)
{
    require_binary(t, "pair_profile");
    if (!t.contains(Word(t.space())))
        throw std::invalid_argument("pair_profile: the all-zero word must belong to T (translate first)");
    if (!is_extended_unitrade(t))
        throw std::invalid_argument("pair_profile: input is not an extended unitrade");
    PairProfile p;
    p.n = t.length();
    p.W = t.size();
    const auto len = static_cast<std::size_t>(p.n + 1);
    p.W_i.assign(len, 0);
    p.W_minus.assign(len, 0);
    p.W_star.assign(len, 0);
    p.W_plus.assign(len, 0);
    for (const auto &u : t) {
        const int wu = weight(u);
        p.W_i[static_cast<std::size_t>(wu)] += 1;
        for (const auto &v : t) {
            if (hamming_distance(u, v) != 2)
                continue;
            const int wv = weight(v);
            auto &slot = wv < wu ? p.W_minus : (wv == wu ? p.W_star : p.W_plus);
            slot[static_cast<std::size_t>(wu)] += 1;
        }
    }
    return p;
}

}  // namespace hampack
