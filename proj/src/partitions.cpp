#include "hampack/partitions.hpp"

#include "hampack/analysis.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace hampack {

namespace {

constexpr std::uint64_t max_partition_volume = std::uint64_t{1} << 22;

// Vertex index sum_i w_i q^i; for binary words this is the bit pattern.
struct VertexIndex {
    SpaceParams space;
    std::uint64_t volume;

    explicit VertexIndex(SpaceParams s) : space(s), volume(s.volume())
    {
        if (volume > max_partition_volume)
            throw std::invalid_argument("partitions support at most 2^22 vertices, got " + to_string(s));
    }

    std::uint64_t of(const Word &w) const
    {
        if (space.binary())
            return w.bits();
        std::uint64_t idx = 0;
        for (int i = space.n - 1; i >= 0; --i)
            idx = idx * static_cast<std::uint64_t>(space.q) + static_cast<std::uint64_t>(w[i]);
        return idx;
    }

    Word word(std::uint64_t idx) const
    {
        if (space.binary())
            return Word::from_bits(space.n, idx);
        std::vector<int> s(static_cast<std::size_t>(space.n));
        for (int i = 0; i < space.n; ++i) {
            s[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::uint64_t>(space.q));
            idx /= static_cast<std::uint64_t>(space.q);
        }
        return Word(space, s);
    }

    template <class F>
    void neighbors(std::uint64_t idx, F &&f) const
    {
        if (space.binary()) {
            for (int i = 0; i < space.n; ++i)
                f(idx ^ (std::uint64_t{1} << i));
            return;
        }
        std::uint64_t place = 1;
        const auto q = static_cast<std::uint64_t>(space.q);
        for (int i = 0; i < space.n; ++i) {
            const std::uint64_t digit = (idx / place) % q;
            const std::uint64_t base = idx - digit * place;
            for (std::uint64_t a = 0; a < q; ++a)
                if (a != digit)
                    f(base + a * place);
            place *= q;
        }
    }
};

std::vector<int> cell_labels(const Partition &p, const VertexIndex &vx)
{
    std::vector<int> label(vx.volume, -1);
    for (std::size_t c = 0; c < p.cells.size(); ++c)
        for (const auto &w : p.cells[c]) {
            if (w.space() != p.space)
                throw SpaceMismatch("partition cell word " + w.str() + " is not in " + to_string(p.space));
            auto &l = label[vx.of(w)];
            if (l != -1)
                throw std::invalid_argument("partition cells overlap at " + w.str());
            l = static_cast<int>(c);
        }
    for (std::uint64_t k = 0; k < vx.volume; ++k)
        if (label[k] == -1)
            throw std::invalid_argument("partition misses vertex " + vx.word(k).str());
    return label;
}

Partition from_labels(const VertexIndex &vx, const std::vector<int> &label, int ncells)
{
    std::vector<std::vector<Word>> words(static_cast<std::size_t>(ncells));
    for (std::uint64_t k = 0; k < vx.volume; ++k)
        words[static_cast<std::size_t>(label[k])].push_back(vx.word(k));
    Partition p;
    p.space = vx.space;
    for (auto &w : words)
        p.cells.emplace_back(vx.space, std::move(w));
    p.matrix = is_equitable(p).matrix;
    return p;
}

std::vector<int> distances_to(const Code &c, const VertexIndex &vx)
{
    std::vector<int> dist(vx.volume, -1);
    std::deque<std::uint64_t> queue;
    for (const auto &w : c) {
        auto k = vx.of(w);
        if (dist[k] == -1) {
            dist[k] = 0;
            queue.push_back(k);
        }
    }
    while (!queue.empty()) {
        auto k = queue.front();
        queue.pop_front();
        vx.neighbors(k, [&](std::uint64_t m) {
            if (dist[m] == -1) {
                dist[m] = dist[k] + 1;
                queue.push_back(m);
            }
        });
    }
    return dist;
}

}  // namespace

std::string IntersectionArray::str() const
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.size(); ++i)
        os << (i ? "," : "") << b[i];
    os << ';';
    for (std::size_t i = 0; i < c.size(); ++i)
        os << (i ? "," : "") << c[i];
    os << ')';
    return os.str();
}

bool IntersectionMatrix::consistent() const
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j)
            if (cell_sizes[i] * static_cast<std::uint64_t>(s[i][j])
                != cell_sizes[j] * static_cast<std::uint64_t>(s[j][i]))
                return false;
    return true;
}

bool IntersectionMatrix::tridiagonal() const
{
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = 0; j < s.size(); ++j) {
            const std::size_t gap = i > j ? i - j : j - i;
            if (gap > 1 && s[i][j] != 0)
                return false;
            if (gap == 1 && s[i][j] == 0)
                return false;
        }
    return true;
}

std::optional<IntersectionArray> IntersectionMatrix::intersection_array() const
{
    if (!tridiagonal())
        return std::nullopt;
    IntersectionArray a;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
        a.b.push_back(s[i][i + 1]);
        a.c.push_back(s[i + 1][i]);
    }
    return a;
}

IntersectionMatrix c01234_matrix()
{
    IntersectionMatrix m;
    m.s = {{0, 10, 0, 0, 0}, {1, 0, 9, 0, 0}, {0, 6, 0, 2, 2}, {0, 0, 10, 0, 0}, {0, 0, 10, 0, 0}};
    m.cell_sizes = {32, 320, 480, 96, 96};
    return m;
}

EquitableCheck is_equitable(const Partition &p)
{
    VertexIndex vx(p.space);
    const auto label = cell_labels(p, vx);
    const std::size_t m = p.cells.size();
    EquitableCheck out;
    IntersectionMatrix mat;
    mat.s.assign(m, std::vector<long>(m, 0));
    std::vector<long> profile(m);
    for (std::size_t c = 0; c < m; ++c) {
        mat.cell_sizes.push_back(p.cells[c].size());
        bool first = true;
        for (const auto &w : p.cells[c]) {
            std::fill(profile.begin(), profile.end(), 0);
            vx.neighbors(vx.of(w), [&](std::uint64_t k) { ++profile[static_cast<std::size_t>(label[k])]; });
            if (first) {
                mat.s[c] = profile;
                first = false;
            } else if (profile != mat.s[c]) {
                out.witness = w;
                out.witness_cell = static_cast<int>(c);
                return out;
            }
        }
    }
    out.matrix = std::move(mat);
    return out;
}

Partition distance_partition(const Code &c)
{
    if (c.empty())
        throw std::invalid_argument("distance_partition needs a nonempty code");
    VertexIndex vx(c.space());
    auto dist = distances_to(c, vx);
    int rho = *std::max_element(dist.begin(), dist.end());
    return from_labels(vx, dist, rho + 1);
}

Partition split_distance3_cell(const Code &c0, const Code &c4)
{
    if (c0.empty())
        throw std::invalid_argument("split_distance3_cell needs a nonempty C0");
    if (c4.space() != c0.space() && !c4.empty())
        throw SpaceMismatch("C0 and C4 live in different spaces");
    VertexIndex vx(c0.space());
    auto dist = distances_to(c0, vx);
    int rho = *std::max_element(dist.begin(), dist.end());
    if (rho < 3)
        throw std::invalid_argument("C0 has covering radius below 3");
    // Cells 0..3 keep their distance label, C4 becomes 4, distances >= 4 shift by one.
    std::vector<int> label(dist.size());
    for (std::size_t k = 0; k < dist.size(); ++k)
        label[k] = dist[k] <= 3 ? dist[k] : dist[k] + (c4.empty() ? 0 : 1);
    for (const auto &w : c4.distinct()) {
        auto k = vx.of(w);
        if (dist[k] != 3)
            throw std::invalid_argument("C4 word " + w.str() + " is at distance " + std::to_string(dist[k])
                                        + " from C0, not 3");
        label[k] = 4;
    }
    return from_labels(vx, label, rho + 1 + (c4.empty() ? 0 : 1));
}

Partition merge_cells(const Partition &p, const std::vector<std::vector<int>> &groups)
{
    Partition out;
    out.space = p.space;
    std::vector<bool> used(p.cells.size(), false);
    for (const auto &g : groups) {
        Code cell(p.space);
        for (int i : g) {
            if (i < 0 || static_cast<std::size_t>(i) >= p.cells.size() || used[static_cast<std::size_t>(i)])
                throw std::invalid_argument("merge_cells: bad or repeated cell index " + std::to_string(i));
            used[static_cast<std::size_t>(i)] = true;
            cell = cell.united(p.cells[static_cast<std::size_t>(i)]);
        }
        out.cells.push_back(std::move(cell));
    }
    out.matrix = is_equitable(out).matrix;
    return out;
}

std::optional<UnitradePartition> partition_from_unitrade(const Code &t)
{
    if (t.length() != 10 || !t.space().binary() || t.size() != 96)
        return std::nullopt;
    if (!t.is_set() || !is_extended_unitrade(t))
        return std::nullopt;
    UnitradePartition out;
    out.translation = Word(t.space());
    Code odd = t;
    if (t[0].parity() == 0) {
        out.translation = out.translation.with(0, 1);
        odd = t.translate(out.translation);
    }
    VertexIndex vx(t.space());
    // Labels: 4 = T, 2 = N(T), 0 = remaining even, 1 = N(C0), 3 = remaining odd.
    std::vector<int> label(vx.volume, -1);
    for (const auto &w : odd)
        label[vx.of(w)] = 4;
    for (const auto &w : odd)
        vx.neighbors(vx.of(w), [&](std::uint64_t k) { label[k] = 2; });
    for (std::uint64_t k = 0; k < vx.volume; ++k)
        if (std::popcount(k) % 2 == 0 && label[k] == -1)
            label[k] = 0;
    for (std::uint64_t k = 0; k < vx.volume; ++k) {
        if (label[k] != 0)
            continue;
        vx.neighbors(k, [&](std::uint64_t m) {
            if (label[m] == -1)
                label[m] = 1;
        });
    }
    for (auto &l : label)
        if (l == -1)
            l = 3;
    auto p = from_labels(vx, label, 5);
    if (!p.matrix || !(*p.matrix == c01234_matrix()))
        return std::nullopt;
    out.partition = std::move(p);
    return out;
}

}  // namespace hampack
