#include "hampack/analysis.hpp"
#include "hampack/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace hampack {

namespace {

using Bits = std::uint64_t;

// Relabels signatures by their sorted order; returns the number of classes.
template <class Sig>
int relabel(const std::vector<Sig> &sigs, std::vector<int> &out)
{
    std::vector<Sig> sorted = sigs;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    out.resize(sigs.size());
    for (std::size_t k = 0; k < sigs.size(); ++k)
        out[k] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), sigs[k]) - sorted.begin());
    return static_cast<int>(sorted.size());
}

int count_classes(const std::vector<int> &col)
{
    return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

class Canonizer {
public:
    Canonizer(int n, std::vector<Bits> words) : n_(n), words_(std::move(words)) {}

    /// Least leaf image of the tree.
    const std::vector<Bits> &best() const { return best_; }
    const std::vector<Bits> &first_image() const { return first_image_; }
    const std::vector<int> &first_pos() const { return first_pos_; }

    /// Leaf images of other trees; meeting one stops the search.
    void set_targets(const std::vector<const std::vector<Bits> *> &targets) { targets_ = targets; }
    /// Index of the target met and the leaf positions that produced it.
    std::optional<std::pair<std::size_t, std::vector<int>>> hit() const { return hit_; }

    void search()
    {
        std::vector<int> col(static_cast<std::size_t>(n_), 0);
        refine(col);
        std::vector<int> prefix;
        explore(col, prefix, true);
    }

private:
    // Colour refinement on the word/coordinate incidence structure.
    void refine(std::vector<int> &col) const
    {
        const std::size_t m = words_.size();
        std::vector<int> wc(m, 0);
        int ncol = count_classes(col), nw = 1;
        std::vector<std::vector<int>> wsig(m), csig(static_cast<std::size_t>(n_));
        for (;;) {
            for (std::size_t k = 0; k < m; ++k) {
                auto &s = wsig[k];
                s.assign(1, wc[k]);
                for (int i = 0; i < n_; ++i)
                    if ((words_[k] >> i) & 1u)
                        s.push_back(col[static_cast<std::size_t>(i)]);
                std::sort(s.begin() + 1, s.end());
            }
            int nw2 = relabel(wsig, wc);
            for (int i = 0; i < n_; ++i) {
                auto &s = csig[static_cast<std::size_t>(i)];
                s.assign(1, col[static_cast<std::size_t>(i)]);
                for (std::size_t k = 0; k < m; ++k)
                    if ((words_[k] >> i) & 1u)
                        s.push_back(wc[k]);
                std::sort(s.begin() + 1, s.end());
            }
            int ncol2 = relabel(csig, col);
            if (ncol2 == ncol && nw2 == nw)
                return;
            ncol = ncol2;
            nw = nw2;
        }
    }

    std::vector<Bits> image(const std::vector<int> &pos) const
    {
        std::vector<Bits> img;
        img.reserve(words_.size());
        for (Bits w : words_) {
            Bits x = 0;
            for (int i = 0; i < n_; ++i)
                if ((w >> i) & 1u)
                    x |= Bits{1} << (n_ - 1 - pos[static_cast<std::size_t>(i)]);
            img.push_back(x);
        }
        std::sort(img.begin(), img.end());
        return img;
    }

    void leaf(const std::vector<int> &pos, bool first_path)
    {
        auto img = image(pos);
        for (std::size_t t = 0; t < targets_.size(); ++t)
            if (img == *targets_[t]) {
                hit_.emplace(t, pos);
                return;
            }
        if (first_path) {
            first_image_ = img;
            first_pos_ = pos;
        } else if (img == first_image_) {
            // gamma(i) = first_pos^{-1}(pos(i)) preserves the set.
            std::vector<int> inv(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                inv[static_cast<std::size_t>(first_pos_[static_cast<std::size_t>(i)])] = i;
            std::vector<int> g(static_cast<std::size_t>(n_));
            for (int i = 0; i < n_; ++i)
                g[static_cast<std::size_t>(i)] = inv[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])];
            autos_.push_back(std::move(g));
        }
        if (best_.empty() || img < best_)
            best_ = std::move(img);
    }

    // Orbit representative of x under automorphisms fixing the prefix pointwise.
    int orbit_root(int x, const std::vector<int> &prefix) const
    {
        std::vector<int> parent(static_cast<std::size_t>(n_));
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[static_cast<std::size_t>(a)] != a)
                a = parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
            return a;
        };
        for (const auto &g : autos_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int c) { return g[static_cast<std::size_t>(c)] == c; });
            if (!fixes)
                continue;
            for (int i = 0; i < n_; ++i) {
                int a = find(i), b = find(g[static_cast<std::size_t>(i)]);
                if (a != b)
                    parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
            }
        }
        return find(x);
    }

    void explore(const std::vector<int> &col, std::vector<int> &prefix, bool first_path)
    {
        if (hit_)
            return;
        const int k = count_classes(col);
        if (k == n_) {
            leaf(col, first_path);
            return;
        }
        std::vector<int> size(static_cast<std::size_t>(k), 0);
        for (int c : col)
            ++size[static_cast<std::size_t>(c)];
        int target = 0;
        while (size[static_cast<std::size_t>(target)] == 1)
            ++target;
        std::vector<int> explored_roots;
        bool first_child = true;
        for (int i = 0; i < n_; ++i) {
            if (col[static_cast<std::size_t>(i)] != target)
                continue;
            if (first_path && !first_child) {
                int r = orbit_root(i, prefix);
                bool seen = std::any_of(explored_roots.begin(), explored_roots.end(),
                                        [&](int e) { return orbit_root(e, prefix) == r; });
                if (seen)
                    continue;
            }
            std::vector<int> child = col;
            for (int j = 0; j < n_; ++j) {
                auto &c = child[static_cast<std::size_t>(j)];
                if (c > target || (c == target && j != i))
                    ++c;
            }
            refine(child);
            prefix.push_back(i);
            explore(child, prefix, first_path && first_child);
            prefix.pop_back();
            explored_roots.push_back(i);
            first_child = false;
        }
    }

    int n_;
    std::vector<Bits> words_;
    std::vector<Bits> best_;
    std::vector<Bits> first_image_;
    std::vector<int> first_pos_;
    std::vector<std::vector<int>> autos_;
    std::vector<const std::vector<Bits> *> targets_;
    std::optional<std::pair<std::size_t, std::vector<int>>> hit_;
};

Bits to_image(Bits y, const std::vector<int> &pos, int n)
{
    Bits z = 0;
    for (int i = 0; i < n; ++i)
        if ((y >> i) & 1u)
            z |= Bits{1} << (n - 1 - pos[static_cast<std::size_t>(i)]);
    return z;
}

Bits from_image(Bits z, const std::vector<int> &pos, int n)
{
    Bits y = 0;
    for (int i = 0; i < n; ++i)
        if ((z >> (n - 1 - pos[static_cast<std::size_t>(i)])) & 1u)
            y |= Bits{1} << i;
    return y;
}

std::vector<int> distance_profile(Bits v, const std::vector<Bits> &words, int n)
{
    std::vector<int> prof(static_cast<std::size_t>(n + 1), 0);
    for (Bits w : words)
        ++prof[static_cast<std::size_t>(std::popcount(v ^ w))];
    return prof;
}

}  // namespace

Code canonical_form(const Code &t)
{
    if (!t.space().binary())
        throw SpaceMismatch("canonical_form needs a binary code");
    const int n = t.length();
    if (t.empty())
        return Code(t.space());
    std::vector<Bits> words;
    for (const auto &w : t)
        words.push_back(w.bits());
    std::vector<Bits> sorted = words;
    std::sort(sorted.begin(), sorted.end());
    // Translations by the words with the least distance profile.
    std::vector<std::vector<int>> profiles;
    for (Bits v : words)
        profiles.push_back(distance_profile(v, words, n));
    const auto least = *std::min_element(profiles.begin(), profiles.end());
    // Trees of translations in one orbit of Aut(T) have the same leaf images.
    // A tree meeting a leaf of an earlier fully searched tree yields an
    // automorphism; translations in the orbits found so far are skipped.
    struct Base {
        Bits v;
        std::vector<Bits> image;
        std::vector<int> pos;
    };
    std::vector<Base> bases;
    std::vector<Bits> best;
    std::vector<std::size_t> parent(words.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
        while (parent[a] != a)
            a = parent[a] = parent[parent[a]];
        return a;
    };
    auto index_of = [&](Bits x) {
        return static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), x) - sorted.begin());
    };
    std::vector<std::size_t> base_index;
    for (std::size_t k = 0; k < words.size(); ++k) {
        if (profiles[k] != least)
            continue;
        const std::size_t root = find(index_of(words[k]));
        if (std::any_of(base_index.begin(), base_index.end(), [&](std::size_t b) { return find(b) == root; }))
            continue;
        std::vector<Bits> shifted;
        for (Bits w : words)
            shifted.push_back(w ^ words[k]);
        Canonizer c(n, std::move(shifted));
        std::vector<const std::vector<Bits> *> targets;
        for (const auto &b : bases)
            targets.push_back(&b.image);
        c.set_targets(targets);
        c.search();
        if (auto h = c.hit()) {
            // g(x) = from_image(to_image(x + v_b, pos_b), pos) + v maps v_b to v.
            const Base &b = bases[h->first];
            for (Bits x : sorted) {
                Bits gx = from_image(to_image(x ^ b.v, b.pos, n), h->second, n) ^ words[k];
                std::size_t a = find(index_of(x)), z = find(index_of(gx));
                if (a != z)
                    parent[std::max(a, z)] = std::min(a, z);
            }
            continue;
        }
        bases.push_back(Base{words[k], c.first_image(), c.first_pos()});
        base_index.push_back(index_of(words[k]));
        if (best.empty() || c.best() < best)
            best = c.best();
    }
    std::vector<Word> out;
    for (Bits x : best) {
        Bits w = 0;
        for (int p = 0; p < n; ++p)
            if ((x >> (n - 1 - p)) & 1u)
                w |= Bits{1} << p;
        out.push_back(Word::from_bits(n, w));
    }
    return Code(t.space(), std::move(out));
}

bool are_equivalent(const Code &a, const Code &b)
{
    if (a.space() != b.space())
        throw SpaceMismatch("are_equivalent: " + to_string(a.space()) + " vs " + to_string(b.space()));
    if (a.size() != b.size())
        return false;
    return canonical_form(a) == canonical_form(b);
}

bool has_constant_weight_translate(const Code &t)
{
    if (!t.space().binary())
        throw SpaceMismatch("has_constant_weight_translate needs a binary code");
    if (t.empty())
        return true;
    const int n = t.length();
    if (n > 24)
        throw std::invalid_argument("has_constant_weight_translate scans 2^n translates; n <= 24 supported");
    for (Bits v = 0; v < (Bits{1} << n); ++v) {
        const int w0 = std::popcount(t[0].bits() ^ v);
        bool same = std::all_of(t.begin(), t.end(), [&](const Word &w) { return std::popcount(w.bits() ^ v) == w0; });
        if (same)
            return true;
    }
    return false;
}

ClassFlags compute_flags(const Code &t)
{
    ClassFlags f;
    f.bipartite = is_bipartite_unitrade(t, true).bipartite();
    f.antipodal = is_antipodal(t);
    f.constant_weight_translate = has_constant_weight_translate(t);
    f.irreducible = reducibility_certificate(t).kind == ReducibilityCertificate::Kind::irreducible;
    return f;
}

}  // namespace hampack
