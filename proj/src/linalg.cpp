#include "hampack/linalg.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

namespace hampack {

BinaryMatrix::BinaryMatrix(int ncols, std::vector<Word> r) : cols(ncols), rows(std::move(r))
{
    for (const auto &w : rows)
        if (w.length() != cols || !w.space().binary())
            throw SpaceMismatch("ragged binary matrix: row " + w.str() + " is not a binary word of length "
                                + std::to_string(cols));
}

BinaryMatrix BinaryMatrix::parse(int ncols, const std::vector<std::string> &rows)
{
    std::vector<Word> r;
    for (const auto &s : rows)
        r.push_back(Word::parse(SpaceParams(ncols, 2), s));
    return BinaryMatrix(ncols, std::move(r));
}

BinaryMatrix BinaryMatrix::sub_rows(std::size_t first, std::size_t count) const
{
    return BinaryMatrix(cols, std::vector<Word>(rows.begin() + static_cast<std::ptrdiff_t>(first),
                                                rows.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

Word BinaryMatrix::column(int j) const
{
    std::uint64_t bits = 0;
    for (std::size_t i = 0; i < rows.size(); ++i)
        bits |= static_cast<std::uint64_t>(rows[i][j]) << i;
    return Word::from_bits(static_cast<int>(rows.size()), bits);
}

namespace {

// Row-reduced basis of the packed words, one pivot bit per vector.
std::vector<std::uint64_t> gf2_basis(std::span<const Word> words)
{
    std::vector<std::uint64_t> basis;
    for (const auto &w : words) {
        std::uint64_t v = w.bits();
        for (auto b : basis)
            v = std::min(v, v ^ b);
        if (v) {
            basis.push_back(v);
            std::sort(basis.rbegin(), basis.rend());
        }
    }
    return basis;
}

}  // namespace

Code gf2_span(const BinaryMatrix &gens)
{
    SpaceParams space(gens.cols, 2);
    auto basis = gf2_basis(gens.rows);
    std::vector<Word> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << basis.size()); ++mask) {
        std::uint64_t v = 0;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1u)
                v ^= basis[i];
        out.push_back(Word::from_bits(gens.cols, v));
    }
    return Code(space, std::move(out));
}

int gf2_rank(std::span<const Word> words)
{
    for (const auto &w : words)
        if (!w.space().binary())
            throw SpaceMismatch("gf2_rank needs binary words");
    return static_cast<int>(gf2_basis(words).size());
}

int gf2_rank(const Code &c)
{
    if (!c.space().binary())
        throw SpaceMismatch("gf2_rank needs a binary code");
    return gf2_rank(std::span<const Word>(c.words()));
}

bool gf2_orthogonal(const BinaryMatrix &a, const BinaryMatrix &b)
{
    for (const auto &x : a.rows)
        for (const auto &y : b.rows)
            if (std::popcount(x.bits() & y.bits()) & 1)
                return false;
    return true;
}

bool is_additive_group(const Code &k)
{
    if (k.empty())
        return false;
    Code d = k.distinct();
    if (!d.contains(Word(k.space())))
        return false;
    for (const auto &x : d)
        for (const auto &y : d)
            if (!d.contains(add(x, y)))
                return false;
    return true;
}

Code coset_union(const Code &k, std::span<const Word> reps, std::vector<std::size_t> *merged)
{
    if (!is_additive_group(k))
        throw std::invalid_argument("coset_union: K is not closed under coordinatewise addition");
    Code group = k.distinct();
    std::vector<Word> out;
    std::set<Word> seen;
    for (std::size_t i = 0; i < reps.size(); ++i) {
        if (!(reps[i].space() == k.space()))
            throw SpaceMismatch("coset representative " + reps[i].str() + " is not in " + to_string(k.space()));
        if (seen.contains(reps[i])) {
            if (merged)
                merged->push_back(i);
            continue;
        }
        for (const auto &g : group) {
            Word w = add(g, reps[i]);
            seen.insert(w);
            out.push_back(w);
        }
    }
    return Code(k.space(), std::move(out));
}

MixedWord::MixedWord(int b, int k, std::vector<int> e) : binary_cols(b), quaternary_cols(k), entries(std::move(e))
{
    if (static_cast<int>(entries.size()) != b + k)
        throw std::invalid_argument("mixed word has " + std::to_string(entries.size()) + " entries, expected "
                                    + std::to_string(b + k));
    for (int i = 0; i < b + k; ++i) {
        int lim = i < b ? 2 : 4;
        int v = entries[static_cast<std::size_t>(i)];
        if (v < 0 || v >= lim)
            throw std::invalid_argument("mixed word entry " + std::to_string(v) + " out of range at position "
                                        + std::to_string(i));
    }
}

MixedWord MixedWord::parse(int b, int k, std::string_view text)
{
    std::vector<int> e;
    bool seen_bar = false;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t')
            continue;
        if (ch == '|') {
            if (seen_bar || static_cast<int>(e.size()) != b)
                throw FormatError("mixed word '" + std::string(text) + "': bar must follow the "
                                  + std::to_string(b) + " binary digits");
            seen_bar = true;
            continue;
        }
        if (ch < '0' || ch > '3')
            throw FormatError("mixed word '" + std::string(text) + "': bad digit");
        e.push_back(ch - '0');
    }
    if (!seen_bar && b > 0 && k > 0)
        throw FormatError("mixed word '" + std::string(text) + "': missing '|'");
    try {
        return MixedWord(b, k, std::move(e));
    } catch (const std::invalid_argument &ex) {
        throw FormatError("mixed word '" + std::string(text) + "': " + ex.what());
    }
}

int MixedWord::order() const
{
    int ord = 1;
    for (int i = 0; i < binary_cols + quaternary_cols; ++i) {
        int v = entries[static_cast<std::size_t>(i)];
        if (i >= binary_cols && (v == 1 || v == 3))
            return 4;
        if (v != 0)
            ord = 2;
    }
    return ord;
}

std::string MixedWord::str() const
{
    std::string s;
    for (int i = 0; i < binary_cols + quaternary_cols; ++i) {
        if (i == binary_cols)
            s += '|';
        s += static_cast<char>('0' + entries[static_cast<std::size_t>(i)]);
    }
    if (binary_cols == binary_cols + quaternary_cols)
        s += '|';
    return s;
}

MixedWord operator+(const MixedWord &a, const MixedWord &b)
{
    if (a.binary_cols != b.binary_cols || a.quaternary_cols != b.quaternary_cols)
        throw std::invalid_argument("adding mixed words of different shapes");
    std::vector<int> e(a.entries.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = (a.entries[i] + b.entries[i]) % (static_cast<int>(i) < a.binary_cols ? 2 : 4);
    return MixedWord(a.binary_cols, a.quaternary_cols, std::move(e));
}

MixedMatrix::MixedMatrix(int b, int k, std::vector<MixedWord> r) : binary_cols(b), quaternary_cols(k), rows(std::move(r))
{
    for (const auto &w : rows)
        if (w.binary_cols != b || w.quaternary_cols != k)
            throw std::invalid_argument("mixed matrix row " + w.str() + " has the wrong shape");
}

MixedMatrix MixedMatrix::sub_rows(std::size_t first, std::size_t count) const
{
    return MixedMatrix(binary_cols, quaternary_cols,
                       std::vector<MixedWord>(rows.begin() + static_cast<std::ptrdiff_t>(first),
                                              rows.begin() + static_cast<std::ptrdiff_t>(first + count)));
}

MixedMatrix read_mixed_matrix(std::istream &in)
{
    std::string line;
    int b = -1, k = -1;
    std::vector<MixedWord> rows;
    while (std::getline(in, line)) {
        auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        if (b < 0) {
            std::istringstream hdr(line);
            std::string t2, t4;
            if (!(hdr >> t2 >> b >> t4 >> k) || t2 != "z2" || t4 != "z4" || b < 0 || k < 0)
                throw FormatError("mixed matrix header must be 'z2 <b> z4 <k>'");
            continue;
        }
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
            line.pop_back();
        rows.push_back(MixedWord::parse(b, k, std::string_view(line).substr(start)));
    }
    if (b < 0)
        throw FormatError("mixed matrix: missing header");
    return MixedMatrix(b, k, std::move(rows));
}

void write_mixed_matrix(std::ostream &out, const MixedMatrix &m)
{
    out << "z2 " << m.binary_cols << " z4 " << m.quaternary_cols << '\n';
    for (const auto &r : m.rows)
        out << r.str() << '\n';
}

Word gray_map(const MixedWord &w)
{
    static constexpr int gray[4][2] = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
    std::vector<int> bits;
    bits.reserve(static_cast<std::size_t>(w.binary_length()));
    for (int i = w.binary_cols; i < w.binary_cols + w.quaternary_cols; ++i) {
        int v = w.entries[static_cast<std::size_t>(i)];
        if (v < 0 || v > 3)
            throw std::invalid_argument("Z4 symbol out of range");
        bits.push_back(gray[v][0]);
        bits.push_back(gray[v][1]);
    }
    for (int i = 0; i < w.binary_cols; ++i) {
        int v = w.entries[static_cast<std::size_t>(i)];
        if (v < 0 || v > 1)
            throw std::invalid_argument("Z2 symbol out of range");
        bits.push_back(v);
    }
    return Word(SpaceParams(w.binary_length(), 2), bits);
}

Code gray_image(std::span<const MixedWord> words)
{
    if (words.empty())
        throw std::invalid_argument("gray_image of an empty list has no length");
    std::vector<Word> out;
    for (const auto &w : words)
        out.push_back(gray_map(w));
    return Code(SpaceParams(words.front().binary_length(), 2), std::move(out));
}

std::vector<MixedWord> z4_module_span(const MixedMatrix &gens)
{
    std::set<MixedWord> elems{MixedWord::zero(gens.binary_cols, gens.quaternary_cols)};
    std::vector<MixedWord> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<MixedWord> next;
        for (const auto &x : frontier)
            for (const auto &g : gens.rows) {
                MixedWord y = x + g;
                if (elems.insert(y).second)
                    next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

std::vector<MixedWord> z4_coset_union(const std::vector<MixedWord> &module, std::span<const MixedWord> reps)
{
    std::set<MixedWord> out;
    for (const auto &r : reps)
        for (const auto &m : module)
            out.insert(m + r);
    return {out.begin(), out.end()};
}

namespace {

void check_permutation(const std::vector<int> &perm)
{
    std::vector<bool> hit(perm.size(), false);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || hit[static_cast<std::size_t>(p)])
            throw std::invalid_argument("not a permutation");
        hit[static_cast<std::size_t>(p)] = true;
    }
}

}  // namespace

PropelinearMap::PropelinearMap(int n) : translation_(SpaceParams(n, 2)), perm_(static_cast<std::size_t>(n))
{
    for (int i = 0; i < n; ++i)
        perm_[static_cast<std::size_t>(i)] = i;
}

PropelinearMap::PropelinearMap(Word translation, std::vector<int> permutation)
    : translation_(std::move(translation)), perm_(std::move(permutation))
{
    if (!translation_.space().binary())
        throw SpaceMismatch("propelinear maps act on binary words");
    if (static_cast<int>(perm_.size()) != translation_.length())
        throw SpaceMismatch("permutation length differs from translation length");
    check_permutation(perm_);
}

PropelinearMap PropelinearMap::from_cycles(Word translation, const std::vector<std::vector<int>> &cycles)
{
    std::vector<int> perm(static_cast<std::size_t>(translation.length()));
    for (std::size_t i = 0; i < perm.size(); ++i)
        perm[i] = static_cast<int>(i);
    for (const auto &cyc : cycles)
        for (std::size_t j = 0; j < cyc.size(); ++j)
            perm.at(static_cast<std::size_t>(cyc[j])) = cyc[(j + 1) % cyc.size()];
    return PropelinearMap(std::move(translation), std::move(perm));
}

Word permute(const Word &x, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != x.length())
        throw SpaceMismatch("permutation length differs from word length");
    std::uint64_t out = 0;
    for (int i = 0; i < x.length(); ++i)
        out |= static_cast<std::uint64_t>(x[i]) << perm[static_cast<std::size_t>(i)];
    return Word::from_bits(x.length(), out);
}

Word PropelinearMap::operator()(const Word &x) const
{
    if (x.length() != length() || !x.space().binary())
        throw SpaceMismatch("propelinear map of length " + std::to_string(length()) + " applied to " + x.str());
    return add(translation_, permute(x, perm_));
}

PropelinearMap PropelinearMap::after(const PropelinearMap &inner) const
{
    // t + pi(s + sigma x) = (t + pi s) + (pi o sigma) x
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        p[i] = perm_[static_cast<std::size_t>(inner.perm_[i])];
    return PropelinearMap(add(translation_, permute(inner.translation_, perm_)), std::move(p));
}

PropelinearMap PropelinearMap::inverse() const
{
    std::vector<int> inv(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i)
        inv[static_cast<std::size_t>(perm_[i])] = static_cast<int>(i);
    Word t = permute(translation_, inv);
    return PropelinearMap(std::move(t), std::move(inv));
}

Word apply_propelinear(const PropelinearMap &m, const Word &x) { return m(x); }

std::vector<PropelinearMap> group_closure(std::span<const PropelinearMap> gens)
{
    if (gens.empty())
        throw std::invalid_argument("group_closure needs at least one generator to fix the length");
    const int n = gens.front().length();
    for (const auto &g : gens)
        if (g.length() != n)
            throw SpaceMismatch("generators act on different lengths");
    std::set<PropelinearMap> elems{PropelinearMap(n)};
    std::vector<PropelinearMap> frontier(elems.begin(), elems.end());
    while (!frontier.empty()) {
        std::vector<PropelinearMap> next;
        for (const auto &x : frontier)
            for (const auto &g : gens) {
                PropelinearMap y = g.after(x);
                if (elems.insert(y).second)
                    next.push_back(std::move(y));
            }
        frontier = std::move(next);
    }
    return {elems.begin(), elems.end()};
}

Code orbit(std::span<const PropelinearMap> group, const Word &x)
{
    std::set<Word> out;
    for (const auto &g : group)
        out.insert(g(x));
    return Code(x.space(), std::vector<Word>(out.begin(), out.end()));
}

}  // namespace hampack
