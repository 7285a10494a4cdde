#include "hampack/constructions.hpp"

#include "hampack/analysis.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hampack {

Code mds_code(int n, int q)
{
    SpaceParams space(n, q);
    std::vector<Word> out;
    for_each_vertex(space, [&](const Word &w) {
        int s = 0;
        for (int i = 0; i < n; ++i)
            s += w[i];
        if (s % q == 0)
            out.push_back(w);
    });
    return Code(space, std::move(out));
}

namespace {

bool is_prime(int q)
{
    if (q < 2)
        return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

// Columns (0,1) and (1,a), a in GF(q); one per projective point.
std::pair<int, int> hamming_syndrome(const Word &w, int q)
{
    int s0 = 0, s1 = w[0];
    for (int a = 0; a < q; ++a) {
        s0 += w[a + 1];
        s1 += a * w[a + 1];
    }
    return {s0 % q, s1 % q};
}

}  // namespace

Code hamming_code_q(int q) { return hamming_coset_union(q, 1); }

Code hamming_coset_union(int q, int lambda, const std::vector<std::pair<int, int>> &syndromes)
{
    if (!is_prime(q))
        throw std::invalid_argument("hamming_code_q supports prime q only, got " + std::to_string(q));
    if (lambda < 1 || lambda > q * q)
        throw std::invalid_argument("lambda must lie in [1, q^2]");
    std::set<std::pair<int, int>> chosen;
    if (syndromes.empty()) {
        for (int k = 0; k < lambda; ++k)
            chosen.emplace(k / q, k % q);
    } else {
        if (static_cast<int>(syndromes.size()) != lambda)
            throw std::invalid_argument("expected " + std::to_string(lambda) + " syndromes");
        for (auto s : syndromes) {
            if (s.first < 0 || s.first >= q || s.second < 0 || s.second >= q)
                throw std::invalid_argument("syndrome out of range");
            if (!chosen.insert(s).second)
                throw std::invalid_argument("repeated syndrome: cosets must be distinct");
        }
    }
    SpaceParams space(q + 1, q);
    std::vector<Word> out;
    for_each_vertex(space, [&](const Word &w) {
        if (chosen.contains(hamming_syndrome(w, q)))
            out.push_back(w);
    });
    return Code(space, std::move(out));
}

Code l_star(int n)
{
    if (n < 6 || n % 2)
        throw std::invalid_argument("l_star needs even n >= 6");
    const int half = n / 2;
    std::set<std::uint64_t> words;
    std::vector<std::uint64_t> base;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << half); ++m) {
        if (std::popcount(m) % 2)
            continue;
        std::uint64_t w = 0;
        for (int t = 0; t < half; ++t)
            if ((m >> t) & 1u)
                w |= std::uint64_t{3} << (2 * t);
        base.push_back(w);
        words.insert(w);
    }
    static constexpr int pattern[4] = {0, 1, 1, 0};
    for (int i = 0; i < n; i += 2)
        for (auto w : base) {
            std::uint64_t x = w;
            for (int k = 0; k < 4; ++k) {
                int c = (i + k) % n;
                x = (x & ~(std::uint64_t{1} << c)) | (static_cast<std::uint64_t>(pattern[k]) << c);
            }
            words.insert(x);
        }
    std::vector<Word> out;
    for (auto w : words)
        out.push_back(Word::from_bits(n, w));
    return Code(SpaceParams(n, 2), std::move(out));
}

Code concatenate(const Code &u, const Code &v)
{
    if (!u.space().binary() || !v.space().binary())
        throw SpaceMismatch("concatenate needs binary codes");
    if (!is_extended_unitrade(u) || !is_extended_unitrade(v))
        throw std::invalid_argument("concatenate: both factors must be extended unitrades");
    const int m = u.length(), n = v.length();
    SpaceParams space(m + n, 2);
    std::vector<Word> out;
    out.reserve(u.size() * v.size());
    for (const auto &a : u)
        for (const auto &b : v)
            out.push_back(Word::from_bits(m + n, a.bits() | (b.bits() << m)));
    return Code(space, std::move(out));
}

Code extend_parity(const Code &c)
{
    if (!c.space().binary())
        throw SpaceMismatch("extend_parity needs a binary code");
    const int n = c.length();
    std::vector<Word> out;
    for (const auto &w : c)
        out.push_back(Word::from_bits(n + 1, w.bits() | (static_cast<std::uint64_t>(w.parity()) << n)));
    return Code(SpaceParams(n + 1, 2), std::move(out));
}

Code puncture_last(const Code &c)
{
    if (c.length() < 2)
        throw std::invalid_argument("cannot puncture a length-1 code");
    std::vector<int> keep(static_cast<std::size_t>(c.length() - 1));
    for (int i = 0; i < c.length() - 1; ++i)
        keep[static_cast<std::size_t>(i)] = i;
    return project(c, keep);
}

Code shorten(const Code &c, int coord, int symbol)
{
    if (coord < 0 || coord >= c.length())
        throw std::out_of_range("shorten: coordinate " + std::to_string(coord) + " out of range");
    if (c.length() < 2)
        throw std::invalid_argument("cannot shorten a length-1 code");
    if (symbol < 0 || symbol >= c.space().q)
        throw std::invalid_argument("shorten: symbol outside the alphabet");
    std::vector<int> keep;
    for (int i = 0; i < c.length(); ++i)
        if (i != coord)
            keep.push_back(i);
    std::vector<Word> sel;
    for (const auto &w : c)
        if (w[coord] == symbol)
            sel.push_back(w);
    Code kept(c.space(), std::move(sel));
    if (kept.empty())
        return Code(SpaceParams(c.length() - 1, c.space().q));
    return project(kept, keep);
}

Code diagonal_unitrade(int n)
{
    if (n < 2 || n % 2)
        throw std::invalid_argument("diagonal_unitrade needs even n >= 2");
    const int half = n / 2;
    std::vector<Word> out;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << half); ++x)
        out.push_back(Word::from_bits(n, x | (x << half)));
    return Code(SpaceParams(n, 2), std::move(out));
}

namespace {

std::vector<Word> parse_words(int n, std::initializer_list<const char *> rows)
{
    std::vector<Word> out;
    for (const char *r : rows)
        out.push_back(Word::parse(SpaceParams(n, 2), r));
    return out;
}

MixedMatrix parse_mixed(int b, int k, std::initializer_list<const char *> rows)
{
    std::vector<MixedWord> out;
    for (const char *r : rows)
        out.push_back(MixedWord::parse(b, k, r));
    return MixedMatrix(b, k, std::move(out));
}

EmbeddedData make_embedded_data()
{
    EmbeddedData d;
    d.gen1 = BinaryMatrix(10, parse_words(10, {"0011111100", "1100111010", "1111001001", "0101010111", "1010100111"}));
    d.check1 = BinaryMatrix(10, parse_words(10, {"1101100011", "0011001111", "0110110110", "1010111001", "1101011100"}));
    // Three Z4 columns and four Z2 columns, stored binary block first.
    d.gen2 = parse_mixed(4, 3, {"1100|022", "1010|202", "1001|220", "0111|111"});
    d.check2 = parse_mixed(4, 3, {"1100|011", "1010|101", "1001|110"});
    // Two Z2 columns and four Z4 columns.
    d.gen3 = parse_mixed(2, 4, {"11|2222", "10|0111", "01|1031"});
    d.check3 = parse_mixed(2, 4, {"11|2222", "10|1110", "01|1301"});
    d.coset_reps_k1 = parse_words(10, {"0001001001", "0001001100", "0001011110", "0001010010", "0000010101", "0000010011"});
    for (const char *r : {"01|1300", "10|1300", "00|2030", "10|1030", "01|0330", "11|3330"})
        d.coset_reps_k2.push_back(MixedWord::parse(2, 4, r));
    d.display_span = BinaryMatrix(10, parse_words(10, {"0001111011", "0010101010", "0100110100", "1000110111"}));
    d.display_translates = parse_words(10, {"0000000000", "0000100001", "0000100111", "0000101110", "0000111001", "0000111100"});
    const SpaceParams s10(10, 2);
    d.xi.push_back(PropelinearMap::from_cycles(Word::parse(s10, "1111111111"), {}));
    d.xi.push_back(PropelinearMap::from_cycles(Word::parse(s10, "0101001111"), {{0, 1}, {2, 3}}));
    d.xi.push_back(PropelinearMap::from_cycles(Word::parse(s10, "0001010011"), {{2, 3}, {4, 5}, {6, 7, 8, 9}}));
    d.orbit_seeds = parse_words(10, {"0000000111", "0000110100", "0000001101", "0000110001", "0000101010", "0000011010"});
    return d;
}

std::multiset<Word> columns(const BinaryMatrix &m)
{
    std::multiset<Word> cols;
    for (int j = 0; j < m.cols; ++j)
        cols.insert(m.column(j));
    return cols;
}

void require_self_check()
{
    static const std::vector<std::string> failures = embedded_data_self_check();
    if (!failures.empty())
        throw std::logic_error("embedded data self-check failed: " + failures.front());
}

}  // namespace

const EmbeddedData &embedded_data()
{
    static const EmbeddedData d = make_embedded_data();
    return d;
}

std::vector<std::string> embedded_data_self_check()
{
    const auto &d = embedded_data();
    std::vector<std::string> failed;
    if (d.gen1.size() != 5 || d.check1.size() != 5)
        failed.emplace_back("gen1/check1 must have 5 rows");
    if (d.gen2.rows.size() != 4 || d.check2.rows.size() != 3 || d.gen3.rows.size() != 3 || d.check3.rows.size() != 3)
        failed.emplace_back("mixed matrices have unexpected row counts");
    for (std::size_t i = 0; i < d.gen2.rows.size() && i < 4; ++i)
        if (!(gray_map(d.gen2.rows[i]) == d.gen1.rows[i]))
            failed.push_back("Gray image of gen2 row " + std::to_string(i + 1) + " differs from gen1 row "
                             + std::to_string(i + 1));
    if (columns(d.gen1) != columns(d.check1))
        failed.emplace_back("check1 columns are not a permutation of gen1 columns");
    if (!gf2_orthogonal(d.gen1, d.check1))
        failed.emplace_back("gen1 * check1^T != 0 over GF(2)");
    if (gf2_rank(d.gen1.rows) != 5)
        failed.emplace_back("gen1 does not have rank 5");
    return failed;
}

Packing96 packing96_linear()
{
    require_self_check();
    const auto &d = embedded_data();
    Packing96 p;
    p.name = "linear";
    p.c0 = gf2_span(d.gen1);
    p.c4 = coset_union(gf2_span(d.gen1.sub_rows(1, 4)), d.coset_reps_k1);
    return p;
}

Packing96 packing96_z2z4()
{
    require_self_check();
    const auto &d = embedded_data();
    Packing96 p;
    p.name = "z2z4";
    p.c0 = gray_image(z4_module_span(d.gen3));
    auto k2 = z4_module_span(d.gen3.sub_rows(1, 2));
    p.c4 = gray_image(z4_coset_union(k2, d.coset_reps_k2));
    return p;
}

Packing96 packing96_propelinear()
{
    require_self_check();
    const auto &d = embedded_data();
    Packing96 p;
    p.name = "propelinear";
    const SpaceParams s10(10, 2);
    p.c0 = orbit(group_closure(d.xi), Word(s10));
    const std::vector<PropelinearMap> sub{d.xi[1], d.xi[2]};
    auto h = group_closure(sub);
    Code c4(s10);
    for (const auto &seed : d.orbit_seeds)
        c4 = c4.united(orbit(h, seed));
    p.c4 = c4;
    return p;
}

Code c0_from_check2()
{
    require_self_check();
    return gray_image(z4_module_span(embedded_data().check2));
}

Code classified_c4_display()
{
    const auto &d = embedded_data();
    return coset_union(gf2_span(d.display_span), d.display_translates);
}

}  // namespace hampack
