#pragma once

// Exact linear algebra over GF(2) and the mixed Z2/Z4 alphabet, the Gray map,
// and translation-plus-permutation (propelinear) isometries.

#include "hampack/core.hpp"

#include <iosfwd>
#include <vector>

namespace hampack {

/// Rows of a binary matrix, all of the same length.
struct BinaryMatrix {
    int cols = 0;
    std::vector<Word> rows;

    BinaryMatrix() = default;
    BinaryMatrix(int ncols, std::vector<Word> r);
    static BinaryMatrix parse(int ncols, const std::vector<std::string> &rows);

    std::size_t size() const { return rows.size(); }
    BinaryMatrix sub_rows(std::size_t first, std::size_t count) const;
    /// Column j as a word of length size().
    Word column(int j) const;
};

/// All sums of row subsets, each listed once.
Code gf2_span(const BinaryMatrix &gens);
/// Dimension of the GF(2) span of the words.
int gf2_rank(std::span<const Word> words);
int gf2_rank(const Code &c);
/// GF(2) inner product of every row pair is zero.
bool gf2_orthogonal(const BinaryMatrix &a, const BinaryMatrix &b);

/// Whether the set is closed under coordinatewise addition mod q and contains zero.
bool is_additive_group(const Code &k);

/// Union of the cosets K + r. K must be an additive group. Reps that fall into
/// an already listed coset are dropped; their indices go to `merged` if given.
Code coset_union(const Code &k, std::span<const Word> reps, std::vector<std::size_t> *merged = nullptr);

/// A word over Z2^b x Z4^k; binary entries come first.
struct MixedWord {
    int binary_cols = 0;
    int quaternary_cols = 0;
    std::vector<int> entries;

    MixedWord() = default;
    MixedWord(int b, int k, std::vector<int> e);
    static MixedWord zero(int b, int k) { return MixedWord(b, k, std::vector<int>(static_cast<std::size_t>(b + k), 0)); }
    /// "bb|kkkk" with the binary block before the bar.
    static MixedWord parse(int b, int k, std::string_view text);

    int binary_length() const { return binary_cols + 2 * quaternary_cols; }
    /// Additive order in Z2^b x Z4^k: 1, 2 or 4.
    int order() const;
    std::string str() const;

    friend MixedWord operator+(const MixedWord &a, const MixedWord &b);
    friend auto operator<=>(const MixedWord &, const MixedWord &) = default;
    friend bool operator==(const MixedWord &, const MixedWord &) = default;
};

struct MixedMatrix {
    int binary_cols = 0;
    int quaternary_cols = 0;
    std::vector<MixedWord> rows;

    MixedMatrix() = default;
    MixedMatrix(int b, int k, std::vector<MixedWord> r);
    MixedMatrix sub_rows(std::size_t first, std::size_t count) const;
};

/// Text format: "z2 <b> z4 <k>" then one row per line, "<b digits>|<k digits>".
MixedMatrix read_mixed_matrix(std::istream &in);
void write_mixed_matrix(std::ostream &out, const MixedMatrix &m);

/// Gray image: each Z4 symbol 0,1,2,3 becomes 00,01,11,10; the Gray image of
/// the quaternary block precedes the binary block.
Word gray_map(const MixedWord &w);
Code gray_image(std::span<const MixedWord> words);

/// Closure of the rows (and zero) under addition, sorted.
std::vector<MixedWord> z4_module_span(const MixedMatrix &gens);
std::vector<MixedWord> z4_coset_union(const std::vector<MixedWord> &module, std::span<const MixedWord> reps);

/// x -> translation + pi(x), where (pi x)_{pi(i)} = x_i.
class PropelinearMap {
public:
    /// Identity on length n.
    explicit PropelinearMap(int n);
    PropelinearMap(Word translation, std::vector<int> permutation);
    /// Permutation given in cycle notation over coordinates, e.g. {{2,3},{6,7,8,9}}.
    static PropelinearMap from_cycles(Word translation, const std::vector<std::vector<int>> &cycles);

    int length() const { return translation_.length(); }
    const Word &translation() const { return translation_; }
    const std::vector<int> &permutation() const { return perm_; }

    Word operator()(const Word &x) const;
    /// (*this) after `inner`: x -> (*this)(inner(x)).
    PropelinearMap after(const PropelinearMap &inner) const;
    PropelinearMap inverse() const;

    friend bool operator==(const PropelinearMap &, const PropelinearMap &) = default;
    friend auto operator<=>(const PropelinearMap &a, const PropelinearMap &b)
    {
        if (auto c = a.translation_ <=> b.translation_; c != 0)
            return c;
        return a.perm_ <=> b.perm_;
    }

private:
    Word translation_;
    std::vector<int> perm_;
};

/// Applies pi to the coordinates of x: result_{pi(i)} = x_i.
Word permute(const Word &x, std::span<const int> perm);

Word apply_propelinear(const PropelinearMap &m, const Word &x);
/// Smallest composition-closed set containing the identity and gens, sorted.
std::vector<PropelinearMap> group_closure(std::span<const PropelinearMap> gens);
Code orbit(std::span<const PropelinearMap> group, const Word &x);

}  // namespace hampack
