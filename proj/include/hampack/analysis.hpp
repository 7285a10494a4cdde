#pragma once

// Verification predicates and distributions for packings and unitrades.

#include "hampack/core.hpp"
#include "hampack/exact.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace hampack {

struct PackingReport {
    int lambda = 1;
    int r = 1;
    std::size_t size = 0;
    std::size_t max_coverage = 0;
    /// Lexicographically first vertex attaining max_coverage.
    Word witness;
    std::vector<Word> duplicate_words;
    bool full_space_scan = false;

    bool is_lambda_fold(std::size_t lam) const { return max_coverage <= lam; }
    bool ok() const { return is_lambda_fold(static_cast<std::size_t>(lambda)); }
};

enum class ScanMode { automatic, full_space, ball_union };

/// Exact maximum number of codewords in a radius-r ball. The full-space scan
/// splits the vertex range over `threads` workers.
PackingReport verify_packing(const Code &c, int lambda, int r, ScanMode mode = ScanMode::automatic,
                             unsigned threads = 1);

struct TradeCheck {
    bool ok = true;
    /// Center of a ball violating the condition, and how many words it holds.
    std::optional<Word> witness;
    std::size_t witness_count = 0;

    explicit operator bool() const { return ok; }
};

/// Every radius-1 ball meets T in 0 or 2 words. A repeated word fails the
/// check with itself as witness.
TradeCheck is_unitrade(const Code &t);

/// T has constant parity and every radius-1 ball centered at the opposite
/// parity meets T in 0 or 2 words. For n >= 5 the result is cross-checked
/// against the halved-cube characterization. Throws on mixed parity.
TradeCheck is_extended_unitrade(const Code &t);

/// Every word of T has exactly n/2 others at distance 2, and no three words
/// of T are pairwise at distance 2.
bool halved_cube_characterization(const Code &t);

struct BipartiteResult {
    /// Two classes of minimum distance >= 3 (>= 4 when extended).
    std::optional<std::pair<Code, Code>> parts;
    /// Closed walk of odd length in the conflict graph when not bipartite.
    std::vector<Word> odd_cycle;

    bool bipartite() const { return parts.has_value(); }
};

BipartiteResult is_bipartite_unitrade(const Code &t, bool extended);

bool is_antipodal(const Code &t);

/// Connected components of the graph joining words that share a radius-1 ball,
/// ordered by their smallest word.
std::vector<Code> primary_components(const Code &t, bool extended);

struct Factorization {
    std::vector<int> left_coords;
    std::vector<int> right_coords;
    Code left;
    Code right;
};

struct ReducibilityCertificate {
    /// unknown: empty input, repeated words, or more than 20 coordinate components.
    enum class Kind { irreducible, factorization, unknown };
    Kind kind = Kind::unknown;
    /// Components of the coordinate graph (i ~ j when two words differ exactly in {i,j}).
    std::vector<std::vector<int>> coordinate_components;
    std::optional<Factorization> factorization;
};

const char *to_string(ReducibilityCertificate::Kind k);

ReducibilityCertificate reducibility_certificate(const Code &t);

/// Projection of every word onto the listed coordinates, in that order.
Code project(const Code &c, std::span<const int> coords);

/// K_k(i) = sum_j (-1)^j C(i,j) C(n-i,k-j), indexed [k][i].
std::vector<std::vector<Integer>> krawtchouk_table(int n);

struct DistanceData {
    int n = 0;
    std::size_t size = 0;
    /// Average distance distribution over codewords.
    std::vector<Rational> B;
    /// Weight distribution of C + x, when x was given.
    std::optional<std::vector<Integer>> A_x;
    /// MacWilliams transform: |C| B'_k = sum_i B_i K_k(i).
    std::vector<Rational> B_dual;
    std::vector<std::vector<Integer>> K;
};

DistanceData distance_data(const Code &c, const std::optional<Word> &x = std::nullopt);

/// |C| B'_k = sum_i B_i K_k(i).
std::vector<Rational> macwilliams_transform(std::span<const Rational> b, std::size_t code_size);
/// 2^n B_k = |C| sum_i B'_i K_k(i).
std::vector<Rational> inverse_macwilliams_transform(std::span<const Rational> b_dual, std::size_t code_size);

/// Weight distribution of C + x.
std::vector<Integer> weight_distribution(const Code &c, const Word &x);

/// Per coordinate, as many words carry 0 as carry 1.
bool oa_strength1_check(const Code &t);

/// Exact average distance from v to the words of T.
Rational average_distance(const Code &t, const Word &v);

/// min over x in T of max over y in T of d(x,y).
int inner_radius(const Code &t);

struct PairProfile {
    int n = 0;
    std::size_t W = 0;
    /// Indexed by weight i = 0..n. Pairs are ordered (u,v) with d(u,v)=2,
    /// wt(u)=i and wt(v)=i-2 (minus), i (star) or i+2 (plus).
    std::vector<std::size_t> W_i, W_minus, W_star, W_plus;

    /// 2W_i^- + W_i^* = iW_i, W_i^* + 2W_i^+ = (n-i)W_i, W_i^- = W_{i-2}^+.
    bool satisfies_relations() const;
};

/// T must be an extended unitrade containing the all-zero word.
PairProfile pair_profile(const Code &t);

}  // namespace hampack
