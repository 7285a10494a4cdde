#pragma once

// Closed-form upper and lower bounds for lambda-fold packings, in exact arithmetic.

#include "hampack/exact.hpp"

#include <string>
#include <utility>
#include <vector>

namespace hampack {

struct BoundResult {
    /// Floor of `exact`, applied once at the end.
    Integer value = 0;
    Rational exact = 0;
    /// Which formula produced the value, e.g. "lp_bound(b): n = 1 mod 4".
    std::string formula_id;
    std::vector<std::string> assumptions;
    /// The inequality carries no information (e.g. alpha^2 > r*lambda).
    bool vacuous = false;
};

/// floor(lambda q^n / |B_r|).
BoundResult sphere_packing_bound(int n, int q, int lambda, int r);

struct SpectrumBoundInput {
    /// Degree of the regular graph.
    Integer degree = 0;
    /// Lower bound on |theta| over all eigenvalues.
    Rational alpha = 0;
    int lambda = 1;
    Integer num_vertices = 0;
};

/// |C|/|V| <= (r lambda - alpha^2) / (r^2 - alpha^2). Throws when alpha >= r.
Rational regular_graph_bound(const SpectrumBoundInput &in);
/// r lambda < alpha^2: the density bound is negative and says nothing.
bool regular_graph_bound_vacuous(const SpectrumBoundInput &in);

/// The regular-graph bound applied to H(n,q): degree n(q-1), eigenvalues -n+qi.
BoundResult hamming_eigenvalue_bound(int n, int q, int lambda);

struct MdsInterval {
    Integer lower;
    Rational upper;
};

/// q^{n-1} <= max size of an n-fold 1-packing in H(n,q) <= q^n / (q - 1 + 1/n).
MdsInterval mds_interval(int n, int q);

/// Binary lambda-fold 1-packings of length n (n >= 2), by n mod 4.
BoundResult lp_bound(int n, int lambda);
/// Even-weight binary lambda-fold 1-packings of length n (n >= 3), by n mod 4.
BoundResult lp_bound_even(int n, int lambda);

/// Minimum size of a nonempty (extended) 1-perfect unitrade in H(n,2).
/// Extended requires even n, non-extended odd n. The bipartite minimum
/// coincides with the general one.
BoundResult unitrade_min_cardinality(int n, bool extended, bool bipartite);

struct ForcedProfile {
    int n = 0;
    int lambda = 1;
    char lp_case = '?';
    /// Distance index -> forced value of B_i (and of A_i(x) for every codeword x).
    std::vector<std::pair<int, Integer>> values;
    /// Whether the even-weight bound is an integer, i.e. can be met at all.
    bool bound_integral = false;
};

/// Distance values forced on an even-weight lambda-fold 1-packing meeting the
/// even-weight bound with equality (cases a-c). Throws for n = 0 mod 4.
ForcedProfile forced_distance_profile(int n, int lambda);

struct BoundTable {
    int n = 0, q = 2, lambda = 1, r = 1;
    bool even_weight = false;
    std::vector<BoundResult> upper;
    /// Set when q >= n and lambda = n: the open maximum-is-q^{n-1} question applies.
    bool conjecture_applies = false;
};

/// All bounds that apply to the parameters.
BoundTable applicable_bounds(int n, int q, int lambda, int r, bool even_weight);

}  // namespace hampack
