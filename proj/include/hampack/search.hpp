#pragma once

// Canonical forms under the isometry group of H(n,2), isomorph-free
// classification of extended unitrades, and exhaustive extremal searches.

#include "hampack/core.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hampack {

/// Canonical representative of T under coordinate permutations and
/// translations. The result contains the zero word, depends only on the
/// orbit of T, and is the least image among the leaves of a refinement tree.
Code canonical_form(const Code &t);

/// Throws SpaceMismatch on different lengths.
bool are_equivalent(const Code &a, const Code &b);

struct ClassFlags {
    bool bipartite = false;
    bool antipodal = false;
    bool constant_weight_translate = false;
    bool irreducible = false;

    friend bool operator==(const ClassFlags &, const ClassFlags &) = default;
};

/// Flags computed from scratch with the analysis module.
ClassFlags compute_flags(const Code &t);

/// Some translate of T has all its words of one weight.
bool has_constant_weight_translate(const Code &t);

struct EquivalenceClass {
    Code representative;
    std::size_t cardinality = 0;
    ClassFlags flags;
};

struct SearchConfig {
    int n = 6;
    bool nonbipartite_only = false;
    bool antipodal_only = false;
    /// 0 means unlimited.
    std::size_t max_cardinality = 0;
    unsigned threads = 1;
    /// Progress file; completed subtrees are skipped on restart.
    std::string checkpoint_path;
    /// Branching depth at which the tree is split into independent tasks.
    int task_depth = 2;
};

struct SearchStats {
    std::size_t tasks = 0;
    std::size_t tasks_resumed = 0;
    std::uint64_t nodes = 0;
    std::uint64_t solutions = 0;
};

/// All primary (connected) nonempty extended 1-perfect unitrades of length
/// n, one per equivalence class, sorted by (cardinality, representative).
/// Throws std::invalid_argument for unsupported n, FormatError for a
/// checkpoint that does not match the configuration.
std::vector<EquivalenceClass> classify_extended_unitrades(const SearchConfig &cfg, SearchStats *stats = nullptr);

/// Minimum size of a nonempty extended unitrade of even length n <= 8, by
/// exhaustive branch and bound.
std::size_t min_extended_unitrade_size(int n);

struct PackingSearchResult {
    std::size_t size = 0;
    /// A packing of that size.
    Code witness;
    std::uint64_t nodes = 0;
    /// Upper bound used to stop early, when it was reached.
    std::optional<std::string> stopped_at_bound;
};

struct PackingSearchOptions {
    /// Stop as soon as a packing meets the sphere-packing or (binary) LP bound.
    bool stop_at_bound = true;
    /// Allow repeated words (multiplicity up to lambda).
    bool multisets = true;
};

/// Exact maximum size of a lambda-fold r-packing in H(n,q) by branch and bound.
PackingSearchResult max_packing_size(SpaceParams space, int lambda, int r = 1, PackingSearchOptions opt = {});

/// max_packing_size(H(n,2), 2, 1) for n <= 7.
std::size_t max_twofold_packing_size(int n);

}  // namespace hampack
