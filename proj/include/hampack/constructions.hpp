#pragma once

// Explicit packings and unitrades, including the three cardinality-96
// extended unitrades of length 10 and their completely regular codes.

#include "hampack/core.hpp"
#include "hampack/linalg.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hampack {

/// Zero digit-sum words: q^{n-1} words at minimum distance 2.
Code mds_code(int n, int q);

/// Length-(q+1) Hamming code over the prime field GF(q), as the kernel of a
/// 2-row check matrix with pairwise independent columns.
Code hamming_code_q(int q);

/// Union of lambda cosets of hamming_code_q(q). Cosets are named by their
/// syndrome (s0, s1); by default the first lambda syndromes in lexicographic order.
Code hamming_coset_union(int q, int lambda, const std::vector<std::pair<int, int>> &syndromes = {});

/// Irreducible non-bipartite extended unitrade of even length n >= 6.
Code l_star(int n);

/// {(u|v)} for extended unitrades U and V.
Code concatenate(const Code &u, const Code &v);

/// Appends the parity-check bit.
Code extend_parity(const Code &c);
/// Deletes the last coordinate.
Code puncture_last(const Code &c);
/// Keeps words with `symbol` at `coord` and deletes that coordinate.
Code shorten(const Code &c, int coord, int symbol);

/// {(x|x)} for x of length n/2.
Code diagonal_unitrade(int n);

/// Matrices, representatives and generators describing the three
/// cardinality-96 unitrades.
struct EmbeddedData {
    BinaryMatrix gen1, check1;
    MixedMatrix gen2, check2, gen3, check3;
    std::vector<Word> coset_reps_k1;
    std::vector<MixedWord> coset_reps_k2;
    BinaryMatrix display_span;
    std::vector<Word> display_translates;
    std::vector<PropelinearMap> xi;
    std::vector<Word> orbit_seeds;
};

const EmbeddedData &embedded_data();

/// Consistency checks on the embedded matrices; returns the failed checks.
std::vector<std::string> embedded_data_self_check();

struct Packing96 {
    std::string name;
    /// Completely regular code with intersection array (10,9,2;1,6,10).
    Code c0;
    /// Extended unitrade of cardinality 96 inside the distance-3 cell of c0.
    Code c4;
};

/// span(gen1) and the union of six cosets of the span of its last four rows.
Packing96 packing96_linear();
/// Gray images of the Z2Z4-linear code generated by gen3 and of six cosets of
/// the module generated by its last two rows.
Packing96 packing96_z2z4();
/// Orbits under the propelinear groups <xi0,xi1,xi2> and <xi1,xi2>.
Packing96 packing96_propelinear();

/// Gray image of the Z2Z4 span of check2, used as a generator matrix.
Code c0_from_check2();

/// The span-plus-six-translates unitrade from the classification listing.
Code classified_c4_display();

}  // namespace hampack
