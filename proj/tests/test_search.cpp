#include "hampack/analysis.hpp"
#include "hampack/bounds.hpp"
#include "hampack/constructions.hpp"
#include "hampack/linalg.hpp"
#include "hampack/search.hpp"
#include "oracles.hpp"
#include "support.hpp"

#include <doctest.h>

#include <filesystem>
#include <map>
#include <set>
#include <unistd.h>
#include <fstream>

using namespace hampack;

namespace {

Code random_isometry(std::mt19937_64 &rng, const Code &t)
{
    auto perm = random_permutation(rng, t.length());
    Word v = random_word(rng, t.space());
    std::vector<Word> out;
    for (const auto &w : t)
        out.push_back(add(permute(w, perm), v));
    return Code(t.space(), out);
}

std::vector<std::vector<Word>> reps(const std::vector<EquivalenceClass> &cls)
{
    std::vector<std::vector<Word>> out;
    for (const auto &c : cls)
        out.push_back(c.representative.words());
    return out;
}

std::filesystem::path temp_file(const std::string &name)
{
    auto p = std::filesystem::temp_directory_path() / ("hampack_test_" + std::to_string(::getpid()) + "_" + name);
    std::filesystem::remove(p);
    return p;
}

}  // namespace

TEST_CASE("canonical form is idempotent and invariant under isometries")
{
    std::mt19937_64 rng(41);
    std::vector<Code> samples{l_star(6), l_star(8), diagonal_unitrade(6), concatenate(l_star(6), bcode(2, {"10", "01"})),
                              packing96_linear().c4, packing96_linear().c0, bcode(5, {"00000", "11000", "10100"})};
    for (const auto &t : samples) {
        Code c = canonical_form(t);
        CHECK(c.size() == t.size());
        CHECK(c.contains(Word(t.space())));
        CHECK(canonical_form(c) == c);
        for (int k = 0; k < 4; ++k)
            CHECK(canonical_form(random_isometry(rng, t)) == c);
    }
}

TEST_CASE("canonical form separates small inequivalent sets")
{
    // All 3-subsets of H(4,2) fall into orbits that a brute-force invariant splits:
    // the sorted triple of pairwise distances determines the orbit here.
    std::map<std::vector<int>, Code> seen;
    for (unsigned a = 0; a < 16; ++a)
        for (unsigned b = a + 1; b < 16; ++b)
            for (unsigned c = b + 1; c < 16; ++c) {
                Code t(SpaceParams(4, 2), {Word::from_bits(4, a), Word::from_bits(4, b), Word::from_bits(4, c)});
                std::vector<int> d{hamming_distance(t[0], t[1]), hamming_distance(t[0], t[2]),
                                   hamming_distance(t[1], t[2])};
                std::sort(d.begin(), d.end());
                Code canon = canonical_form(t);
                auto [it, fresh] = seen.emplace(d, canon);
                CHECK(it->second == canon);
            }
    std::set<std::vector<Word>> distinct;
    for (const auto &[k, v] : seen)
        distinct.insert(v.words());
    CHECK(distinct.size() == seen.size());
}

TEST_CASE("equivalence tests")
{
    std::mt19937_64 rng(43);
    Code t = l_star(8);
    CHECK(are_equivalent(t, t.translate(bw("10110000"))));
    CHECK(are_equivalent(t, random_isometry(rng, t)));
    CHECK_FALSE(are_equivalent(l_star(8), concatenate(l_star(6), bcode(2, {"10", "01"}))));
    CHECK_THROWS_AS(are_equivalent(l_star(6), l_star(8)), SpaceMismatch);

    std::vector<Packing96> ps{packing96_linear(), packing96_z2z4(), packing96_propelinear()};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            CHECK_FALSE(are_equivalent(ps[i].c4, ps[j].c4));
            CHECK_FALSE(are_equivalent(ps[i].c0, ps[j].c0));
        }
    CHECK(are_equivalent(ps[1].c0, c0_from_check2()));

    Code display = classified_c4_display();
    CHECK(are_equivalent(display, ps[0].c4));
    CHECK_FALSE(are_equivalent(display, ps[1].c4));
    CHECK_FALSE(are_equivalent(display, ps[2].c4));
}

TEST_CASE("class flags")
{
    auto f = compute_flags(l_star(6));
    CHECK_FALSE(f.bipartite);
    CHECK_FALSE(f.antipodal);
    CHECK(f.constant_weight_translate);
    CHECK(f.irreducible);
    auto g = compute_flags(diagonal_unitrade(6));
    CHECK(g.bipartite);
    CHECK(g.antipodal);
    CHECK_FALSE(g.irreducible);
    // Words at odd distance never share a weight after translation.
    CHECK_FALSE(has_constant_weight_translate(bcode(4, {"0000", "1000"})));
    CHECK(has_constant_weight_translate(bcode(4, {"0000", "1100", "1010", "1111"})));
}

TEST_CASE("classification at length 6")
{
    SearchConfig cfg;
    cfg.n = 6;
    cfg.nonbipartite_only = true;
    auto cls = classify_extended_unitrades(cfg);
    REQUIRE(cls.size() == 1);
    CHECK(cls[0].cardinality == 10);
    CHECK(cls[0].representative == canonical_form(l_star(6)));
    CHECK(cls[0].flags == compute_flags(cls[0].representative));

    cfg.nonbipartite_only = false;
    auto all = classify_extended_unitrades(cfg);
    CHECK(all.size() == 2);
    for (const auto &c : all)
        CHECK(is_extended_unitrade(c.representative).ok);
}

TEST_CASE("classification at length 8")
{
    SearchConfig cfg;
    cfg.n = 8;
    cfg.nonbipartite_only = true;
    auto cls = classify_extended_unitrades(cfg);
    REQUIRE(cls.size() == 2);
    CHECK(cls[0].cardinality == 20);
    CHECK(cls[1].cardinality == 24);
    CHECK(are_equivalent(cls[0].representative, concatenate(l_star(6), bcode(2, {"10", "01"}))));
    CHECK(are_equivalent(cls[1].representative, l_star(8)));
    CHECK_FALSE(cls[0].flags.irreducible);
    CHECK(cls[1].flags.irreducible);

    cfg.nonbipartite_only = false;
    auto all = classify_extended_unitrades(cfg);
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto &c = all[i];
        CHECK(is_extended_unitrade(c.representative).ok);
        CHECK(primary_components(c.representative, true).size() == 1);
        CHECK(c.flags == compute_flags(c.representative));
        CHECK(oa_strength1_check(c.representative));
        if (c.flags.bipartite)
            CHECK(c.flags.antipodal);
        for (std::size_t j = i + 1; j < all.size(); ++j)
            CHECK_FALSE(are_equivalent(c.representative, all[j].representative));
    }
}

TEST_CASE("classification output does not depend on thread count or task split")
{
    SearchConfig cfg;
    cfg.n = 8;
    auto one = classify_extended_unitrades(cfg);
    cfg.threads = 3;
    cfg.task_depth = 3;
    auto three = classify_extended_unitrades(cfg);
    CHECK(reps(one) == reps(three));
    cfg.task_depth = 0;
    cfg.threads = 1;
    CHECK(reps(classify_extended_unitrades(cfg)) == reps(one));
}

TEST_CASE("classification resumes from a checkpoint")
{
    auto path = temp_file("ckpt.txt");
    SearchConfig cfg;
    cfg.n = 8;
    cfg.nonbipartite_only = true;
    cfg.checkpoint_path = path.string();
    SearchStats first;
    auto a = classify_extended_unitrades(cfg, &first);
    CHECK(first.tasks_resumed == 0);
    SearchStats second;
    auto b = classify_extended_unitrades(cfg, &second);
    CHECK(second.tasks_resumed == second.tasks);
    CHECK(second.nodes == 0);
    CHECK(reps(a) == reps(b));

    SearchConfig other = cfg;
    other.n = 6;
    CHECK_THROWS_AS(classify_extended_unitrades(other), FormatError);

    {
        std::ofstream bad(path);
        bad << "garbage\n";
    }
    CHECK_THROWS_AS(classify_extended_unitrades(cfg), FormatError);
    std::filesystem::remove(path);
}

TEST_CASE("classification limits")
{
    SearchConfig cfg;
    cfg.n = 8;
    cfg.max_cardinality = 16;
    for (const auto &c : classify_extended_unitrades(cfg))
        CHECK(c.cardinality <= 16);
    cfg.n = 7;
    CHECK_THROWS_AS(classify_extended_unitrades(cfg), std::invalid_argument);
    cfg.n = 14;
    CHECK_THROWS_AS(classify_extended_unitrades(cfg), std::invalid_argument);
}

TEST_CASE("minimum extended unitrade size")
{
    CHECK(min_extended_unitrade_size(4) == 4);
    CHECK(oracle::min_extended_unitrade_bruteforce(4) == 4);
    CHECK(min_extended_unitrade_size(6) == 8);
    CHECK(min_extended_unitrade_size(8) == 16);
    for (int n : {4, 6, 8})
        CHECK(Integer(min_extended_unitrade_size(n)) == unitrade_min_cardinality(n, true, false).value);
}

TEST_CASE("maximum packings by search agree with exhaustive enumeration")
{
    for (int n = 1; n <= 4; ++n) {
        PackingSearchOptions full;
        full.stop_at_bound = false;
        auto r = max_packing_size(SpaceParams(n, 2), 2, 1, full);
        CHECK(r.size == oracle::max_packing_exhaustive(n, 2, 2, 1));
        CHECK(r.size == max_twofold_packing_size(n));
        CHECK(r.witness.size() == r.size);
        CHECK(verify_packing(r.witness, 2, 1).ok());
    }
    CHECK(max_twofold_packing_size(3) == 4);

    PackingSearchOptions full;
    full.stop_at_bound = false;
    for (int q : {3, 4}) {
        auto r = max_packing_size(SpaceParams(2, q), 2, 1, full);
        CHECK(r.size == oracle::max_packing_exhaustive(2, q, 2, 1));
    }
    CHECK(max_packing_size(SpaceParams(2, 4), 2, 1, full).size == 4);
    CHECK(max_packing_size(SpaceParams(2, 3), 2, 1).size == 3);
    CHECK(max_packing_size(SpaceParams(3, 3), 1, 1).size == oracle::max_packing_exhaustive(3, 3, 1, 1));
}

TEST_CASE("maximum two-fold packings up to length 7")
{
    std::vector<std::size_t> expected{2, 2, 4, 5, 10, 16, 32};
    for (int n = 1; n <= 7; ++n) {
        INFO(n);
        auto r = max_packing_size(SpaceParams(n, 2), 2, 1);
        CHECK(r.size == expected[static_cast<std::size_t>(n - 1)]);
        CHECK(verify_packing(r.witness, 2, 1).ok());
        if (n >= 2)
            CHECK(Integer(r.size) <= lp_bound(n, 2).value);
    }
    CHECK(Integer(max_twofold_packing_size(7)) == lp_bound(7, 2).value);
    CHECK(Integer(max_twofold_packing_size(6)) == lp_bound(6, 2).value);
}
