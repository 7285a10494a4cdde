#include "hampack/cli.hpp"

#include "hampack/analysis.hpp"
#include "hampack/bounds.hpp"
#include "hampack/constructions.hpp"
#include "hampack/partitions.hpp"
#include "hampack/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace hampack::cli {

namespace {

using nlohmann::json;

Code load(const std::string &path, std::istream &in)
{
    if (path.empty() || path == "-")
        return read_code(in);
    return read_code_file(path);
}

void save(const std::string &path, const Code &c, std::ostream &out)
{
    if (path.empty() || path == "-")
        write_code(out, c);
    else
        write_code_file(path, c);
}

json words_json(const Code &c)
{
    json a = json::array();
    for (const auto &w : c)
        a.push_back(w.str());
    return a;
}

json rationals_json(const std::vector<Rational> &v)
{
    json a = json::array();
    for (const auto &r : v)
        a.push_back(to_string(r));
    return a;
}

json bound_json(const BoundResult &b)
{
    return json{{"formula_id", b.formula_id},
                {"value", b.value.str()},
                {"exact", to_string(b.exact)},
                {"vacuous", b.vacuous},
                {"assumptions", b.assumptions}};
}

std::string parity_name(const Code &c)
{
    if (c.empty() || !c.space().binary())
        return "n/a";
    const int p = c[0].parity();
    bool same = std::all_of(c.begin(), c.end(), [&](const Word &w) { return w.parity() == p; });
    return same ? (p ? "odd" : "even") : "mixed";
}

struct Options {
    bool json = false;
    unsigned threads = 1;

    // verify
    std::string input;
    int lambda = 1;
    int r = 1;
    std::string mode = "auto";

    // bound
    int n = 0;
    int q = 2;
    bool even = false;

    // construct
    std::string kind;
    std::string part = "c4";
    bool punctured = false;
    std::vector<std::string> inputs;
    std::string output;

    // classify
    bool nonbipartite = false;
    bool antipodal = false;
    std::size_t max_size = 0;
    std::string checkpoint;
    int task_depth = 2;

    // partition
    std::string partition_kind;
    bool words = false;
};

int do_verify(const Options &o, std::istream &in, std::ostream &out)
{
    const Code c = load(o.input, in);
    ScanMode mode = o.mode == "full" ? ScanMode::full_space : o.mode == "balls" ? ScanMode::ball_union : ScanMode::automatic;
    const auto rep = verify_packing(c, o.lambda, o.r, mode, o.threads);
    if (o.json) {
        json j{{"size", rep.size},
               {"space", to_string(c.space())},
               {"lambda", rep.lambda},
               {"r", rep.r},
               {"max_coverage", rep.max_coverage},
               {"witness", rep.witness.str()},
               {"duplicates", json::array()},
               {"full_space_scan", rep.full_space_scan},
               {"ok", rep.ok()}};
        for (const auto &w : rep.duplicate_words)
            j["duplicates"].push_back(w.str());
        out << j.dump(2) << '\n';
    } else {
        out << "space " << to_string(c.space()) << "\n";
        out << "size " << rep.size << "\n";
        out << "max_coverage " << rep.max_coverage;
        if (rep.size)
            out << " at " << rep.witness.str();
        out << "\n";
        if (!rep.duplicate_words.empty())
            out << "repeated words " << rep.duplicate_words.size() << "\n";
        if (rep.ok())
            out << "ok: " << rep.lambda << "-fold " << rep.r << "-packing\n";
        else
            out << "FAIL: the radius-" << rep.r << " ball around " << rep.witness.str() << " holds "
                << rep.max_coverage << " > " << rep.lambda << " words\n";
    }
    return rep.ok() ? 0 : 1;
}

int do_analyze(const Options &o, std::istream &in, std::ostream &out)
{
    const Code c = load(o.input, in);
    json j{{"space", to_string(c.space())}, {"size", c.size()}, {"distinct", c.distinct().size()}};
    auto u = is_unitrade(c);
    j["unitrade"] = u.ok;
    if (!u.ok && u.witness)
        j["unitrade_witness"] = {{"center", u.witness->str()}, {"count", u.witness_count}};
    const std::string parity = parity_name(c);
    j["parity"] = parity;
    bool ext = false;
    if (parity == "even" || parity == "odd") {
        auto e = is_extended_unitrade(c);
        ext = e.ok;
        j["extended_unitrade"] = e.ok;
        if (!e.ok && e.witness)
            j["extended_unitrade_witness"] = {{"center", e.witness->str()}, {"count", e.witness_count}};
    }
    if (c.space().binary() && (u.ok || ext)) {
        auto b = is_bipartite_unitrade(c, ext);
        j["bipartite"] = b.bipartite();
        if (!b.bipartite()) {
            json cyc = json::array();
            for (const auto &w : b.odd_cycle)
                cyc.push_back(w.str());
            j["odd_cycle"] = cyc;
        }
    }
    if (c.space().binary())
        j["antipodal"] = is_antipodal(c);
    if (ext) {
        auto cert = reducibility_certificate(c);
        j["reducibility"] = to_string(cert.kind);
        j["coordinate_components"] = cert.coordinate_components;
        j["oa_strength1"] = oa_strength1_check(c);
        j["inner_radius"] = inner_radius(c);
        auto pp = pair_profile(c.translate(c[0]));
        j["pair_profile_relations"] = pp.satisfies_relations();
    }
    if (!c.empty()) {
        auto d = distance_data(c);
        j["distance_distribution"] = rationals_json(d.B);
        j["dual_distribution"] = rationals_json(d.B_dual);
    }
    if (o.json) {
        out << j.dump(2) << '\n';
    } else {
        for (auto it = j.begin(); it != j.end(); ++it)
            out << it.key() << ' ' << it.value().dump() << '\n';
    }
    return 0;
}

int do_bound(const Options &o, std::ostream &out)
{
    auto t = applicable_bounds(o.n, o.q, o.lambda, o.r, o.even);
    if (o.json) {
        json j{{"n", t.n}, {"q", t.q}, {"lambda", t.lambda}, {"r", t.r}, {"even_weight", t.even_weight},
               {"conjecture_applies", t.conjecture_applies}, {"upper", json::array()}};
        for (const auto &b : t.upper)
            j["upper"].push_back(bound_json(b));
        out << j.dump(2) << '\n';
        return 0;
    }
    out << "H(" << t.n << "," << t.q << "), lambda = " << t.lambda << ", r = " << t.r
        << (t.even_weight ? ", even weight" : "") << "\n";
    for (const auto &b : t.upper) {
        out << b.value << "\t" << b.formula_id << "  [exact " << to_string(b.exact) << "]";
        if (b.vacuous)
            out << " (vacuous)";
        for (const auto &a : b.assumptions)
            out << "; " << a;
        out << "\n";
    }
    if (t.conjecture_applies)
        out << "note: lambda = n and n <= q < 2n, where the maximum is conjectured to be q^(n-1)\n";
    return 0;
}

Code pick_part(const Packing96 &p, const Options &o)
{
    Code c = o.part == "c0" ? p.c0 : p.c4;
    return o.punctured ? puncture_last(c) : c;
}

int do_construct(const Options &o, std::istream &in, std::ostream &out)
{
    Code c;
    const std::string &k = o.kind;
    if (k == "mds")
        c = mds_code(o.n, o.q);
    else if (k == "hamming")
        c = hamming_coset_union(o.q, o.lambda);
    else if (k == "lstar")
        c = l_star(o.n);
    else if (k == "diag")
        c = diagonal_unitrade(o.n);
    else if (k == "p96a")
        c = pick_part(packing96_linear(), o);
    else if (k == "p96b")
        c = pick_part(packing96_z2z4(), o);
    else if (k == "p96c")
        c = pick_part(packing96_propelinear(), o);
    else if (k == "display")
        c = classified_c4_display();
    else if (k == "concat") {
        if (o.inputs.size() != 2)
            throw CLI::ValidationError("concat needs two input files");
        c = concatenate(load(o.inputs[0], in), load(o.inputs[1], in));
    } else
        throw CLI::ValidationError("unknown construction '" + k + "'");
    save(o.output, c, out);
    return 0;
}

std::string flags_text(const ClassFlags &f)
{
    std::string s;
    s += f.bipartite ? "bipartite" : "non-bipartite";
    if (f.antipodal)
        s += ", antipodal";
    if (f.constant_weight_translate)
        s += ", constant-weight translate";
    s += f.irreducible ? ", irreducible" : ", reducible";
    return s;
}

int do_classify(const Options &o, std::ostream &out)
{
    SearchConfig cfg;
    cfg.n = o.n;
    cfg.nonbipartite_only = o.nonbipartite;
    cfg.antipodal_only = o.antipodal;
    cfg.max_cardinality = o.max_size;
    cfg.threads = o.threads;
    cfg.checkpoint_path = o.checkpoint;
    cfg.task_depth = o.task_depth;
    SearchStats stats;
    auto classes = classify_extended_unitrades(cfg, &stats);
    json manifest{{"n", o.n},
                  {"nonbipartite_only", o.nonbipartite},
                  {"antipodal_only", o.antipodal},
                  {"max_cardinality", o.max_size},
                  {"count", classes.size()},
                  {"constant_weight_translate_count", 0},
                  {"classes", json::array()},
                  {"stats", {{"tasks", stats.tasks}, {"tasks_resumed", stats.tasks_resumed}, {"nodes", stats.nodes},
                             {"solutions", stats.solutions}}}};
    std::size_t cw = 0;
    if (!o.output.empty())
        std::filesystem::create_directories(o.output);
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const auto &ec = classes[i];
        std::ostringstream name;
        name << "class_" << std::setw(3) << std::setfill('0') << i + 1 << ".txt";
        if (!o.output.empty())
            write_code_file((std::filesystem::path(o.output) / name.str()).string(), ec.representative);
        cw += ec.flags.constant_weight_translate ? 1 : 0;
        manifest["classes"].push_back({{"file", name.str()},
                                       {"cardinality", ec.cardinality},
                                       {"bipartite", ec.flags.bipartite},
                                       {"antipodal", ec.flags.antipodal},
                                       {"constant_weight_translate", ec.flags.constant_weight_translate},
                                       {"irreducible", ec.flags.irreducible}});
    }
    manifest["constant_weight_translate_count"] = cw;
    if (!o.output.empty()) {
        std::ofstream m(std::filesystem::path(o.output) / "manifest.json");
        if (!m)
            throw std::runtime_error("cannot write manifest in " + o.output);
        m << manifest.dump(2) << '\n';
    }
    if (o.json) {
        out << manifest.dump(2) << '\n';
        return 0;
    }
    out << "n = " << o.n << ": " << classes.size() << " classes (" << cw << " with constant-weight translates)\n";
    for (std::size_t i = 0; i < classes.size(); ++i)
        out << "  " << i + 1 << ": |T| = " << classes[i].cardinality << ", " << flags_text(classes[i].flags) << "\n";
    return 0;
}

json partition_json(const Partition &p, bool with_words)
{
    json j{{"space", to_string(p.space)}, {"cells", json::array()}, {"equitable", p.matrix.has_value()}};
    for (const auto &c : p.cells) {
        json cell{{"size", c.size()}};
        if (with_words)
            cell["words"] = words_json(c);
        j["cells"].push_back(cell);
    }
    if (p.matrix) {
        j["matrix"] = p.matrix->s;
        j["tridiagonal"] = p.matrix->tridiagonal();
        if (auto a = p.matrix->intersection_array())
            j["intersection_array"] = a->str();
    }
    return j;
}

int do_partition(const Options &o, std::istream &in, std::ostream &out)
{
    if (o.partition_kind == "distance") {
        if (o.inputs.size() != 1)
            throw CLI::ValidationError("partition distance needs one code file");
        out << partition_json(distance_partition(load(o.inputs[0], in)), o.words).dump(2) << '\n';
        return 0;
    }
    if (o.partition_kind == "split") {
        if (o.inputs.size() != 2)
            throw CLI::ValidationError("partition split needs the files of C0 and C4");
        auto p = split_distance3_cell(load(o.inputs[0], in), load(o.inputs[1], in));
        auto j = partition_json(p, o.words);
        j["matches_c01234"] = p.matrix && *p.matrix == c01234_matrix();
        out << j.dump(2) << '\n';
        return 0;
    }
    if (o.partition_kind == "unitrade") {
        if (o.inputs.size() != 1)
            throw CLI::ValidationError("partition unitrade needs one code file");
        auto r = partition_from_unitrade(load(o.inputs[0], in));
        if (!r) {
            out << json{{"equitable", false}, {"matches_c01234", false}}.dump(2) << '\n';
            return 1;
        }
        auto j = partition_json(r->partition, o.words);
        j["matches_c01234"] = true;
        j["translation"] = r->translation.str();
        out << j.dump(2) << '\n';
        return 0;
    }
    throw CLI::ValidationError("partition kind must be distance, split or unitrade");
}

}  // namespace

int run(const std::vector<std::string> &args, std::istream &in, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Packings and unitrades in Hamming graphs"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Machine-readable output");

    auto *verify = app.add_subcommand("verify", "Check that a code file is a lambda-fold r-packing");
    verify->add_option("file", o.input, "Code file ('-' or absent: stdin)");
    verify->add_option("--lambda", o.lambda)->check(CLI::PositiveNumber);
    verify->add_option("--r", o.r)->check(CLI::NonNegativeNumber);
    verify->add_option("--mode", o.mode)->check(CLI::IsMember({"auto", "full", "balls"}));
    verify->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    verify->add_flag("--json", o.json);

    auto *analyze = app.add_subcommand("analyze", "Unitrade predicates and distance distributions");
    analyze->add_option("file", o.input);
    analyze->add_flag("--json", o.json);

    auto *bound = app.add_subcommand("bound", "Upper bounds on packing sizes");
    bound->add_option("--n", o.n)->required()->check(CLI::Range(1, 64));
    bound->add_option("--q", o.q)->check(CLI::Range(2, 10));
    bound->add_option("--lambda", o.lambda)->check(CLI::PositiveNumber);
    bound->add_option("--r", o.r)->check(CLI::NonNegativeNumber);
    bound->add_flag("--even", o.even, "Restrict to even-weight words");
    bound->add_flag("--json", o.json);

    auto *construct = app.add_subcommand("construct", "Write a constructed code");
    construct->add_option("kind", o.kind, "mds|hamming|lstar|diag|p96a|p96b|p96c|display|concat")->required();
    construct->add_option("inputs", o.inputs, "Factor files for concat");
    construct->add_option("--n", o.n);
    construct->add_option("--q", o.q);
    construct->add_option("--lambda", o.lambda);
    construct->add_option("--part", o.part)->check(CLI::IsMember({"c0", "c4"}));
    construct->add_flag("--punctured", o.punctured, "Delete the last coordinate");
    construct->add_option("--out", o.output);

    auto *classify = app.add_subcommand("classify", "Classify extended unitrades");
    classify->add_option("--n", o.n)->required();
    classify->add_flag("--nonbipartite", o.nonbipartite);
    classify->add_flag("--antipodal", o.antipodal);
    classify->add_option("--max-size", o.max_size);
    classify->add_option("--threads", o.threads)->check(CLI::PositiveNumber);
    classify->add_option("--checkpoint", o.checkpoint);
    classify->add_option("--task-depth", o.task_depth)->check(CLI::NonNegativeNumber);
    classify->add_option("--out", o.output, "Directory for class files and manifest.json");
    classify->add_flag("--json", o.json);

    auto *partition = app.add_subcommand("partition", "Equitable partitions (JSON report)");
    partition->add_option("kind", o.partition_kind, "distance|split|unitrade")->required();
    partition->add_option("inputs", o.inputs);
    partition->add_flag("--words", o.words, "Include the words of each cell");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*verify)
            return do_verify(o, in, out);
        if (*analyze)
            return do_analyze(o, in, out);
        if (*bound)
            return do_bound(o, out);
        if (*construct)
            return do_construct(o, in, out);
        if (*classify)
            return do_classify(o, out);
        if (*partition)
            return do_partition(o, in, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

int main(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cin, std::cout, std::cerr);
}

}  // namespace hampack::cli
