#include "hampack/search.hpp"

#include "hampack/analysis.hpp"
#include "hampack/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace hampack {

namespace {

using Bits = std::uint64_t;

// Backtracking state for extended unitrades inside the even-weight words of
// H(n,2): st[v] for even v, ball counters for odd u.
class UnitradeState {
public:
    enum : std::uint8_t { undecided = 0, in = 1, out = 2 };

    UnitradeState(int n, bool antipodal) : n_(n), antipodal_(antipodal), ones_((Bits{1} << n) - 1)
    {
        st_.assign(std::size_t{1} << n, undecided);
        cin_.assign(std::size_t{1} << n, 0);
        cund_.assign(std::size_t{1} << n, static_cast<std::uint8_t>(n));
    }

    std::size_t chosen() const { return members_.size(); }
    std::size_t trail_size() const { return trail_.size(); }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            Bits v = trail_.back();
            trail_.pop_back();
            const bool was_in = st_[v] == in;
            if (was_in)
                members_.pop_back();
            for (int i = 0; i < n_; ++i) {
                Bits u = v ^ (Bits{1} << i);
                ++cund_[u];
                if (was_in)
                    --cin_[u];
            }
            st_[v] = undecided;
        }
    }

    // Sets v and propagates to a fixed point; false on contradiction.
    bool assign(Bits v, std::uint8_t value)
    {
        balls_.clear();
        mirrors_.clear();
        return set(v, value) && propagate();
    }

    /// Odd word whose ball holds one chosen word and the fewest undecided
    /// ones; returns false when every ball holds 0 or 2.
    bool pick_ball(Bits &ball) const
    {
        int best = n_ + 1;
        for (Bits v : members_)
            for (int i = 0; i < n_; ++i) {
                Bits u = v ^ (Bits{1} << i);
                if (cin_[u] == 1 && cund_[u] < best) {
                    best = cund_[u];
                    ball = u;
                }
            }
        return best <= n_;
    }

    std::vector<Bits> undecided_in_ball(Bits u) const
    {
        std::vector<Bits> out;
        for (int i = 0; i < n_; ++i) {
            Bits v = u ^ (Bits{1} << i);
            if (st_[v] == undecided)
                out.push_back(v);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Bits> solution() const
    {
        std::vector<Bits> out = members_;
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    bool set(Bits v, std::uint8_t value)
    {
        if (st_[v] != undecided)
            return st_[v] == value;
        st_[v] = value;
        trail_.push_back(v);
        bool ok = true;
        if (value == in)
            members_.push_back(v);
        for (int i = 0; i < n_; ++i) {
            Bits u = v ^ (Bits{1} << i);
            --cund_[u];
            if (value == in && ++cin_[u] > 2)
                ok = false;
            balls_.push_back(u);
        }
        if (antipodal_)
            mirrors_.push_back(v);
        return ok;
    }

    bool propagate()
    {
        while (!balls_.empty() || !mirrors_.empty()) {
            if (!mirrors_.empty()) {
                Bits v = mirrors_.back();
                mirrors_.pop_back();
                if (!set(v ^ ones_, st_[v]))
                    return false;
                continue;
            }
            Bits u = balls_.back();
            balls_.pop_back();
            if (cin_[u] > 2)
                return false;
            if (cin_[u] == 2 && cund_[u] > 0) {
                for (int i = 0; i < n_; ++i) {
                    Bits v = u ^ (Bits{1} << i);
                    if (st_[v] == undecided && !set(v, out))
                        return false;
                }
            } else if (cin_[u] == 1) {
                if (cund_[u] == 0)
                    return false;
                if (cund_[u] == 1)
                    for (int i = 0; i < n_; ++i) {
                        Bits v = u ^ (Bits{1} << i);
                        if (st_[v] == undecided && !set(v, in))
                            return false;
                    }
            }
        }
        return true;
    }

    int n_;
    bool antipodal_;
    Bits ones_;
    std::vector<std::uint8_t> st_, cin_, cund_;
    std::vector<Bits> trail_;
    std::vector<Bits> members_;
    std::vector<Bits> balls_, mirrors_;
};

bool bipartite_bits(const std::vector<Bits> &t, int n)
{
    std::map<Bits, int> color;
    for (Bits s : t) {
        if (color.count(s))
            continue;
        color[s] = 0;
        std::vector<Bits> stack{s};
        while (!stack.empty()) {
            Bits v = stack.back();
            stack.pop_back();
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j) {
                    Bits w = v ^ (Bits{1} << i) ^ (Bits{1} << j);
                    if (!std::binary_search(t.begin(), t.end(), w))
                        continue;
                    auto it = color.find(w);
                    if (it == color.end()) {
                        color[w] = 1 - color[v];
                        stack.push_back(w);
                    } else if (it->second == color[v]) {
                        return false;
                    }
                }
        }
    }
    return true;
}

bool antipodal_bits(const std::vector<Bits> &t, int n)
{
    const Bits ones = (Bits{1} << n) - 1;
    return std::all_of(t.begin(), t.end(), [&](Bits v) { return std::binary_search(t.begin(), t.end(), v ^ ones); });
}

Code to_code(const std::vector<Bits> &bits, int n)
{
    std::vector<Word> w;
    for (Bits b : bits)
        w.push_back(Word::from_bits(n, b));
    return Code(SpaceParams(n, 2), std::move(w));
}

std::vector<Bits> to_bits(const Code &c)
{
    std::vector<Bits> out;
    for (const auto &w : c)
        out.push_back(w.bits());
    return out;
}

// Canonical representatives with search-time flags.
struct Found {
    std::vector<Bits> rep;
    bool bipartite = false;
    bool antipodal = false;
    friend bool operator<(const Found &a, const Found &b)
    {
        if (a.rep.size() != b.rep.size())
            return a.rep.size() < b.rep.size();
        return a.rep < b.rep;
    }
};

class Classifier {
public:
    explicit Classifier(const SearchConfig &cfg) : cfg_(cfg) {}

    // Zero, the matching {01,23,...} around it, and propagation.
    bool root(UnitradeState &s) const
    {
        if (!s.assign(0, UnitradeState::in))
            return false;
        for (int t = 0; t + 1 < cfg_.n; t += 2)
            if (!s.assign((Bits{3} << t), UnitradeState::in))
                return false;
        return true;
    }

    // Branch i at the chosen ball: its first i undecided words out, word i in.
    bool apply_branch(UnitradeState &s, const std::vector<Bits> &cands, std::size_t i) const
    {
        for (std::size_t k = 0; k < i; ++k)
            if (!s.assign(cands[k], UnitradeState::out))
                return false;
        return s.assign(cands[i], UnitradeState::in);
    }

    bool too_big(const UnitradeState &s) const { return cfg_.max_cardinality && s.chosen() > cfg_.max_cardinality; }

    // Decision prefixes of length task_depth (shorter where the tree ends early).
    void enumerate_tasks(UnitradeState &s, std::vector<int> &prefix, std::vector<std::vector<int>> &tasks) const
    {
        Bits ball = 0;
        if (static_cast<int>(prefix.size()) == cfg_.task_depth || !s.pick_ball(ball)) {
            tasks.push_back(prefix);
            return;
        }
        auto cands = s.undecided_in_ball(ball);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            auto mark = s.trail_size();
            if (apply_branch(s, cands, i) && !too_big(s)) {
                prefix.push_back(static_cast<int>(i));
                enumerate_tasks(s, prefix, tasks);
                prefix.pop_back();
            }
            s.undo(mark);
        }
    }

    void run_task(const std::vector<int> &decisions, std::set<Found> &out, SearchStats &stats) const
    {
        UnitradeState s(cfg_.n, cfg_.antipodal_only);
        if (!root(s))
            return;
        for (int d : decisions) {
            Bits ball = 0;
            if (!s.pick_ball(ball))
                return;
            auto cands = s.undecided_in_ball(ball);
            if (!apply_branch(s, cands, static_cast<std::size_t>(d)))
                return;
        }
        dfs(s, out, stats);
    }

private:
    void dfs(UnitradeState &s, std::set<Found> &out, SearchStats &stats) const
    {
        ++stats.nodes;
        if (too_big(s))
            return;
        Bits ball = 0;
        if (!s.pick_ball(ball)) {
            leaf(s, out, stats);
            return;
        }
        auto cands = s.undecided_in_ball(ball);
        for (std::size_t i = 0; i < cands.size(); ++i) {
            auto mark = s.trail_size();
            if (apply_branch(s, cands, i))
                dfs(s, out, stats);
            s.undo(mark);
        }
    }

    void leaf(const UnitradeState &s, std::set<Found> &out, SearchStats &stats) const
    {
        auto sol = s.solution();
        Found f;
        f.bipartite = bipartite_bits(sol, cfg_.n);
        if (cfg_.nonbipartite_only && f.bipartite)
            return;
        f.antipodal = antipodal_bits(sol, cfg_.n);
        if (cfg_.antipodal_only && !f.antipodal)
            return;
        ++stats.solutions;
        f.rep = to_bits(canonical_form(to_code(sol, cfg_.n)));
        out.insert(std::move(f));
    }

    const SearchConfig &cfg_;
};

std::string config_header(const SearchConfig &cfg, std::size_t ntasks)
{
    std::ostringstream os;
    os << "hampack-classify-checkpoint v1 n=" << cfg.n << " nonbipartite=" << cfg.nonbipartite_only
       << " antipodal=" << cfg.antipodal_only << " max=" << cfg.max_cardinality << " depth=" << cfg.task_depth
       << " tasks=" << ntasks;
    return os.str();
}

std::string encode(const Found &f)
{
    std::ostringstream os;
    os << "rep " << f.bipartite << ' ' << f.antipodal;
    for (Bits b : f.rep)
        os << ' ' << std::hex << b;
    return os.str();
}

Found decode(const std::string &line, const std::string &path)
{
    std::istringstream is(line);
    std::string tag;
    Found f;
    if (!(is >> tag >> f.bipartite >> f.antipodal) || tag != "rep")
        throw FormatError("corrupt checkpoint " + path + ": bad line '" + line + "'");
    std::string tok;
    while (is >> tok) {
        std::size_t used = 0;
        Bits b = 0;
        try {
            b = std::stoull(tok, &used, 16);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != tok.size())
            throw FormatError("corrupt checkpoint " + path + ": bad word '" + tok + "'");
        f.rep.push_back(b);
    }
    return f;
}

// Completed tasks and their classes; unterminated trailing records are dropped.
std::map<std::size_t, std::vector<Found>> load_checkpoint(const std::string &path, const std::string &header)
{
    std::map<std::size_t, std::vector<Found>> done;
    std::ifstream in(path);
    if (!in)
        return done;
    std::string line;
    if (!std::getline(in, line))
        return done;
    if (line != header)
        throw FormatError("checkpoint " + path + " was written for a different configuration: " + line);
    std::optional<std::size_t> task;
    std::vector<Found> pending;
    while (std::getline(in, line)) {
        if (line.rfind("task ", 0) == 0) {
            try {
                task = std::stoull(line.substr(5));
            } catch (const std::exception &) {
                throw FormatError("corrupt checkpoint " + path + ": bad line '" + line + "'");
            }
            pending.clear();
        } else if (line == "end") {
            if (!task)
                throw FormatError("corrupt checkpoint " + path + ": 'end' without 'task'");
            done[*task] = pending;
            task.reset();
        } else if (!line.empty()) {
            if (!task)
                throw FormatError("corrupt checkpoint " + path + ": record outside a task");
            pending.push_back(decode(line, path));
        }
    }
    return done;
}

}  // namespace

std::vector<EquivalenceClass> classify_extended_unitrades(const SearchConfig &cfg, SearchStats *stats_out)
{
    if (cfg.n < 4 || cfg.n > 12 || cfg.n % 2)
        throw std::invalid_argument("classify_extended_unitrades supports even n in [4,12], got "
                                    + std::to_string(cfg.n));
    if (cfg.task_depth < 0)
        throw std::invalid_argument("task_depth must be nonnegative");
    Classifier cl(cfg);
    std::vector<std::vector<int>> tasks;
    {
        UnitradeState s(cfg.n, cfg.antipodal_only);
        if (cl.root(s)) {
            std::vector<int> prefix;
            cl.enumerate_tasks(s, prefix, tasks);
        }
    }
    SearchStats stats;
    stats.tasks = tasks.size();
    const std::string header = config_header(cfg, tasks.size());
    std::map<std::size_t, std::vector<Found>> done;
    std::ofstream ckpt;
    if (!cfg.checkpoint_path.empty()) {
        done = load_checkpoint(cfg.checkpoint_path, header);
        stats.tasks_resumed = done.size();
        ckpt.open(cfg.checkpoint_path, std::ios::trunc);
        if (!ckpt)
            throw std::runtime_error("cannot write checkpoint " + cfg.checkpoint_path);
        ckpt << header << '\n';
        for (const auto &[t, fs] : done) {
            ckpt << "task " << t << '\n';
            for (const auto &f : fs)
                ckpt << encode(f) << '\n';
            ckpt << "end\n";
        }
        ckpt.flush();
    }

    std::set<Found> all;
    for (const auto &[t, fs] : done)
        all.insert(fs.begin(), fs.end());
    std::mutex mu;
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        SearchStats local;
        for (;;) {
            std::size_t t = next++;
            if (t >= tasks.size())
                break;
            if (done.count(t))
                continue;
            std::set<Found> found;
            cl.run_task(tasks[t], found, local);
            std::lock_guard lock(mu);
            all.insert(found.begin(), found.end());
            if (ckpt.is_open()) {
                ckpt << "task " << t << '\n';
                for (const auto &f : found)
                    ckpt << encode(f) << '\n';
                ckpt << "end\n";
                ckpt.flush();
            }
        }
        std::lock_guard lock(mu);
        stats.nodes += local.nodes;
        stats.solutions += local.solutions;
    };
    const unsigned nthreads = std::max(1u, cfg.threads);
    {
        std::vector<std::jthread> pool;
        for (unsigned k = 1; k < nthreads; ++k)
            pool.emplace_back(worker);
        worker();
    }

    std::vector<EquivalenceClass> out;
    for (const auto &f : all) {
        EquivalenceClass ec;
        ec.representative = to_code(f.rep, cfg.n);
        ec.cardinality = f.rep.size();
        ec.flags = compute_flags(ec.representative);
        ec.flags.bipartite = f.bipartite;
        ec.flags.antipodal = f.antipodal;
        out.push_back(std::move(ec));
    }
    std::sort(out.begin(), out.end(), [](const EquivalenceClass &a, const EquivalenceClass &b) {
        if (a.cardinality != b.cardinality)
            return a.cardinality < b.cardinality;
        return a.representative.words() < b.representative.words();
    });
    if (stats_out)
        *stats_out = stats;
    return out;
}

namespace {

// Minimum-size search: 0 is a word, its weight-2 neighbors form the matching
// {01,23,...}; extend by satisfying half-filled balls.
class MinSearch {
public:
    explicit MinSearch(int n) : n_(n), best_(std::size_t{1} << (n - 1)) {}

    std::size_t run()
    {
        std::set<Bits> t{0};
        for (int k = 0; k + 1 < n_; k += 2)
            t.insert(Bits{3} << k);
        std::set<Bits> banned;
        dfs(t, banned);
        return best_;
    }

private:
    int count_in_ball(const std::set<Bits> &t, Bits u) const
    {
        int c = 0;
        for (int i = 0; i < n_; ++i)
            c += t.count(u ^ (Bits{1} << i)) ? 1 : 0;
        return c;
    }

    void dfs(std::set<Bits> &t, std::set<Bits> &banned)
    {
        // Balls holding exactly one word; more than two is a contradiction.
        std::set<Bits> open;
        for (Bits v : t)
            for (int i = 0; i < n_; ++i) {
                Bits u = v ^ (Bits{1} << i);
                int c = count_in_ball(t, u);
                if (c > 2)
                    return;
                if (c == 1)
                    open.insert(u);
            }
        if (open.empty()) {
            best_ = std::min(best_, t.size());
            return;
        }
        // Each added word serves at most n open balls.
        const std::size_t need = (open.size() + static_cast<std::size_t>(n_) - 1) / static_cast<std::size_t>(n_);
        if (t.size() + need >= best_)
            return;
        Bits ball = *open.begin();
        std::vector<Bits> cands;
        int fewest = n_ + 1;
        for (Bits u : open) {
            std::vector<Bits> c;
            for (int i = 0; i < n_; ++i) {
                Bits v = u ^ (Bits{1} << i);
                if (t.count(v) || banned.count(v))
                    continue;
                // v must not overfill any of its balls.
                bool ok = true;
                for (int j = 0; j < n_ && ok; ++j)
                    ok = count_in_ball(t, v ^ (Bits{1} << j)) < 2;
                if (ok)
                    c.push_back(v);
            }
            if (static_cast<int>(c.size()) < fewest) {
                fewest = static_cast<int>(c.size());
                cands = c;
                ball = u;
            }
        }
        (void)ball;
        std::vector<Bits> newly_banned;
        for (Bits v : cands) {
            t.insert(v);
            dfs(t, banned);
            t.erase(v);
            banned.insert(v);
            newly_banned.push_back(v);
        }
        for (Bits v : newly_banned)
            banned.erase(v);
    }

    int n_;
    std::size_t best_;
};

}  // namespace

std::size_t min_extended_unitrade_size(int n)
{
    if (n < 2 || n > 8 || n % 2)
        throw std::invalid_argument("min_extended_unitrade_size supports even n <= 8");
    if (n == 2)
        return 2;
    return MinSearch(n).run();
}

namespace {

class PackingSearch {
public:
    PackingSearch(SpaceParams space, int lambda, int r, PackingSearchOptions opt)
        : space_(space), lambda_(lambda), opt_(opt)
    {
        const std::uint64_t vol = space.volume();
        if (vol > (std::uint64_t{1} << 12))
            throw std::invalid_argument("max_packing_size: at most 4096 vertices supported");
        words_.reserve(vol);
        for_each_vertex(space, [&](const Word &w) { words_.push_back(w); });
        std::map<Word, std::size_t> index;
        for (std::size_t k = 0; k < words_.size(); ++k)
            index[words_[k]] = k;
        balls_.resize(words_.size());
        for (std::size_t k = 0; k < words_.size(); ++k)
            for_each_in_ball(words_[k], r, [&](const Word &w) { balls_[k].push_back(index.at(w)); });
        ball_size_ = balls_.empty() ? 1 : balls_[0].size();
        load_.assign(words_.size(), 0);
        mult_.assign(words_.size(), 0);
        best_mult_ = mult_;
        slack_ = static_cast<std::uint64_t>(lambda) * words_.size();
        cap_ = std::numeric_limits<std::size_t>::max();
        if (opt.stop_at_bound) {
            auto sp = sphere_packing_bound(space.n, space.q, lambda, r);
            cap_ = static_cast<std::size_t>(sp.value);
            cap_id_ = sp.formula_id;
            if (space.q == 2 && r == 1 && space.n >= 2 && lambda <= space.n + 1) {
                auto lp = lp_bound(space.n, lambda);
                if (static_cast<std::size_t>(lp.value) < cap_) {
                    cap_ = static_cast<std::size_t>(lp.value);
                    cap_id_ = lp.formula_id;
                }
            }
        }
    }

    PackingSearchResult run()
    {
        dfs(0, 0);
        PackingSearchResult res;
        res.size = best_;
        res.nodes = nodes_;
        std::vector<Word> w;
        for (std::size_t k = 0; k < words_.size(); ++k)
            for (int m = 0; m < best_mult_[k]; ++m)
                w.push_back(words_[k]);
        res.witness = Code(space_, std::move(w));
        if (best_ == cap_)
            res.stopped_at_bound = cap_id_;
        return res;
    }

private:
    int room(std::size_t v) const
    {
        int m = opt_.multisets ? lambda_ : 1;
        for (auto u : balls_[v])
            m = std::min(m, lambda_ - load_[u]);
        return m;
    }

    void place(std::size_t v, int m)
    {
        mult_[v] += m;
        for (auto u : balls_[v])
            load_[u] += m;
        slack_ -= static_cast<std::uint64_t>(m) * ball_size_;
    }

    // Returns true once the cap is reached.
    bool dfs(std::size_t v, std::size_t current)
    {
        ++nodes_;
        if (current > best_) {
            best_ = current;
            best_mult_ = mult_;
            if (best_ >= cap_)
                return true;
        }
        if (v == words_.size())
            return false;
        std::size_t potential = static_cast<std::size_t>(slack_ / ball_size_);
        std::size_t rest = 0;
        for (std::size_t k = v; k < words_.size() && rest <= potential; ++k)
            rest += static_cast<std::size_t>(room(k));
        if (current + std::min(potential, rest) <= best_)
            return false;
        // Translating a word to zero: the zero word has multiplicity >= 1.
        const int lowest = v == 0 ? 1 : 0;
        for (int m = room(v); m >= lowest; --m) {
            place(v, m);
            bool stop = dfs(v + 1, current + static_cast<std::size_t>(m));
            place(v, -m);
            if (stop)
                return true;
        }
        return false;
    }

    SpaceParams space_;
    int lambda_;
    PackingSearchOptions opt_;
    std::vector<Word> words_;
    std::vector<std::vector<std::size_t>> balls_;
    std::size_t ball_size_ = 1;
    std::vector<int> load_, mult_, best_mult_;
    std::uint64_t slack_ = 0;
    std::size_t best_ = 0;
    std::size_t cap_;
    std::string cap_id_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

PackingSearchResult max_packing_size(SpaceParams space, int lambda, int r, PackingSearchOptions opt)
{
    if (lambda < 1)
        throw std::invalid_argument("lambda must be positive");
    if (r < 0 || r > space.n)
        throw std::invalid_argument("radius must lie in [0,n]");
    return PackingSearch(space, lambda, r, opt).run();
}

std::size_t max_twofold_packing_size(int n)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("max_twofold_packing_size supports 1 <= n <= 7");
    return max_packing_size(SpaceParams(n, 2), 2, 1).size;
}

}  // namespace hampack
