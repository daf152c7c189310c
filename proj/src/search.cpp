#include "loosesat/search.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <set>
#include <stdexcept>

#include "loosesat/canonical.hpp"
#include "loosesat/errors.hpp"
#include "loosesat/parallel.hpp"
#include "loosesat/saturation.hpp"

namespace loosesat {
namespace {

constexpr std::size_t kMaxSearchVertices = 16;
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

using TripleIdx = std::uint16_t;

// All triples on n vertices in lexicographic order, with an O(1) reverse lookup.
struct Problem {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<Triple> triples;
    std::vector<TripleIdx> lookup;  // n^3, sorted-argument index

    Problem(std::size_t n_, std::size_t m_) : n(n_), m(m_), lookup(n_ * n_ * n_, 0) {
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) {
                    lookup[(a * n + b) * n + c] = TripleIdx(triples.size());
                    triples.push_back({a, b, c});
                }
    }

    TripleIdx index(Vertex a, Vertex b, Vertex c) const {
        if (a > b) std::swap(a, b);
        if (b > c) std::swap(b, c);
        if (a > b) std::swap(a, b);
        return lookup[(a * n + b) * n + c];
    }
    std::size_t size() const { return triples.size(); }
};

// Edge-shape restriction implied by the choice of the second edge under symmetry pruning.
enum class Shape { Free, Linear, Disjoint };

enum class Mode { Find, Enumerate, Prefixes };

struct TaskSeed {
    std::vector<TripleIdx> edges;
    TripleIdx pos = 0;
    Shape shape = Shape::Free;
};

struct Shared {
    Shared(const Problem& p, const SearchOptions& o) : pb(p), opt(o) {}
    const Problem& pb;
    const SearchOptions& opt;
    std::optional<std::chrono::steady_clock::time_point> deadline;
    std::atomic<std::uint64_t> total_nodes{0};
    std::atomic<bool> timed_out{false};
    std::atomic<std::size_t> best_task{kNoTask};
    std::mutex observer_mutex;
};

struct Abort {};

class Engine {
public:
    Engine(Shared& sh, Mode mode, std::size_t task = kNoTask, std::size_t prefix_depth = 0)
        : sh_(sh),
          pb_(sh.pb),
          mode_(mode),
          task_(task),
          prefix_depth_(prefix_depth),
          inc_(pb_.n),
          in_graph_(pb_.size(), 0),
          obligations_(pb_.m + 2),
          addable_(pb_.m + 2, std::vector<char>(pb_.size(), 0)) {
        if (sh.opt.symmetry_pruning) {
            reps_ = {rep(0, 1, 3), rep(0, 3, 4), rep(3, 4, 5)};
        }
    }

    void load(const TaskSeed& seed) {
        shape_ = seed.shape;
        for (TripleIdx t : seed.edges) add(t);
        root_pos_ = seed.pos;
    }

    // Runs from the loaded state. Find: true on the first witness.
    bool run() {
        auto& obs = obligations_[edges_.size()];
        obs.clear();
        if (coverage())
            for (TripleIdx t = 0; t < root_pos_; ++t)
                if (!in_graph_[t] && !covered(t)) obs.push_back(t);
        bool found = dfs(root_pos_, obs);
        flush_nodes();
        return found;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t rejections() const { return rejections_; }
    const std::vector<TripleIdx>& witness() const { return witness_; }
    std::vector<TaskSeed>& seeds() { return seeds_; }
    std::set<std::string>& forms() { return forms_; }

private:
    static constexpr int kUnavailable = 3;

    std::optional<TripleIdx> rep(Vertex a, Vertex b, Vertex c) const {
        if (c >= pb_.n) return std::nullopt;
        return pb_.index(a, b, c);
    }

    bool coverage() const { return sh_.opt.strategy == SearchStrategy::Coverage; }

    void add(TripleIdx t) {
        edges_.push_back(t);
        in_graph_[t] = 1;
        for (Vertex v : pb_.triples[t]) inc_[v].push_back(t);
        if (sh_.opt.symmetry_pruning && edges_.size() == 2) {
            shape_ = t == reps_[0] ? Shape::Free : t == reps_[1] ? Shape::Linear : Shape::Disjoint;
        }
    }

    void remove_last() {
        TripleIdx t = edges_.back();
        edges_.pop_back();
        in_graph_[t] = 0;
        for (Vertex v : pb_.triples[t]) inc_[v].pop_back();
    }

    // Adding triple t would close a loose triangle with the current edges.
    bool covered(TripleIdx t) const {
        const Triple& f = pb_.triples[t];
        constexpr int splits[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
        for (const auto& s : splits) {
            const Vertex u = f[s[0]], v = f[s[1]], w = f[s[2]];
            for (TripleIdx g1 : inc_[u]) {
                const Triple& a = pb_.triples[g1];
                if (contains(a, v) || contains(a, w)) continue;
                for (TripleIdx g2 : inc_[v]) {
                    const Triple& b = pb_.triples[g2];
                    if (contains(b, u) || contains(b, w)) continue;
                    if (overlap(a, b) == 1) return true;
                }
            }
        }
        return false;
    }

    bool fits_shape(TripleIdx t) const {
        if (shape_ == Shape::Free) return true;
        const int limit = shape_ == Shape::Linear ? 1 : 0;
        const Triple& f = pb_.triples[t];
        for (TripleIdx e : edges_)
            if (overlap(f, pb_.triples[e]) > limit) return false;
        return true;
    }

    // Symmetry restriction on the first two edges.
    bool allowed_by_symmetry(TripleIdx t) const {
        if (!sh_.opt.symmetry_pruning) return true;
        if (edges_.empty()) return t == 0;
        if (edges_.size() == 1) return std::find(reps_.begin(), reps_.end(), std::optional<TripleIdx>(t)) != reps_.end();
        return true;
    }

    // Edges the future can still use: current edges cost 0, addable triples at index
    // >= pos cost 1.
    int cost(TripleIdx g, TripleIdx pos, const std::vector<char>& addable) const {
        if (in_graph_[g]) return 0;
        return g >= pos && addable[g] ? 1 : kUnavailable;
    }

    // The uncovered triple t can still be covered using at most r more edges >= pos.
    bool coverable(TripleIdx t, TripleIdx pos, std::size_t r, const std::vector<char>& addable) const {
        if (r == 0) return false;
        const Triple& f = pb_.triples[t];
        const auto n = Vertex(pb_.n);
        constexpr int splits[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
        for (const auto& s : splits) {
            const Vertex u = f[s[0]], v = f[s[1]];
            for (Vertex z = 0; z < n; ++z) {
                if (contains(f, z)) continue;
                for (Vertex p = 0; p < n; ++p) {
                    if (p == z || contains(f, p)) continue;
                    const int c1 = cost(pb_.index(u, z, p), pos, addable);
                    if (c1 >= kUnavailable || std::size_t(c1) > r) continue;
                    for (Vertex q = 0; q < n; ++q) {
                        if (q == z || q == p || contains(f, q)) continue;
                        const int c2 = cost(pb_.index(v, z, q), pos, addable);
                        if (c2 < kUnavailable && std::size_t(c1 + c2) <= r) return true;
                    }
                }
            }
        }
        return false;
    }

    bool saturated_leaf(const std::vector<TripleIdx>& obligations) const {
        for (TripleIdx t : obligations)
            if (!covered(t)) return false;
        for (TripleIdx t = 0; t < pb_.size(); ++t)
            if (!in_graph_[t] && !covered(t)) return false;
        return true;
    }

    void flush_nodes() {
        sh_.total_nodes.fetch_add(nodes_ - flushed_);
        flushed_ = nodes_;
    }

    void tick() {
        ++nodes_;
        if (sh_.opt.observe_every && sh_.opt.prefix_observer && nodes_ % sh_.opt.observe_every == 0) {
            std::vector<Triple> current;
            for (TripleIdx t : edges_) current.push_back(pb_.triples[t]);
            std::lock_guard lock(sh_.observer_mutex);
            sh_.opt.prefix_observer(current);
        }
        if ((nodes_ & 255) != 0) return;
        flush_nodes();
        if (sh_.timed_out.load()) throw Abort{};
        if (mode_ == Mode::Find && task_ != kNoTask && task_ > sh_.best_task.load()) throw Abort{};
        const auto& budget = sh_.opt.budget;
        if ((budget.max_nodes && sh_.total_nodes.load() > *budget.max_nodes) ||
            (sh_.deadline && std::chrono::steady_clock::now() > *sh_.deadline)) {
            sh_.timed_out.store(true);
            throw Abort{};
        }
    }

    bool dfs(TripleIdx pos, std::vector<TripleIdx>& obligations) {
        const std::size_t depth = edges_.size();
        if (mode_ == Mode::Prefixes && depth == prefix_depth_) {
            seeds_.push_back({edges_, pos, shape_});
            return false;
        }
        tick();
        const std::size_t r = pb_.m - depth;
        if (r == 0) {
            if (!saturated_leaf(obligations)) return false;
            if (mode_ == Mode::Find) {
                witness_ = edges_;
                return true;
            }
            if (mode_ == Mode::Enumerate) {
                std::vector<Triple> ts;
                for (TripleIdx t : edges_) ts.push_back(pb_.triples[t]);
                forms_.insert(canonical_form(Hypergraph3::build(pb_.n, ts)));
            }
            return false;
        }

        const auto last = TripleIdx(pb_.size() - r);
        if (pos > last) return false;
        auto& addable = addable_[depth];
        for (TripleIdx t = pos; t < pb_.size(); ++t) addable[t] = !covered(t) && fits_shape(t);

        auto& pending = obligations;
        if (coverage()) {
            for (TripleIdx f : pending)
                if (!coverable(f, pos, r, addable)) return false;
        }

        auto& child = obligations_[depth + 1];
        for (TripleIdx t = pos; t <= last; ++t) {
            if (!allowed_by_symmetry(t)) {
                ++rejections_;
            } else if (addable[t]) {
                add(t);
                if (coverage()) {
                    child.clear();
                    for (TripleIdx f : pending)
                        if (!covered(f)) child.push_back(f);
                }
                const bool found = dfs(TripleIdx(t + 1), child);
                if (found) return true;
                remove_last();
            }
            // From here on t is passed over; if it stays uncovered it must be covered later.
            if (coverage() && !in_graph_[t] && !covered(t)) {
                if (!coverable(t, TripleIdx(t + 1), r, addable)) break;
                pending.push_back(t);
            }
        }
        return false;
    }

    Shared& sh_;
    const Problem& pb_;
    Mode mode_;
    std::size_t task_;
    std::size_t prefix_depth_;
    std::array<std::optional<TripleIdx>, 3> reps_{};
    Shape shape_ = Shape::Free;
    TripleIdx root_pos_ = 0;

    std::vector<std::vector<TripleIdx>> inc_;
    std::vector<char> in_graph_;
    std::vector<TripleIdx> edges_;
    std::vector<std::vector<TripleIdx>> obligations_;
    std::vector<std::vector<char>> addable_;

    std::uint64_t nodes_ = 0;
    std::uint64_t flushed_ = 0;
    std::uint64_t rejections_ = 0;
    std::vector<TripleIdx> witness_;
    std::vector<TaskSeed> seeds_;
    std::set<std::string> forms_;
};

struct RunResult {
    std::optional<std::vector<Triple>> witness;
    std::uint64_t nodes = 0;
    std::uint64_t rejections = 0;
    std::set<std::string> forms;
};

RunResult run_search(std::size_t n, std::size_t m, const SearchOptions& opt, Mode mode) {
    if (n < 1) throw DomainError("search needs n >= 1");
    if (n > kMaxSearchVertices)
        throw DomainError("exhaustive search supports n <= " + std::to_string(kMaxSearchVertices));
    RunResult result;
    if (m > triples_count(n)) return result;

    const Problem pb(n, m);
    Shared sh(pb, opt);
    if (opt.budget.wall_clock) sh.deadline = std::chrono::steady_clock::now() + *opt.budget.wall_clock;

    const std::size_t prefix_depth = std::min<std::size_t>(m, opt.symmetry_pruning ? 3 : 2);
    Engine gen(sh, Mode::Prefixes, kNoTask, prefix_depth);
    try {
        gen.run();
    } catch (const Abort&) {
        throw TimeoutError("search budget exhausted");
    }
    const auto& seeds = gen.seeds();

    struct TaskResult {
        bool found = false;
        bool finished = false;
        std::vector<TripleIdx> witness;
        std::uint64_t nodes = 0, rejections = 0;
        std::set<std::string> forms;
    };
    std::vector<TaskResult> tasks(seeds.size());
    run_tasks(seeds.size(), opt.jobs, [&](std::size_t i) {
        if (mode == Mode::Find && i > sh.best_task.load()) return;
        Engine e(sh, mode, i);
        e.load(seeds[i]);
        auto& out = tasks[i];
        try {
            out.found = e.run();
            out.finished = true;
        } catch (const Abort&) {
        }
        out.nodes = e.nodes();
        out.rejections = e.rejections();
        if (out.found) {
            out.witness = e.witness();
            std::size_t best = sh.best_task.load();
            while (i < best && !sh.best_task.compare_exchange_weak(best, i)) {
            }
        }
        if (mode == Mode::Enumerate) out.forms = std::move(e.forms());
    });
    if (sh.timed_out.load()) throw TimeoutError("search budget exhausted");

    // Count only tasks up to the winner so the totals do not depend on scheduling.
    result.nodes = gen.nodes();
    result.rejections = gen.rejections();
    const std::size_t last = mode == Mode::Find ? std::min(sh.best_task.load(), seeds.size() - 1) : seeds.size() - 1;
    for (std::size_t i = 0; i < seeds.size() && i <= last; ++i) {
        if (!tasks[i].finished && !tasks[i].found) throw std::logic_error("search task did not complete");
        result.nodes += tasks[i].nodes;
        result.rejections += tasks[i].rejections;
        if (mode == Mode::Enumerate) result.forms.merge(tasks[i].forms);
    }
    if (mode == Mode::Find && sh.best_task.load() != kNoTask) {
        std::vector<Triple> w;
        for (TripleIdx t : tasks[sh.best_task.load()].witness) w.push_back(pb.triples[t]);
        result.witness = std::move(w);
    }
    return result;
}

}  // namespace

const char* to_string(SearchStrategy s) {
    return s == SearchStrategy::Lexicographic ? "lexicographic" : "coverage";
}

FeasibilityResult search_feasible(std::size_t n, std::size_t m, const SearchOptions& options) {
    RunResult r = run_search(n, m, options, Mode::Find);
    FeasibilityResult out;
    out.nodes_explored = r.nodes;
    out.canonical_rejections = r.rejections;
    if (r.witness) {
        Hypergraph3 g = Hypergraph3::build(n, *r.witness);
        if (verify_saturated(g).verdict != Verdict::Saturated)
            throw std::logic_error("search produced a witness that fails verification");
        out.witness = std::move(g);
    }
    return out;
}

std::optional<Hypergraph3> exists_saturated(std::size_t n, std::size_t m, const SearchOptions& options) {
    return search_feasible(n, m, options).witness;
}

std::size_t saturation_lower_seed(std::size_t n) {
    return n <= 2 ? 0 : (n - 2 + 2) / 3;
}

SearchOutcome min_saturation(std::size_t n, const SearchOptions& options, std::optional<std::size_t> max_edges) {
    if (n < 1) throw DomainError("search needs n >= 1");
    const auto start = std::chrono::steady_clock::now();
    SearchOutcome out;
    out.n = n;
    out.strategy = to_string(options.strategy);
    if (!options.symmetry_pruning) out.strategy += "+nosym";
    const std::size_t seed = saturation_lower_seed(n);
    out.exhausted_upto = long(seed) - 1;
    const std::size_t top = std::min<std::size_t>(triples_count(n), max_edges.value_or(triples_count(n)));

    SearchOptions remaining = options;
    for (std::size_t m = seed; m <= top; ++m) {
        if (options.budget.wall_clock) {
            auto used = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            if (used >= *options.budget.wall_clock)
                throw TimeoutError("search budget exhausted", out.exhausted_upto);
            remaining.budget.wall_clock = *options.budget.wall_clock - used;
        }
        if (options.budget.max_nodes) {
            if (out.nodes_explored >= *options.budget.max_nodes)
                throw TimeoutError("search budget exhausted", out.exhausted_upto);
            remaining.budget.max_nodes = *options.budget.max_nodes - out.nodes_explored;
        }
        FeasibilityResult r;
        try {
            r = search_feasible(n, m, remaining);
        } catch (const TimeoutError&) {
            throw TimeoutError("search budget exhausted", out.exhausted_upto);
        }
        out.nodes_explored += r.nodes_explored;
        out.canonical_rejections += r.canonical_rejections;
        if (r.witness) {
            out.min_edges = m;
            out.witness = std::move(r.witness);
            break;
        }
        out.exhausted_upto = long(m);
    }
    out.elapsed = std::chrono::steady_clock::now() - start;
    return out;
}

std::vector<std::string> enumerate_extremal(std::size_t n, std::size_t m, const SearchOptions& options) {
    RunResult r = run_search(n, m, options, Mode::Enumerate);
    return {r.forms.begin(), r.forms.end()};
}

}  // namespace loosesat
