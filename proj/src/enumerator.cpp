#include <indtree/enumerator.hpp>

#include <indtree/io.hpp>
#include <indtree/solver.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <set>
#include <thread>

namespace indtree {

auto check_budget(int n, const EnumerationOptions & options) -> void
{
    const int limit = options.allow_large ? hard_max_order : default_max_order;
    if (n < 1 || n > limit) {
        std::string msg = "enumeration order " + std::to_string(n) + " outside 1.." + std::to_string(limit);
        if (! options.allow_large && n > default_max_order && n <= hard_max_order)
            msg += " (orders up to " + std::to_string(hard_max_order) + " need the large-order override)";
        throw BudgetError(msg);
    }
}

auto parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)> & body) -> void
{
    if (threads <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i)
            body(i);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < count;) {
            try {
                body(i);
            }
            catch (...) {
                std::lock_guard lock{failure_mutex};
                if (! failure)
                    failure = std::current_exception();
                next = count;
            }
        }
    };
    {
        std::vector<std::jthread> pool;
        const auto n_threads = std::min<std::size_t>(static_cast<std::size_t>(threads), count);
        for (std::size_t t = 0; t < n_threads; ++t)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);
}

namespace {
    auto for_each_independent_set(const Graph & g, VertexSet chosen, VertexSet candidates,
            const std::function<void(VertexSet)> & visit) -> void
    {
        visit(chosen);
        candidates.for_each([&](Vertex v) {
            auto later = candidates - VertexSet::range(v + 1);
            for_each_independent_set(g, chosen | VertexSet::singleton(v), later - g.neighbours(v), visit);
        });
    }

    auto vertex_colours(int n, Vertex marked) -> std::vector<int>
    {
        std::vector<int> colours(n, 1);
        colours[marked] = 0;
        return colours;
    }
}

auto augment(const Graph & parent, const std::function<void(const Graph &)> & visit) -> void
{
    const int n = parent.order();
    const Vertex added = n;
    int parent_max_degree = 0;
    for (Vertex v = 0; v < n; ++v)
        parent_max_degree = std::max(parent_max_degree, parent.degree(v));

    std::set<std::string> seen;
    for_each_independent_set(parent, VertexSet{}, parent.vertices(), [&](VertexSet neighbourhood) {
        const int new_degree = neighbourhood.size();
        if (new_degree < parent_max_degree)
            return;
        int max_degree = new_degree;
        neighbourhood.for_each([&](Vertex v) { max_degree = std::max(max_degree, parent.degree(v) + 1); });
        if (new_degree < max_degree)
            return;

        auto child = parent.with_vertex_added(neighbourhood);
        auto labelling = canonical_labelling(child);

        Vertex deletion = added;
        for (int pos = n; pos >= 0; --pos)
            if (child.degree(labelling.order[pos]) == max_degree) {
                deletion = labelling.order[pos];
                break;
            }
        if (deletion != added) {
            auto at_added = canonical_form(child, vertex_colours(n + 1, added));
            auto at_deletion = canonical_form(child, vertex_colours(n + 1, deletion));
            if (at_added != at_deletion)
                return;
        }

        if (seen.insert(labelling.form.bytes).second)
            visit(child);
    });
}

auto triangle_free_graphs(int n, const EnumerationOptions & options) -> std::vector<Graph>
{
    if (n < 0 || n > (options.allow_large ? hard_max_order : default_max_order))
        check_budget(n, options);

    std::vector<Graph> level{Graph{}};
    for (int order = 1; order <= n; ++order) {
        std::vector<std::vector<Graph>> children(level.size());
        parallel_for(level.size(), options.threads, [&](std::size_t i) {
            augment(level[i], [&](const Graph & child) { children[i].push_back(child); });
        });
        std::vector<Graph> next;
        for (auto & part : children)
            std::move(part.begin(), part.end(), std::back_inserter(next));
        level = std::move(next);
    }
    return level;
}

ConnectedTriangleFreeEnumeration::ConnectedTriangleFreeEnumeration(int n, const EnumerationOptions & options) :
    _n(n)
{
    check_budget(n, options);
    _parents = triangle_free_graphs(n - 1, options);
}

auto ConnectedTriangleFreeEnumeration::visit_partition(std::size_t i, const std::function<void(const Graph &)> & visit) const -> void
{
    augment(_parents.at(i), [&](const Graph & child) {
        if (is_connected(child))
            visit(child);
    });
}

auto ConnectedTriangleFreeEnumeration::for_each(const std::function<void(const Graph &)> & visit) const -> void
{
    for (std::size_t i = 0; i < partitions(); ++i)
        visit_partition(i, visit);
}

auto enumerate_connected_triangle_free(int n, const std::function<void(const Graph &)> & visit,
        const EnumerationOptions & options) -> void
{
    ConnectedTriangleFreeEnumeration{n, options}.for_each(visit);
}

auto connected_triangle_free_graphs(int n, const EnumerationOptions & options) -> std::vector<Graph>
{
    std::vector<Graph> out;
    enumerate_connected_triangle_free(n, [&](const Graph & g) { out.push_back(g); }, options);
    return out;
}

auto t3_star_formula(long long n) -> int
{
    if (n < 1)
        throw GraphError("t3*(n) is defined for n >= 1");
    int k = 1;
    while (1 + static_cast<long long>(k - 1) * k / 2 < n)
        ++k;
    return k;
}

auto canonicalise(const Graph & g) -> Canonicalised
{
    auto labelling = canonical_labelling(g);
    Canonicalised out{g.relabelled(labelling.order), std::vector<Vertex>(g.order())};
    for (int pos = 0; pos < g.order(); ++pos)
        out.position[labelling.order[pos]] = pos;
    return out;
}

namespace {
    struct PartialTabulation
    {
        long long graphs = 0;
        long long rooted_pairs = 0;
        int t3 = std::numeric_limits<int>::max();
        int t3_star = std::numeric_limits<int>::max();
        std::vector<RootedWitness> rooted;
        std::vector<std::string> unrooted;

        auto absorb(const Graph & g) -> void
        {
            ++graphs;
            std::vector<int> per_root(g.order());
            int t = 0, t_star = std::numeric_limits<int>::max();
            for (Vertex v = 0; v < g.order(); ++v) {
                per_root[v] = max_induced_tree_through(RootedGraph{g, v}).size;
                t = std::max(t, per_root[v]);
                t_star = std::min(t_star, per_root[v]);
            }
            rooted_pairs += g.order();

            if (t > t3 && t_star > t3_star)
                return;
            auto canon = canonicalise(g);
            const auto g6 = to_graph6(canon.graph);

            if (t < t3) {
                t3 = t;
                unrooted.clear();
            }
            if (t == t3)
                unrooted.push_back(g6);

            if (t_star < t3_star) {
                t3_star = t_star;
                rooted.clear();
            }
            if (t_star == t3_star) {
                std::set<std::string> orbits;
                std::vector<Vertex> roots;
                for (int pos = 0; pos < g.order(); ++pos) {
                    Vertex v = 0;
                    while (canon.position[v] != pos)
                        ++v;
                    if (per_root[v] != t3_star)
                        continue;
                    if (orbits.insert(rooted_canonical_form(RootedGraph{canon.graph, pos}).bytes).second)
                        rooted.push_back(RootedWitness{g6, pos});
                }
            }
        }

        auto merge(PartialTabulation && o) -> void
        {
            graphs += o.graphs;
            rooted_pairs += o.rooted_pairs;
            if (o.t3 < t3) {
                t3 = o.t3;
                unrooted = std::move(o.unrooted);
            }
            else if (o.t3 == t3)
                std::move(o.unrooted.begin(), o.unrooted.end(), std::back_inserter(unrooted));
            if (o.t3_star < t3_star) {
                t3_star = o.t3_star;
                rooted = std::move(o.rooted);
            }
            else if (o.t3_star == t3_star)
                std::move(o.rooted.begin(), o.rooted.end(), std::back_inserter(rooted));
        }
    };
}

auto tabulate(int n, const EnumerationOptions & options) -> EnumerationReport
{
    const auto start = std::chrono::steady_clock::now();
    ConnectedTriangleFreeEnumeration enumeration{n, options};

    std::vector<PartialTabulation> parts(enumeration.partitions());
    parallel_for(parts.size(), options.threads, [&](std::size_t i) {
        enumeration.visit_partition(i, [&](const Graph & g) { parts[i].absorb(g); });
    });
    PartialTabulation total;
    for (auto & part : parts)
        total.merge(std::move(part));

    EnumerationReport report;
    report.n = n;
    report.graphs_seen = total.graphs;
    report.rooted_pairs = total.rooted_pairs;
    report.t3 = total.t3;
    report.t3_star = total.t3_star;
    report.t3_star_formula = t3_star_formula(n);
    report.extremal_rooted = std::move(total.rooted);
    report.extremal_unrooted = std::move(total.unrooted);
    std::sort(report.extremal_rooted.begin(), report.extremal_rooted.end());
    std::sort(report.extremal_unrooted.begin(), report.extremal_unrooted.end());
    report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace indtree
