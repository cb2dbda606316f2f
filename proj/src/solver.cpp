#include <indtree/solver.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indtree {

namespace {
    /**
     * Grows a connected acyclic vertex set. Invariants on every call:
     * chosen induces a tree; chosen and forbidden are disjoint; every
     * undecided vertex has at most one neighbour in chosen (a second
     * neighbour would close a cycle, so such vertices are forbidden eagerly).
     */
    class TreeSearch
    {
    public:
        TreeSearch(const Graph & g, int target) : _g(g), _target(target) {}

        auto seed(Vertex root, VertexSet forbidden) -> void
        {
            auto chosen = VertexSet::singleton(root);
            branch(chosen, forbidden - chosen, _g.neighbours(root));
        }

        auto done() const -> bool { return _target > 0 && _best_size >= _target; }
        auto best_size() const -> int { return _best_size; }
        auto best_witness() const -> VertexSet { return _best; }
        auto stats() const -> const SearchStats & { return _stats; }
        auto stats() -> SearchStats & { return _stats; }

    private:
        const Graph & _g;
        int _target;
        int _best_size = 0;
        VertexSet _best;
        SearchStats _stats;

        auto branch(VertexSet chosen, VertexSet forbidden, VertexSet touched) -> void
        {
            ++_stats.nodes;
            if (chosen.size() > _best_size) {
                _best_size = chosen.size();
                _best = chosen;
            }
            if (done())
                return;

            const auto undecided = _g.vertices() - chosen - forbidden;
            const auto frontier = undecided & touched;
            if (frontier.empty())
                return;

            const int threshold = _target > 0 ? std::max(_best_size, _target - 1) : _best_size;
            if (reachable(_g, chosen, chosen | undecided).size() <= threshold) {
                ++_stats.prunings;
                return;
            }

            Vertex pick = -1;
            int pick_degree = -1;
            frontier.for_each([&](Vertex v) {
                int d = _g.degree_into(v, undecided);
                if (d > pick_degree) {
                    pick = v;
                    pick_degree = d;
                }
            });

            const auto nx = _g.neighbours(pick);
            branch(chosen | VertexSet::singleton(pick), forbidden | (nx & undecided & touched), touched | nx);
            if (done())
                return;
            branch(chosen, forbidden | VertexSet::singleton(pick), touched);
        }
    };

    auto check_result(const Graph & g, const TreeSearchResult & r) -> void
    {
        if (! is_induced_tree(g, r.witness) || r.witness.size() != r.size
                || (r.required_root && ! r.witness.contains(*r.required_root)))
            throw std::logic_error("solver produced an invalid witness");
    }
}

auto max_induced_tree(const Graph & g) -> TreeSearchResult
{
    if (g.order() == 0)
        throw GraphError("t(G) is undefined for the empty graph");
    TreeSearch search{g, 0};
    for (Vertex r = 0; r < g.order(); ++r) {
        if (g.order() - r <= search.best_size()) {
            ++search.stats().prunings;
            break;
        }
        search.seed(r, VertexSet::range(r));
    }
    TreeSearchResult result{search.best_size(), search.best_witness(), std::nullopt, search.stats()};
    check_result(g, result);
    return result;
}

auto max_induced_tree_through(const RootedGraph & rg) -> TreeSearchResult
{
    TreeSearch search{rg.graph, 0};
    search.seed(rg.root, VertexSet{});
    TreeSearchResult result{search.best_size(), search.best_witness(), rg.root, search.stats()};
    check_result(rg.graph, result);
    return result;
}

auto exists_induced_tree_through(const RootedGraph & rg, int target) -> bool
{
    if (target < 1)
        throw GraphError("target tree size must be at least 1");
    if (target > rg.graph.order())
        return false;
    TreeSearch search{rg.graph, target};
    search.seed(rg.root, VertexSet{});
    return search.done();
}

auto exists_induced_tree(const Graph & g, int target) -> bool
{
    if (target < 1)
        throw GraphError("target tree size must be at least 1");
    if (target > g.order())
        return false;
    TreeSearch search{g, target};
    for (Vertex r = 0; r < g.order() && ! search.done(); ++r) {
        if (g.order() - r < target)
            break;
        search.seed(r, VertexSet::range(r));
    }
    return search.done();
}

auto brute_force_t(const Graph & g, std::optional<Vertex> root) -> TreeSearchResult
{
    const int n = g.order();
    if (n == 0)
        throw GraphError("t(G) is undefined for the empty graph");
    if (n > brute_force_limit)
        throw GraphError("brute force is limited to " + std::to_string(brute_force_limit)
                + " vertices; use max_induced_tree for larger graphs");
    if (root)
        check_vertex(g, *root);

    TreeSearchResult result;
    result.required_root = root;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s{mask};
        ++result.stats.nodes;
        if (s.size() <= result.size || (root && ! s.contains(*root)))
            continue;
        if (is_induced_tree(g, s)) {
            result.size = s.size();
            result.witness = s;
        }
    }
    return result;
}

} // namespace indtree
