#include <indtree/canon.hpp>

#include <algorithm>
#include <numeric>

namespace indtree {

namespace {
    using Partition = std::vector<VertexSet>;

    /// Splits cells by the vector of neighbour counts into every cell, until stable.
    /// Subcells are ordered by that vector, so the result depends only on the
    /// isomorphism type of (graph, starting partition).
    auto refine(const Graph & g, Partition & cells) -> void
    {
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        for (bool changed = true; changed;) {
            changed = false;
            Partition next;
            next.reserve(g.order());
            for (auto cell : cells) {
                if (cell.size() == 1) {
                    next.push_back(cell);
                    continue;
                }
                keyed.clear();
                cell.for_each([&](Vertex v) {
                    std::vector<int> signature(cells.size());
                    for (std::size_t c = 0; c < cells.size(); ++c)
                        signature[c] = g.degree_into(v, cells[c]);
                    keyed.emplace_back(std::move(signature), v);
                });
                std::sort(keyed.begin(), keyed.end());
                VertexSet current;
                for (std::size_t i = 0; i < keyed.size(); ++i) {
                    if (i > 0 && keyed[i].first != keyed[i - 1].first) {
                        next.push_back(current);
                        current = VertexSet{};
                        changed = true;
                    }
                    current.insert(keyed[i].second);
                }
                next.push_back(current);
            }
            cells = std::move(next);
        }
    }

    auto encode_adjacency(const Graph & g, const std::vector<Vertex> & order) -> std::string
    {
        const int n = g.order();
        std::string out;
        out.reserve((n * (n - 1) / 2 + 7) / 8);
        unsigned char byte = 0;
        int filled = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                byte = static_cast<unsigned char>((byte << 1) | (g.adjacent(order[i], order[j]) ? 1 : 0));
                if (++filled == 8) {
                    out.push_back(static_cast<char>(byte));
                    byte = 0;
                    filled = 0;
                }
            }
        if (filled > 0)
            out.push_back(static_cast<char>(byte << (8 - filled)));
        return out;
    }

    struct UnionFind
    {
        std::vector<int> parent;

        explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

        auto find(int x) -> int
        {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        }

        auto unite(int a, int b) -> void { parent[find(a)] = find(b); }
    };

    class Search
    {
    public:
        explicit Search(const Graph & g) : _g(g) {}

        auto run(Partition cells) -> void { descend(std::move(cells), VertexSet{}); }

        auto best_order() const -> const std::vector<Vertex> & { return _best_order; }
        auto best_code() const -> const std::string & { return _best_code; }

    private:
        const Graph & _g;
        bool _have_leaf = false;
        std::string _best_code;
        std::vector<Vertex> _best_order;
        std::vector<std::vector<Vertex>> _automorphisms;

        auto descend(Partition cells, VertexSet fixed) -> void
        {
            refine(_g, cells);

            auto target = std::find_if(cells.begin(), cells.end(), [](VertexSet c) { return c.size() > 1; });
            if (target == cells.end()) {
                leaf(cells);
                return;
            }
            const auto index = static_cast<std::size_t>(target - cells.begin());
            const auto candidates = *target;

            VertexSet explored;
            candidates.for_each([&](Vertex v) {
                if (! explored.empty() && equivalent_to_explored(v, explored, fixed))
                    return;
                Partition child;
                child.reserve(cells.size() + 1);
                child.insert(child.end(), cells.begin(), cells.begin() + index);
                child.push_back(VertexSet::singleton(v));
                child.push_back(candidates - VertexSet::singleton(v));
                child.insert(child.end(), cells.begin() + index + 1, cells.end());
                descend(std::move(child), fixed | VertexSet::singleton(v));
                explored.insert(v);
            });
        }

        /// Is v in the orbit of an explored vertex under the known automorphisms fixing `fixed` pointwise?
        auto equivalent_to_explored(Vertex v, VertexSet explored, VertexSet fixed) -> bool
        {
            UnionFind orbits(_g.order());
            bool any = false;
            for (const auto & aut : _automorphisms) {
                bool fixes = true;
                fixed.for_each([&](Vertex f) { fixes = fixes && aut[f] == f; });
                if (! fixes)
                    continue;
                any = true;
                for (int x = 0; x < _g.order(); ++x)
                    orbits.unite(x, aut[x]);
            }
            if (! any)
                return false;
            bool hit = false;
            explored.for_each([&](Vertex u) { hit = hit || orbits.find(u) == orbits.find(v); });
            return hit;
        }

        auto leaf(const Partition & cells) -> void
        {
            std::vector<Vertex> order;
            order.reserve(cells.size());
            for (auto c : cells)
                order.push_back(c.first());
            auto code = encode_adjacency(_g, order);

            if (! _have_leaf || code < _best_code) {
                _have_leaf = true;
                _best_code = std::move(code);
                _best_order = std::move(order);
            }
            else if (code == _best_code) {
                std::vector<Vertex> aut(_g.order());
                for (std::size_t i = 0; i < order.size(); ++i)
                    aut[_best_order[i]] = order[i];
                _automorphisms.push_back(std::move(aut));
            }
        }
    };
}

auto canonical_labelling(const Graph & g, std::span<const int> colours) -> CanonicalLabelling
{
    const int n = g.order();
    const bool coloured = ! colours.empty();
    if (coloured && static_cast<int>(colours.size()) != n)
        throw GraphError("colour assignment has " + std::to_string(colours.size()) + " entries for " + std::to_string(n) + " vertices");

    Partition cells;
    if (coloured) {
        std::vector<int> distinct(colours.begin(), colours.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        if (! distinct.empty() && (distinct.front() < 0 || distinct.back() > 65535))
            throw GraphError("colours must lie in 0..65535");
        for (int c : distinct) {
            VertexSet cell;
            for (int v = 0; v < n; ++v)
                if (colours[v] == c)
                    cell.insert(v);
            cells.push_back(cell);
        }
    }
    else if (n > 0)
        cells.push_back(g.vertices());

    CanonicalLabelling result;
    if (n > 0) {
        Search search{g};
        search.run(std::move(cells));
        result.order = search.best_order();
    }

    auto & form = result.form;
    form.n = n;
    form.bytes.push_back(static_cast<char>((n >> 8) & 0xff));
    form.bytes.push_back(static_cast<char>(n & 0xff));
    form.bytes.push_back(static_cast<char>(coloured ? 1 : 0));
    if (coloured) {
        std::vector<int> ordered;
        for (Vertex v : result.order) {
            ordered.push_back(colours[v]);
            form.bytes.push_back(static_cast<char>((colours[v] >> 8) & 0xff));
            form.bytes.push_back(static_cast<char>(colours[v] & 0xff));
        }
        form.colours = std::move(ordered);
    }
    form.bytes += encode_adjacency(g, result.order);
    return result;
}

auto canonical_form(const Graph & g, std::span<const int> colours) -> CanonicalForm
{
    return canonical_labelling(g, colours).form;
}

auto rooted_canonical_form(const RootedGraph & rg) -> CanonicalForm
{
    std::vector<int> colours(rg.graph.order(), 1);
    colours[rg.root] = 0;
    return canonical_form(rg.graph, colours);
}

auto are_isomorphic(const Graph & a, const Graph & b) -> bool
{
    if (a.order() != b.order() || a.edge_count() != b.edge_count())
        return false;
    return canonical_form(a) == canonical_form(b);
}

auto are_rooted_isomorphic(const RootedGraph & a, const RootedGraph & b) -> bool
{
    if (a.graph.order() != b.graph.order() || a.graph.edge_count() != b.graph.edge_count())
        return false;
    return rooted_canonical_form(a) == rooted_canonical_form(b);
}

} // namespace indtree
