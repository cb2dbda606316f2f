#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace indtree {

using Vertex = int;

inline constexpr int vertex_set_words = 4;

/// Maximum number of vertices a graph can hold.
inline constexpr int max_vertices = 64 * vertex_set_words;

/**
 * A set of vertices drawn from 0..max_vertices-1, stored as a fixed array of
 * words. Graphs of the sizes searched exhaustively only ever touch word 0.
 */
class VertexSet
{
public:
    using Word = std::uint64_t;

    constexpr VertexSet() = default;

    /// Set whose members are the bits of `low` (vertices 0..63).
    constexpr explicit VertexSet(Word low) : _words{low} {}

    static constexpr auto singleton(Vertex v) -> VertexSet {
        VertexSet s;
        s.insert(v);
        return s;
    }

    /// {0, ..., n-1}
    static constexpr auto range(int n) -> VertexSet {
        VertexSet s;
        for (int w = 0; w < vertex_set_words && n > 0; ++w, n -= 64)
            s._words[w] = n >= 64 ? ~Word{0} : (Word{1} << n) - 1;
        return s;
    }

    constexpr auto empty() const -> bool {
        Word any = 0;
        for (auto w : _words)
            any |= w;
        return any == 0;
    }

    constexpr auto size() const -> int {
        int total = 0;
        for (auto w : _words)
            total += std::popcount(w);
        return total;
    }

    constexpr auto contains(Vertex v) const -> bool { return (_words[v >> 6] >> (v & 63)) & 1u; }

    /// Lowest member; undefined on the empty set.
    constexpr auto first() const -> Vertex {
        for (int w = 0; w < vertex_set_words; ++w)
            if (_words[w])
                return 64 * w + std::countr_zero(_words[w]);
        return -1;
    }

    /// Highest member; undefined on the empty set.
    constexpr auto last() const -> Vertex {
        for (int w = vertex_set_words - 1; w >= 0; --w)
            if (_words[w])
                return 64 * w + 63 - std::countl_zero(_words[w]);
        return -1;
    }

    constexpr auto insert(Vertex v) -> void { _words[v >> 6] |= Word{1} << (v & 63); }
    constexpr auto erase(Vertex v) -> void { _words[v >> 6] &= ~(Word{1} << (v & 63)); }

    constexpr auto operator&=(const VertexSet & o) -> VertexSet & {
        for (int w = 0; w < vertex_set_words; ++w)
            _words[w] &= o._words[w];
        return *this;
    }
    constexpr auto operator|=(const VertexSet & o) -> VertexSet & {
        for (int w = 0; w < vertex_set_words; ++w)
            _words[w] |= o._words[w];
        return *this;
    }
    constexpr auto operator-=(const VertexSet & o) -> VertexSet & {
        for (int w = 0; w < vertex_set_words; ++w)
            _words[w] &= ~o._words[w];
        return *this;
    }

    constexpr auto operator&(const VertexSet & o) const -> VertexSet { auto r = *this; return r &= o; }
    constexpr auto operator|(const VertexSet & o) const -> VertexSet { auto r = *this; return r |= o; }
    constexpr auto operator-(const VertexSet & o) const -> VertexSet { auto r = *this; return r -= o; }

    constexpr auto is_subset_of(const VertexSet & o) const -> bool { return (*this - o).empty(); }

    constexpr auto operator==(const VertexSet &) const -> bool = default;
    constexpr auto operator<=>(const VertexSet &) const = default;

    /// Members in increasing order.
    auto to_vector() const -> std::vector<Vertex> {
        std::vector<Vertex> out;
        out.reserve(size());
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    constexpr auto for_each(F && f) const -> void {
        for (int w = 0; w < vertex_set_words; ++w)
            for (auto b = _words[w]; b; b &= b - 1)
                f(static_cast<Vertex>(64 * w + std::countr_zero(b)));
    }

private:
    std::array<Word, vertex_set_words> _words{};
};

} // namespace indtree
