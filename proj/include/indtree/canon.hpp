#pragma once

#include <indtree/graph.hpp>

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace indtree {

/**
 * Isomorphism-invariant encoding of a (possibly vertex-coloured) graph. Two
 * graphs with the same colour multiset have equal bytes iff they are
 * colour-preserving isomorphic.
 *
 * Layout: n (two bytes), a colour flag, the colour of each canonical position (two bytes,
 * big-endian) when coloured, then the upper triangle of the canonically
 * relabelled adjacency matrix in row-major order packed MSB-first.
 */
struct CanonicalForm
{
    std::string bytes;
    int n = 0;
    std::optional<std::vector<int>> colours;

    auto operator==(const CanonicalForm & other) const -> bool { return bytes == other.bytes; }
    auto operator<=>(const CanonicalForm & other) const -> std::strong_ordering { return bytes <=> other.bytes; }
};

struct CanonicalLabelling
{
    CanonicalForm form;
    /// order[i] is the vertex placed at canonical position i.
    std::vector<Vertex> order;
};

/// Colour-refinement plus individualisation search, keeping the lexicographically
/// least adjacency encoding. Automorphisms found along the way prune equivalent branches.
/// `colours`, when non-empty, must hold one value in 0..65535 per vertex.
auto canonical_labelling(const Graph & g, std::span<const int> colours = {}) -> CanonicalLabelling;

auto canonical_form(const Graph & g, std::span<const int> colours = {}) -> CanonicalForm;

/// Canonical form with the root as the only vertex of its colour.
auto rooted_canonical_form(const RootedGraph & rg) -> CanonicalForm;

auto are_isomorphic(const Graph & a, const Graph & b) -> bool;

auto are_rooted_isomorphic(const RootedGraph & a, const RootedGraph & b) -> bool;

} // namespace indtree
