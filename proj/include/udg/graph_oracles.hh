#ifndef UDG_GUARD_UDG_GRAPH_ORACLES_HH
#define UDG_GUARD_UDG_GRAPH_ORACLES_HH 1

#include <udg/graph.hh>

#include <optional>
#include <vector>

namespace udg
{
    /// Exact chromatic number. Throws CapExceeded above max_vertices.
    auto chromatic_number(const Graph & graph, int max_vertices = 16) -> int;

    /// A proper coloring with colors 1..k, or nothing if none exists.
    auto find_coloring(const Graph & graph, int k) -> std::optional<std::vector<int>>;

    /// Size of a largest clique, by exhaustive search. Throws CapExceeded above max_vertices.
    auto clique_number(const Graph & graph, int max_vertices = 24) -> int;

    /**
     * True iff the graph is a path on at least two vertices. K1 is not a
     * path here (it is the dimension zero graph). Disconnected graphs are
     * never paths; apply this per connected component when that matters.
     */
    auto is_path(const Graph & graph) -> bool;

    /**
     * Laman count condition: |E| = 2|V| - 3 and every vertex subset of size
     * at least two induces at most 2|V'| - 3 edges. Throws CapExceeded
     * above max_vertices.
     */
    auto laman_count_check(const Graph & graph, int max_vertices = 12) -> bool;

    /// An isomorphism first -> second as a vertex index map, by plain backtracking.
    auto find_isomorphism(const Graph & first, const Graph & second) -> std::optional<std::vector<int>>;
}

#endif
