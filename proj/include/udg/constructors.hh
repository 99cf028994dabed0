#ifndef UDG_GUARD_UDG_CONSTRUCTORS_HH
#define UDG_GUARD_UDG_CONSTRUCTORS_HH 1

#include <udg/graph.hh>

#include <string>
#include <vector>

namespace udg
{
    // Named families. Vertices are labelled prefix + "0", prefix + "1", ...

    auto empty_graph(int n, const std::string & prefix = "") -> Graph;
    auto complete_graph(int n, const std::string & prefix = "") -> Graph;
    auto path_graph(int n, const std::string & prefix = "") -> Graph;
    auto cycle_graph(int n, const std::string & prefix = "") -> Graph;

    /**
     * Copies every vertex and edge of from into into. A label that already
     * exists in into gets primes appended until it is fresh. Returns the label
     * each vertex of from ended up with, indexed like from.
     */
    auto append_disjoint(Graph & into, const Graph & from) -> std::vector<std::string>;

    /// Disjoint union; the first graph keeps its labels, clashing labels of the
    /// second are primed.
    auto disjoint_union(const Graph & first, const Graph & second) -> Graph;

    /// Union on shared labels: a vertex present in both appears once.
    auto graph_union(const Graph & first, const Graph & second) -> Graph;

    /// Disjoint union plus every edge between the two sides.
    auto join(const Graph & first, const Graph & second) -> Graph;

    /// K1 + C(n-1) with hub "hub" and rim "r0".."r(n-2)". Requires n >= 4.
    auto wheel(int n) -> Graph;

    /// The Moser spindle on roles u, T, F, uP, uPP, v, w (labels u, T, F, u', u'', v, w).
    auto moser_spindle() -> LabeledGraph;

    /**
     * The Moser-Raiskii spindle M_k for k >= 2: two copies K'_k (a0..a(k-1)) and
     * K''_k (b0..b(k-1)), each joined to an edgeless pair sharing the apex v
     * ({v, w'} and {v, w''}), plus the edge w' ~ w''. Roles v, wP, wPP and
     * core(1)..core(2k), where core(i) for i <= k is the K'_k vertex a<i-1>.
     */
    auto moser_raiskii(int k) -> LabeledGraph;

    /// Label given to the merged vertex of a quotient block.
    auto block_label(const Graph & graph, const std::vector<std::string> & block) -> std::string;

    /**
     * Identifies the vertices of each block. The partition must cover every
     * vertex exactly once and each block must be an independent set;
     * parallel edges collapse. Blocks appear in order of their earliest member.
     */
    auto quotient(const Graph & graph, const std::vector<std::vector<std::string>> & partition) -> Graph;

    /// The canonical projection onto quotient(graph, partition).
    auto quotient_map(const Graph & graph, const std::vector<std::vector<std::string>> & partition) -> VertexMap;
}

#endif
