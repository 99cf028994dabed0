#ifndef UDG_GUARD_UDG_GRAPH_HH
#define UDG_GUARD_UDG_GRAPH_HH 1

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace udg
{
    /**
     * A simple undirected graph with string vertex labels.
     *
     * Vertices keep their insertion order, and so do edges, which makes every
     * search built on top of a Graph reproducible. Internally vertices are
     * also addressed by their dense index in that order.
     */
    class Graph
    {
        private:
            std::vector<std::string> _labels;
            std::unordered_map<std::string, int> _index;
            std::vector<std::vector<int>> _neighbours;
            std::vector<std::pair<int, int>> _edges;
            std::vector<std::vector<bool>> _adjacency;

        public:
            Graph() = default;

            /// Adds a vertex, returning its index. Duplicate labels are rejected.
            auto add_vertex(std::string label) -> int;

            /// Adds an edge. Returns false if it was already present. Loops and
            /// unknown endpoints throw std::invalid_argument.
            auto add_edge(std::string_view a, std::string_view b) -> bool;
            auto add_edge(int a, int b) -> bool;

            [[nodiscard]] auto size() const -> int { return static_cast<int>(_labels.size()); }
            [[nodiscard]] auto edge_count() const -> int { return static_cast<int>(_edges.size()); }

            [[nodiscard]] auto label(int v) const -> const std::string & { return _labels.at(v); }
            [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
            [[nodiscard]] auto find(std::string_view label) const -> std::optional<int>;
            [[nodiscard]] auto index(std::string_view label) const -> int;
            [[nodiscard]] auto contains(std::string_view label) const -> bool { return find(label).has_value(); }

            [[nodiscard]] auto adjacent(int a, int b) const -> bool { return _adjacency[a][b]; }
            [[nodiscard]] auto adjacent(std::string_view a, std::string_view b) const -> bool;
            [[nodiscard]] auto neighbours(int v) const -> const std::vector<int> & { return _neighbours.at(v); }
            [[nodiscard]] auto degree(int v) const -> int { return static_cast<int>(_neighbours.at(v).size()); }

            /// Edges as index pairs, in insertion order.
            [[nodiscard]] auto edges() const -> const std::vector<std::pair<int, int>> & { return _edges; }

            auto operator== (const Graph & other) const -> bool;
    };

    /// Vertex label to vertex label, used for homomorphisms and quotient projections.
    using VertexMap = std::map<std::string, std::string>;

    /**
     * A graph whose distinguished vertices carry role names such as "T",
     * "xPos(3)" or "c12(1)". Roles are kept in insertion order.
     */
    struct LabeledGraph
    {
        Graph graph;
        std::vector<std::pair<std::string, std::string>> roles;

        /// Registers role -> label. The role must be new and the label an existing,
        /// not yet named vertex.
        auto add_role(std::string role, std::string label) -> void;

        /// Label of the vertex playing the given role; throws std::out_of_range if absent.
        [[nodiscard]] auto at(std::string_view role) const -> const std::string &;
        [[nodiscard]] auto find_role(std::string_view role) const -> std::optional<std::string>;

        auto operator== (const LabeledGraph &) const -> bool = default;
    };

    /// Splits a graph into its connected components, each keeping the original labels.
    auto connected_components(const Graph & graph) -> std::vector<Graph>;

    auto is_connected(const Graph & graph) -> bool;

    /// Induced subgraph on the given vertex indices, in the given order.
    auto induced_subgraph(const Graph & graph, const std::vector<int> & vertices) -> Graph;
}

#endif
