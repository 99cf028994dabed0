#ifndef UDG_GUARD_UDG_DEGENERATE_HH
#define UDG_GUARD_UDG_DEGENERATE_HH 1

#include <udg/embed.hh>
#include <udg/embedding.hh>
#include <udg/graph.hh>
#include <udg/homomorphism.hh>

#include <optional>
#include <string>
#include <vector>

namespace udg
{
    using Partition = std::vector<std::vector<std::string>>;

    /**
     * Every partition of the vertices into independent sets with at least
     * one block of two or more vertices. Finest partitions come first
     * (most blocks), ties broken by the restricted growth string of the
     * partition in vertex order. Throws CapExceeded above max_vertices.
     */
    auto degenerate_partitions(const Graph & graph, int max_vertices = 10) -> std::vector<Partition>;

    /// Draws every source vertex at the point of its image.
    auto pull_back(const Graph & source, const Homomorphism & mapping, const Embedding & target_embedding) -> Embedding;

    struct DegenerateRepresentation
    {
        Partition partition;
        Graph quotient;
        Homomorphism projection;

        /// Realization of the quotient.
        Embedding quotient_embedding;

        /// The induced degenerate representation of the original graph.
        Embedding embedding;

        /// Position of the partition in degenerate_partitions order.
        int partition_index = 0;
    };

    struct DegenerateSearchOptions
    {
        /// Most partitions to try.
        int budget = 1000;
        EmbedOptions embed;

        /// OpenMP threads over candidate partitions; the lowest index still wins.
        int threads = 1;
    };

    /**
     * Looks for a degenerate unit-distance representation of graph in R^k by
     * identifying independent vertex sets and realizing the quotient.
     */
    auto degenerate_representation_search(const Graph & graph, int k, const DegenerateSearchOptions & options = {})
        -> std::optional<DegenerateRepresentation>;
}

#endif
