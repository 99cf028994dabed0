#ifndef UDG_GUARD_UDG_EMBED_HH
#define UDG_GUARD_UDG_EMBED_HH 1

#include <udg/embedding.hh>
#include <udg/graph.hh>

#include <cstdint>
#include <optional>

namespace udg
{
    struct EmbedOptions
    {
        int restarts = 200;
        int max_iterations = 300;
        std::uint64_t seed = 1;

        /// Success threshold on the largest | ||p_u - p_v|| - 1 | over edges.
        double tolerance = 1e-9;

        /// Non-adjacent vertices closer than this are penalised, so a success is
        /// a realization rather than a degenerate representation.
        double separation = 0.05;

        /// OpenMP threads for the restart loop; 1 runs serially.
        int threads = 1;
    };

    struct EmbedReport
    {
        std::optional<Embedding> embedding;

        /// Index of the winning restart, or -1.
        int successful_restart = -1;

        /// Restarts up to and including the winner, or all of them on failure.
        int restarts_considered = 0;

        /// Smallest, over the considered restarts, of the largest residual
        /// component (edge length error or separation shortfall).
        double best_residual = 0.0;
    };

    /**
     * Multi-start Levenberg-Marquardt search for a unit-distance realization
     * of a connected graph in R^k. Each restart starts from seeded uniform
     * points in [-1, 1]^k, pins the first vertex at the origin and its first
     * neighbour to the first axis, and minimises the squared edge length
     * errors plus separation penalties. Restarts are independent and may run
     * in parallel; the lowest successful restart index always wins.
     *
     * A failure is only evidence, never a proof, that no realization exists.
     */
    auto embed_search(const Graph & graph, int k, const EmbedOptions & options = {}) -> EmbedReport;

    /// Reference implementation of embed_search that never uses threads.
    auto embed_search_serial(const Graph & graph, int k, const EmbedOptions & options = {}) -> EmbedReport;

    auto embed_unit_distance(const Graph & graph, int k, const EmbedOptions & options = {}) -> std::optional<Embedding>;

    /**
     * Embeds each connected component separately and translates them apart
     * along the first axis. Fails if any component fails.
     */
    auto embed_components(const Graph & graph, int k, const EmbedOptions & options = {}) -> std::optional<Embedding>;

    /// Sum over edges of (||p_u - p_v|| - 1)^2.
    auto stress(const Graph & graph, const Embedding & embedding) -> double;

    /// Analytic gradient of stress, one Point per vertex in graph order.
    auto stress_gradient(const Graph & graph, const Embedding & embedding) -> std::vector<Point>;

    /// Largest absolute difference between stress_gradient and central finite differences.
    auto gradient_check(const Graph & graph, const Embedding & embedding, double step = 1e-6) -> double;
}

#endif
