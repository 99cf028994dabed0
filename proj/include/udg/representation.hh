#ifndef UDG_GUARD_UDG_REPRESENTATION_HH
#define UDG_GUARD_UDG_REPRESENTATION_HH 1

#include <udg/embed.hh>
#include <udg/embedding.hh>
#include <udg/graph.hh>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace udg
{
    struct RepresentationReport
    {
        /// Largest | ||p_u - p_v|| - 1 | over edges.
        double max_edge_residual = 0.0;

        /// Non-adjacent pairs drawn on the same point (closer than tol).
        std::vector<std::pair<std::string, std::string>> coincident_nonadjacent_pairs;

        /// Non-adjacent pairs at distance 1 within tol.
        std::vector<std::pair<std::string, std::string>> unit_nonadjacent_pairs;

        /// Unit-distance representation whose vertex map is injective.
        bool is_realization = false;

        /// Realization in which no non-adjacent pair is at unit distance.
        bool is_strict = false;

        [[nodiscard]] auto is_representation(double tol) const -> bool { return max_edge_residual < tol; }
    };

    /// Checks an embedding against the graph. Throws std::invalid_argument
    /// if some vertex has no point.
    auto verify_representation(const Graph & graph, const Embedding & embedding, double tol = 1e-9)
        -> RepresentationReport;

    struct DimensionEstimate
    {
        int lower = 0;
        std::optional<int> upper;
    };

    /**
     * Bounds on the unit-distance dimension of a connected graph. The lower
     * bound is 0 for K1, 1 for paths and 2 otherwise; the upper bound is the
     * smallest k <= k_max at which embed_unit_distance succeeded.
     */
    auto estimate_dimension(const Graph & graph, int k_max, const EmbedOptions & options = {}) -> DimensionEstimate;

    class OffCircle : public std::invalid_argument
    {
        public:
            explicit OffCircle(const std::string & message) : std::invalid_argument(message) { }
    };

    class NonUnitEdge : public std::invalid_argument
    {
        public:
            explicit NonUnitEdge(const std::string & message) : std::invalid_argument(message) { }
    };

    /// Radius of the circle through a unit equilateral triangle, 1 / sqrt(3).
    auto unit_triangle_circumradius() -> double;

    /**
     * For a planar unit-distance representation with every point on the
     * circle of radius 1/sqrt(3) about centre, groups the points into
     * locations (within tol) and returns color 1.. per vertex in graph order.
     * Such a representation can occupy at most three locations, so more
     * than three means the input is inconsistent and nothing is returned.
     * Throws OffCircle or NonUnitEdge when the preconditions fail.
     */
    auto circle_occupancy_coloring(const Graph & graph, const Embedding & embedding, const Point & centre,
            double tol = 1e-6) -> std::optional<std::vector<int>>;
}

#endif
