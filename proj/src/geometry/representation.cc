#include <udg/graph_oracles.hh>
#include <udg/representation.hh>

#include <cmath>

using namespace udg;

using std::optional;
using std::vector;

auto udg::verify_representation(const Graph & graph, const Embedding & embedding, double tol) -> RepresentationReport
{
    vector<const Point *> points;
    for (auto & label : graph.labels()) {
        if (! embedding.contains(label))
            throw std::invalid_argument("embedding has no point for vertex '" + label + "'");
        points.push_back(&embedding.at(label));
    }

    RepresentationReport report;
    bool injective = true;
    for (int a = 0 ; a < graph.size() ; ++a)
        for (int b = a + 1 ; b < graph.size() ; ++b) {
            double d = distance(*points[a], *points[b]);
            if (graph.adjacent(a, b)) {
                report.max_edge_residual = std::max(report.max_edge_residual, std::abs(d - 1.0));
                if (d < tol)
                    injective = false;
            }
            else if (d < tol) {
                report.coincident_nonadjacent_pairs.emplace_back(graph.label(a), graph.label(b));
                injective = false;
            }
            else if (std::abs(d - 1.0) < tol)
                report.unit_nonadjacent_pairs.emplace_back(graph.label(a), graph.label(b));
        }

    report.is_realization = injective && report.max_edge_residual < tol;
    report.is_strict = report.is_realization && report.unit_nonadjacent_pairs.empty();
    return report;
}

auto udg::estimate_dimension(const Graph & graph, int k_max, const EmbedOptions & options) -> DimensionEstimate
{
    if (! is_connected(graph) || graph.size() == 0)
        throw std::invalid_argument("estimate_dimension needs a connected non-empty graph");

    DimensionEstimate result;
    if (graph.size() == 1) {
        result.upper = 0;
        return result;
    }

    result.lower = is_path(graph) ? 1 : 2;
    for (int k = 1 ; k <= k_max ; ++k) {
        auto e = embed_unit_distance(graph, k, options);
        if (e && verify_representation(graph, *e, options.tolerance).is_realization) {
            result.upper = k;
            break;
        }
    }
    return result;
}

auto udg::unit_triangle_circumradius() -> double
{
    return 1.0 / std::sqrt(3.0);
}

auto udg::circle_occupancy_coloring(const Graph & graph, const Embedding & embedding, const Point & centre,
        double tol) -> optional<vector<int>>
{
    if (embedding.dimension() != 2 || centre.size() != 2)
        throw std::invalid_argument("circle occupancy needs a planar embedding");

    double radius = unit_triangle_circumradius();
    vector<Point> points;
    for (auto & label : graph.labels()) {
        if (! embedding.contains(label))
            throw std::invalid_argument("embedding has no point for vertex '" + label + "'");
        auto & p = embedding.at(label);
        if (std::abs(distance(p, centre) - radius) > tol)
            throw OffCircle("vertex '" + label + "' is not on the circle of radius 1/sqrt(3)");
        points.push_back(p);
    }
    for (auto & [a, b] : graph.edges())
        if (std::abs(distance(points[a], points[b]) - 1.0) > tol)
            throw NonUnitEdge("edge " + graph.label(a) + " ~ " + graph.label(b) + " is not of unit length");

    vector<Point> locations;
    vector<int> color;
    for (auto & p : points) {
        int found = -1;
        for (std::size_t c = 0 ; c < locations.size() ; ++c)
            if (distance(p, locations[c]) < tol) {
                found = static_cast<int>(c);
                break;
            }
        if (found == -1) {
            if (locations.size() == 3)
                return std::nullopt;
            locations.push_back(p);
            found = static_cast<int>(locations.size()) - 1;
        }
        color.push_back(found + 1);
    }
    return color;
}
