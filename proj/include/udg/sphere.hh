#ifndef UDG_GUARD_UDG_SPHERE_HH
#define UDG_GUARD_UDG_SPHERE_HH 1

#include <udg/embedding.hh>

#include <variant>

namespace udg
{
    /// The sphere of the given radius about centre in R^k, k = centre.size().
    struct Sphere
    {
        Point centre;
        double radius = 0.0;

        [[nodiscard]] auto dimension() const -> int { return static_cast<int>(centre.size()); }
    };

    struct Disjoint
    {
    };

    struct Coincident
    {
    };

    struct TangentPoint
    {
        Point point;
    };

    /**
     * Intersection of two spheres in R^k that meet in more than one point:
     * a sphere of dimension k - 1 living in the hyperplane through centre
     * with the given unit normal. offset is the signed distance of that
     * hyperplane from the first sphere's centre along the normal, which
     * points from the first centre to the second.
     */
    struct ReducedSphere
    {
        int dimension = 0;
        double offset = 0.0;
        Point centre;
        Point normal;
        double radius = 0.0;
    };

    using IntersectionResult = std::variant<Disjoint, TangentPoint, ReducedSphere, Coincident>;

    /// Relative tolerance on ||a| - r| for reporting tangency.
    inline constexpr double tangency_tolerance = 1e-12;

    /**
     * Intersects two spheres of the same dimension k > 1. In the frame where
     * the first centre is the origin and the second lies at distance c on
     * the first axis, the intersection lies on x1 = a with
     * a = (r^2 + c^2 - R^2) / (2c) and has radius sqrt(r^2 - a^2).
     */
    auto sphere_intersection(const Sphere & first, const Sphere & second) -> IntersectionResult;

    /**
     * An orthonormal basis of the hyperplane orthogonal to normal; the
     * returned k - 1 vectors span the reduced sphere's directions.
     */
    auto orthonormal_complement(const Point & normal) -> std::vector<Point>;

    /// The point centre + radius * sum(coefficients[i] * basis[i]) after normalising coefficients.
    auto point_on(const ReducedSphere & sphere, const std::vector<double> & coefficients) -> Point;

    /// Distance between the two sphere surfaces; zero when they meet.
    auto surface_gap(const Sphere & first, const Sphere & second) -> double;

    auto describe(const IntersectionResult & result) -> std::string;
}

#endif
