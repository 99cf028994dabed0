#include <udg/sphere.hh>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

using namespace udg;

using std::vector;

namespace
{
    auto dot(const Point & a, const Point & b) -> double
    {
        double sum = 0.0;
        for (std::size_t i = 0 ; i < a.size() ; ++i)
            sum += a[i] * b[i];
        return sum;
    }

    auto format_number(double x) -> std::string
    {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.6g", x);
        return buffer;
    }
}

auto udg::sphere_intersection(const Sphere & first, const Sphere & second) -> IntersectionResult
{
    int k = first.dimension();
    if (k != second.dimension())
        throw std::invalid_argument("sphere_intersection: dimension mismatch");
    if (k < 2)
        throw std::invalid_argument("sphere_intersection: dimension must be at least 2");
    if (first.radius < 0.0 || second.radius < 0.0)
        throw std::invalid_argument("sphere_intersection: negative radius");

    double r = first.radius, big_r = second.radius;
    double c = distance(first.centre, second.centre);

    if (c == 0.0)
        return r == big_r ? IntersectionResult{ Coincident{} } : IntersectionResult{ Disjoint{} };

    Point normal(k);
    for (int i = 0 ; i < k ; ++i)
        normal[i] = (second.centre[i] - first.centre[i]) / c;

    double a = (r * r + c * c - big_r * big_r) / (2.0 * c);
    auto along = [&] (double t) {
        Point p(k);
        for (int i = 0 ; i < k ; ++i)
            p[i] = first.centre[i] + t * normal[i];
        return p;
    };

    if (std::abs(std::abs(a) - r) <= tangency_tolerance * std::max(1.0, r))
        return TangentPoint{ along(a < 0.0 ? -r : r) };

    double squared = r * r - a * a;
    if (squared < 0.0)
        return Disjoint{};

    return ReducedSphere{ k - 1, a, along(a), normal, std::sqrt(squared) };
}

auto udg::orthonormal_complement(const Point & normal) -> vector<Point>
{
    int k = static_cast<int>(normal.size());
    vector<Point> basis{ normal };
    double n = std::sqrt(dot(normal, normal));
    for (auto & x : basis[0])
        x /= n;

    // Gram-Schmidt over the standard basis, skipping nearly dependent vectors.
    for (int axis = 0 ; axis < k && static_cast<int>(basis.size()) < k ; ++axis) {
        Point candidate(k, 0.0);
        candidate[axis] = 1.0;
        for (auto & b : basis) {
            double projection = dot(candidate, b);
            for (int i = 0 ; i < k ; ++i)
                candidate[i] -= projection * b[i];
        }
        double length = std::sqrt(dot(candidate, candidate));
        if (length < 1e-6)
            continue;
        for (auto & x : candidate)
            x /= length;
        basis.push_back(std::move(candidate));
    }
    basis.erase(basis.begin());
    return basis;
}

auto udg::point_on(const ReducedSphere & sphere, const vector<double> & coefficients) -> Point
{
    auto basis = orthonormal_complement(sphere.normal);
    if (coefficients.size() != basis.size())
        throw std::invalid_argument("point_on: need one coefficient per basis direction");

    double norm = std::sqrt(dot(coefficients, coefficients));
    if (norm == 0.0)
        throw std::invalid_argument("point_on: zero direction");

    Point p = sphere.centre;
    for (std::size_t b = 0 ; b < basis.size() ; ++b)
        for (std::size_t i = 0 ; i < p.size() ; ++i)
            p[i] += sphere.radius * coefficients[b] / norm * basis[b][i];
    return p;
}

auto udg::surface_gap(const Sphere & first, const Sphere & second) -> double
{
    double c = distance(first.centre, second.centre);
    double outside = c - first.radius - second.radius;
    double nested = std::abs(first.radius - second.radius) - c;
    return std::max({ 0.0, outside, nested });
}

auto udg::describe(const IntersectionResult & result) -> std::string
{
    struct Describer
    {
        auto operator() (const Disjoint &) const -> std::string { return "disjoint"; }
        auto operator() (const Coincident &) const -> std::string { return "coincident"; }

        auto operator() (const TangentPoint & t) const -> std::string
        {
            std::string s = "tangent point (";
            for (std::size_t i = 0 ; i < t.point.size() ; ++i)
                s += (i ? ", " : "") + format_number(t.point[i]);
            return s + ")";
        }

        auto operator() (const ReducedSphere & s) const -> std::string
        {
            return "sphere dim " + std::to_string(s.dimension) + ", a=" + format_number(s.offset)
                + ", radius=" + format_number(s.radius);
        }
    };
    return std::visit(Describer{}, result);
}
