#include <udg/simplex.hh>

#include <cmath>
#include <stdexcept>
#include <string>

using namespace udg;

auto udg::simplex_circumradius(int k, double side) -> double
{
    if (k < 1 || ! (side > 0.0))
        throw std::invalid_argument("simplex_circumradius: need k >= 1 and side > 0");
    return side * std::sqrt(static_cast<double>(k) / (2.0 * (k + 1)));
}

auto udg::regular_simplex_coords(int k, double side) -> Embedding
{
    if (k < 1 || ! (side > 0.0))
        throw std::invalid_argument("regular_simplex_coords: need k >= 1 and side > 0");

    // The standard basis vectors of R^(k+1) are pairwise sqrt(2) apart. Helmert
    // row j (1-based, j = 1..k) is (1, ..., 1, -j, 0, ...) / sqrt(j(j+1)) with j
    // leading ones; the rows are orthonormal and orthogonal to (1, ..., 1).
    double scale = side / std::sqrt(2.0);
    Embedding result(k);
    for (int i = 0 ; i <= k ; ++i) {
        Point p(k, 0.0);
        for (int j = 1 ; j <= k ; ++j) {
            double norm = std::sqrt(static_cast<double>(j) * (j + 1));
            double entry = i < j ? 1.0 : (i == j ? -static_cast<double>(j) : 0.0);
            p[j - 1] = scale * entry / norm;
        }
        result.set(std::to_string(i), std::move(p));
    }
    return result;
}
