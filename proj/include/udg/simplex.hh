#ifndef UDG_GUARD_UDG_SIMPLEX_HH
#define UDG_GUARD_UDG_SIMPLEX_HH 1

#include <udg/embedding.hh>

namespace udg
{
    /// Circumradius of the regular simplex with k + 1 vertices and the given side: side * sqrt(k / (2(k + 1))).
    auto simplex_circumradius(int k, double side) -> double;

    /**
     * The k + 1 vertices of a regular simplex in R^k with centroid at the
     * origin, labelled "0".."k". Built from the standard basis of R^(k+1)
     * expressed in the Helmert basis of the hyperplane sum(x) = 0.
     */
    auto regular_simplex_coords(int k, double side) -> Embedding;
}

#endif
