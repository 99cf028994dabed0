#ifndef UDG_GUARD_UDG_SVG_HH
#define UDG_GUARD_UDG_SVG_HH 1

#include <udg/embedding.hh>
#include <udg/graph.hh>

#include <string>

namespace udg
{
    /**
     * Draws a planar embedding as SVG in embedding units: vertices as circles
     * of radius 0.03, edges as lines (non-unit edges dashed red), and points
     * shared by several vertices ringed in orange. The view box is fitted to
     * the points with a margin.
     */
    auto render_svg(const Graph & graph, const Embedding & embedding, double tol = 1e-6) -> std::string;
}

#endif
