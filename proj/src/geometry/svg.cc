#include <udg/svg.hh>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

using namespace udg;

using std::string;
using std::vector;

namespace
{
    auto num(double x) -> string
    {
        char buffer[32];
        std::snprintf(buffer, sizeof(buffer), "%.6f", x == 0.0 ? 0.0 : x);
        return buffer;
    }

    auto escape(const string & text) -> string
    {
        string out;
        for (char c : text) {
            switch (c) {
                case '<': out += "&lt;"; break;
                case '>': out += "&gt;"; break;
                case '&': out += "&amp;"; break;
                case '"': out += "&quot;"; break;
                case '\'': out += "&apos;"; break;
                default: out += c;
            }
        }
        return out;
    }
}

auto udg::render_svg(const Graph & graph, const Embedding & embedding, double tol) -> string
{
    if (embedding.dimension() != 2)
        throw std::invalid_argument("render_svg needs a 2-dimensional embedding");

    vector<Point> points;
    for (auto & label : graph.labels()) {
        if (! embedding.contains(label))
            throw std::invalid_argument("embedding has no point for vertex '" + label + "'");
        // SVG's y axis points down.
        auto & p = embedding.at(label);
        points.push_back({ p[0], -p[1] });
    }

    double min_x = 0.0, max_x = 0.0, min_y = 0.0, max_y = 0.0;
    if (! points.empty()) {
        min_x = min_y = std::numeric_limits<double>::infinity();
        max_x = max_y = -min_x;
        for (auto & p : points) {
            min_x = std::min(min_x, p[0]);
            max_x = std::max(max_x, p[0]);
            min_y = std::min(min_y, p[1]);
            max_y = std::max(max_y, p[1]);
        }
    }
    double margin = 0.15;
    double width = max_x - min_x + 2 * margin, height = max_y - min_y + 2 * margin;

    string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" + num(min_x - margin) + " " + num(min_y - margin)
        + " " + num(width) + " " + num(height) + "\" width=\"" + num(width * 400) + "\" height=\""
        + num(height * 400) + "\">\n";

    svg += "  <g stroke-linecap=\"round\">\n";
    for (auto & [a, b] : graph.edges()) {
        bool unit = std::abs(distance(points[a], points[b]) - 1.0) < tol;
        svg += "    <line x1=\"" + num(points[a][0]) + "\" y1=\"" + num(points[a][1]) + "\" x2=\""
            + num(points[b][0]) + "\" y2=\"" + num(points[b][1]) + "\" stroke=\""
            + (unit ? "black" : "red") + "\" stroke-width=\"0.01\""
            + (unit ? "" : " stroke-dasharray=\"0.03 0.02\"") + "/>\n";
    }
    svg += "  </g>\n";

    vector<bool> shared(points.size(), false);
    for (std::size_t a = 0 ; a < points.size() ; ++a)
        for (std::size_t b = a + 1 ; b < points.size() ; ++b)
            if (distance(points[a], points[b]) < tol)
                shared[a] = shared[b] = true;

    svg += "  <g font-size=\"0.06\" font-family=\"sans-serif\">\n";
    for (std::size_t v = 0 ; v < points.size() ; ++v) {
        auto & p = points[v];
        if (shared[v])
            svg += "    <circle cx=\"" + num(p[0]) + "\" cy=\"" + num(p[1])
                + "\" r=\"0.05\" fill=\"none\" stroke=\"orange\" stroke-width=\"0.015\"/>\n";
        svg += "    <circle cx=\"" + num(p[0]) + "\" cy=\"" + num(p[1]) + "\" r=\"0.03\" fill=\""
            + (shared[v] ? "orange" : "steelblue") + "\"><title>" + escape(graph.label(static_cast<int>(v)))
            + "</title></circle>\n";
        svg += "    <text x=\"" + num(p[0] + 0.04) + "\" y=\"" + num(p[1] - 0.04) + "\">"
            + escape(graph.label(static_cast<int>(v))) + "</text>\n";
    }
    svg += "  </g>\n</svg>\n";
    return svg;
}
