#ifndef UDG_GUARD_UDG_EMBEDDING_HH
#define UDG_GUARD_UDG_EMBEDDING_HH 1

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace udg
{
    using Point = std::vector<double>;

    auto distance(const Point & a, const Point & b) -> double;

    /**
     * Vertex label to point in R^k. Points keep insertion order, which is
     * also the order they are written in.
     */
    class Embedding
    {
        private:
            int _dimension = 0;
            std::vector<std::string> _labels;
            std::vector<Point> _points;
            std::unordered_map<std::string, int> _index;

        public:
            explicit Embedding(int dimension = 0);

            [[nodiscard]] auto dimension() const -> int { return _dimension; }
            [[nodiscard]] auto size() const -> int { return static_cast<int>(_points.size()); }

            /// Adds or replaces a point; it must have dimension() finite coordinates.
            auto set(const std::string & label, Point point) -> void;

            [[nodiscard]] auto contains(std::string_view label) const -> bool;
            [[nodiscard]] auto at(std::string_view label) const -> const Point &;
            [[nodiscard]] auto labels() const -> const std::vector<std::string> & { return _labels; }
            [[nodiscard]] auto points() const -> const std::vector<Point> & { return _points; }

            auto operator== (const Embedding & other) const -> bool;
    };

    // Text format: "embedding <k>" then "p <label> <x1> ... <xk>" per vertex,
    // coordinates printed with 17 significant digits.
    auto write_embedding(std::ostream & out, const Embedding & embedding) -> void;
    auto read_embedding(std::istream & in) -> Embedding;
    auto to_string(const Embedding & embedding) -> std::string;
    auto load_embedding(const std::string & path) -> Embedding;
    auto save_embedding(const std::string & path, const Embedding & embedding) -> void;
}

#endif
