#include <udg/embedding.hh>
#include <udg/errors.hh>
#include <udg/graph_io.hh>

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

using namespace udg;

using std::string;
using std::string_view;

auto udg::distance(const Point & a, const Point & b) -> double
{
    double sum = 0.0;
    for (std::size_t i = 0 ; i < a.size() ; ++i) {
        double d = a[i] - b[i];
        sum += d * d;
    }
    return std::sqrt(sum);
}

Embedding::Embedding(int dimension) :
    _dimension(dimension)
{
    if (dimension < 0)
        throw std::invalid_argument("negative embedding dimension");
}

auto Embedding::set(const string & label, Point point) -> void
{
    if (static_cast<int>(point.size()) != _dimension)
        throw std::invalid_argument("point for '" + label + "' has " + std::to_string(point.size())
                + " coordinates, expected " + std::to_string(_dimension));
    for (double x : point)
        if (! std::isfinite(x))
            throw std::invalid_argument("point for '" + label + "' has a non-finite coordinate");

    auto i = _index.find(label);
    if (i != _index.end()) {
        _points[i->second] = std::move(point);
        return;
    }
    _index.emplace(label, size());
    _labels.push_back(label);
    _points.push_back(std::move(point));
}

auto Embedding::contains(string_view label) const -> bool
{
    return _index.contains(string{label});
}

auto Embedding::at(string_view label) const -> const Point &
{
    auto i = _index.find(string{label});
    if (i == _index.end())
        throw std::out_of_range("embedding has no point for '" + string{label} + "'");
    return _points[i->second];
}

auto Embedding::operator== (const Embedding & other) const -> bool
{
    return _dimension == other._dimension && _labels == other._labels && _points == other._points;
}

auto udg::write_embedding(std::ostream & out, const Embedding & embedding) -> void
{
    out << "embedding " << embedding.dimension() << '\n';
    char buffer[64];
    for (int i = 0 ; i < embedding.size() ; ++i) {
        out << "p " << embedding.labels()[i];
        for (double x : embedding.points()[i]) {
            // %.17g round-trips every double exactly.
            std::snprintf(buffer, sizeof(buffer), "%.17g", x == 0.0 ? 0.0 : x);
            out << ' ' << buffer;
        }
        out << '\n';
    }
}

auto udg::read_embedding(std::istream & in) -> Embedding
{
    std::optional<Embedding> result;
    string line;
    int line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        if (! line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;

        auto fail = [&] (const string & what) {
            return ParseError("embedding line " + std::to_string(line_number) + ": " + what);
        };

        std::istringstream fields(line);
        string kind;
        fields >> kind;
        if (! result) {
            int k = -1;
            if (kind != "embedding" || ! (fields >> k) || k < 1)
                throw fail("expected header 'embedding <k>' with k >= 1");
            result.emplace(k);
        }
        else if (kind == "p") {
            string label;
            if (! (fields >> label))
                throw fail("point line without label");
            if (result->contains(label))
                throw fail("duplicate point for '" + label + "'");
            Point point;
            string token;
            while (fields >> token) {
                std::size_t used = 0;
                double x = 0.0;
                try {
                    x = std::stod(token, &used);
                }
                catch (const std::exception &) {
                    throw fail("bad coordinate '" + token + "'");
                }
                if (used != token.size() || ! std::isfinite(x))
                    throw fail("bad coordinate '" + token + "'");
                point.push_back(x);
            }
            if (static_cast<int>(point.size()) != result->dimension())
                throw fail("expected " + std::to_string(result->dimension()) + " coordinates");
            result->set(label, std::move(point));
        }
        else
            throw fail("unknown line kind '" + kind + "'");
    }
    if (! result)
        throw ParseError("embedding: missing header");
    return *result;
}

auto udg::to_string(const Embedding & embedding) -> string
{
    std::ostringstream out;
    write_embedding(out, embedding);
    return out.str();
}

auto udg::load_embedding(const string & path) -> Embedding
{
    std::istringstream in(read_text_file(path));
    return read_embedding(in);
}

auto udg::save_embedding(const string & path, const Embedding & embedding) -> void
{
    write_text_file(path, to_string(embedding));
}
