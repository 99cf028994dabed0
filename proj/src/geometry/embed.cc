#include <udg/embed.hh>
#include <udg/representation.hh>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace udg;

using std::vector;

namespace
{
    struct Problem
    {
        int n = 0;
        int k = 0;
        vector<std::pair<int, int>> edges;
        vector<std::pair<int, int>> non_edges;

        // Coordinate (vertex * k + axis) -> column, or -1 when pinned.
        vector<int> column;
        int free_count = 0;
    };

    struct Attempt
    {
        vector<double> coords;
        double worst_edge = 0.0;
        double worst_separation = 0.0;

        [[nodiscard]] auto worst() const -> double { return std::max(worst_edge, worst_separation); }
    };

    auto make_problem(const Graph & graph, int k) -> Problem
    {
        Problem p;
        p.n = graph.size();
        p.k = k;
        p.edges = graph.edges();
        for (int a = 0 ; a < p.n ; ++a)
            for (int b = a + 1 ; b < p.n ; ++b)
                if (! graph.adjacent(a, b))
                    p.non_edges.emplace_back(a, b);

        p.column.assign(p.n * k, 0);
        // Vertex 0 at the origin, its first neighbour on the first axis.
        for (int axis = 0 ; axis < k ; ++axis)
            p.column[axis] = -1;
        if (graph.degree(0) > 0) {
            int anchor = graph.neighbours(0).front();
            for (int axis = 1 ; axis < k ; ++axis)
                p.column[anchor * k + axis] = -1;
        }
        for (auto & c : p.column)
            if (c != -1)
                c = p.free_count++;
        return p;
    }

    auto pair_distance(const Problem & p, const vector<double> & x, int a, int b) -> double
    {
        double sum = 0.0;
        for (int axis = 0 ; axis < p.k ; ++axis) {
            double d = x[a * p.k + axis] - x[b * p.k + axis];
            sum += d * d;
        }
        return std::sqrt(sum);
    }

    auto measure(const Problem & p, const vector<double> & x, double separation) -> std::pair<double, double>
    {
        double worst_edge = 0.0, worst_separation = 0.0;
        for (auto & [a, b] : p.edges)
            worst_edge = std::max(worst_edge, std::abs(pair_distance(p, x, a, b) - 1.0));
        for (auto & [a, b] : p.non_edges)
            worst_separation = std::max(worst_separation, separation - pair_distance(p, x, a, b));
        return { worst_edge, worst_separation };
    }

    auto cost(const Problem & p, const vector<double> & x, double separation) -> double
    {
        double sum = 0.0;
        for (auto & [a, b] : p.edges) {
            double r = pair_distance(p, x, a, b) - 1.0;
            sum += r * r;
        }
        for (auto & [a, b] : p.non_edges) {
            double r = separation - pair_distance(p, x, a, b);
            if (r > 0.0)
                sum += r * r;
        }
        return 0.5 * sum;
    }

    // Appends one residual row: sign * (||x_a - x_b|| - target).
    auto add_row(const Problem & p, const vector<double> & x, int a, int b, double residual, double sign,
            Eigen::MatrixXd & jacobian, Eigen::VectorXd & residuals, int row) -> void
    {
        double d = pair_distance(p, x, a, b);
        residuals[row] = residual;
        for (int axis = 0 ; axis < p.k ; ++axis) {
            double diff = x[a * p.k + axis] - x[b * p.k + axis];
            // Coincident points have no gradient direction; fall back to the first axis.
            double unit = d > 1e-300 ? diff / d : (axis == 0 ? 1.0 : 0.0);
            if (int c = p.column[a * p.k + axis] ; c != -1)
                jacobian(row, c) += sign * unit;
            if (int c = p.column[b * p.k + axis] ; c != -1)
                jacobian(row, c) -= sign * unit;
        }
    }

    auto linearise(const Problem & p, const vector<double> & x, double separation,
            Eigen::MatrixXd & jacobian, Eigen::VectorXd & residuals) -> void
    {
        vector<std::pair<int, int>> active;
        for (auto & [a, b] : p.non_edges)
            if (pair_distance(p, x, a, b) < separation)
                active.emplace_back(a, b);

        int rows = static_cast<int>(p.edges.size() + active.size());
        jacobian.setZero(rows, p.free_count);
        residuals.setZero(rows);

        int row = 0;
        for (auto & [a, b] : p.edges) {
            double r = pair_distance(p, x, a, b) - 1.0;
            add_row(p, x, a, b, r, 1.0, jacobian, residuals, row++);
        }
        for (auto & [a, b] : active) {
            double r = separation - pair_distance(p, x, a, b);
            add_row(p, x, a, b, r, -1.0, jacobian, residuals, row++);
        }
    }

    auto run_restart(const Problem & p, const EmbedOptions & options, int restart) -> Attempt
    {
        std::seed_seq seq{ static_cast<std::uint32_t>(options.seed), static_cast<std::uint32_t>(options.seed >> 32),
            static_cast<std::uint32_t>(restart) };
        std::mt19937_64 rng(seq);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);

        vector<double> x(p.n * p.k);
        for (auto & value : x)
            value = uniform(rng);
        for (int i = 0 ; i < p.n * p.k ; ++i)
            if (p.column[i] == -1)
                x[i] = 0.0;

        Attempt attempt;
        double target = options.tolerance * 1e-3;
        double lambda = 1e-3;
        double current = cost(p, x, options.separation);

        Eigen::MatrixXd jacobian;
        Eigen::VectorXd residuals;
        vector<double> trial(x.size());

        for (int iteration = 0 ; iteration < options.max_iterations && p.free_count > 0 ; ++iteration) {
            auto [worst_edge, worst_separation] = measure(p, x, options.separation);
            if (worst_edge < target && worst_separation <= 0.0)
                break;

            linearise(p, x, options.separation, jacobian, residuals);
            Eigen::MatrixXd normal = jacobian.transpose() * jacobian;
            Eigen::VectorXd gradient = jacobian.transpose() * residuals;
            if (gradient.lpNorm<Eigen::Infinity>() < 1e-300)
                break;

            bool improved = false;
            while (lambda < 1e16) {
                Eigen::MatrixXd damped = normal;
                for (int c = 0 ; c < p.free_count ; ++c)
                    damped(c, c) += lambda * std::max(normal(c, c), 1e-9);
                Eigen::VectorXd step = damped.ldlt().solve(-gradient);

                for (std::size_t i = 0 ; i < x.size() ; ++i)
                    trial[i] = p.column[i] == -1 ? x[i] : x[i] + step[p.column[i]];
                double next = cost(p, trial, options.separation);
                if (std::isfinite(next) && next < current) {
                    x.swap(trial);
                    current = next;
                    lambda = std::max(lambda / 3.0, 1e-12);
                    improved = true;
                    break;
                }
                lambda *= 4.0;
            }
            if (! improved)
                break;
        }

        auto [worst_edge, worst_separation] = measure(p, x, options.separation);
        attempt.coords = std::move(x);
        attempt.worst_edge = worst_edge;
        attempt.worst_separation = std::max(0.0, worst_separation);
        return attempt;
    }

    auto succeeded(const Attempt & attempt, const EmbedOptions & options) -> bool
    {
        return attempt.worst_edge < options.tolerance && attempt.worst_separation < options.tolerance;
    }

    auto to_embedding(const Graph & graph, int k, const vector<double> & coords) -> Embedding
    {
        Embedding result(k);
        for (int v = 0 ; v < graph.size() ; ++v)
            result.set(graph.label(v), Point(coords.begin() + v * k, coords.begin() + (v + 1) * k));
        return result;
    }

    auto check_input(const Graph & graph, int k, const EmbedOptions & options) -> void
    {
        if (k < 1)
            throw std::invalid_argument("embedding dimension must be at least 1");
        if (options.restarts < 1 || options.max_iterations < 0 || ! (options.tolerance > 0.0)
                || options.separation < 0.0 || options.threads < 1)
            throw std::invalid_argument("invalid embedding options");
        if (! is_connected(graph))
            throw std::invalid_argument("embed_unit_distance needs a connected graph; embed components separately");
    }

    // Graphs with at most one vertex need no search.
    auto trivial(const Graph & graph, int k) -> std::optional<EmbedReport>
    {
        if (graph.size() > 1)
            return std::nullopt;
        EmbedReport report;
        Embedding e(k);
        if (graph.size() == 1)
            e.set(graph.label(0), Point(k, 0.0));
        report.embedding = std::move(e);
        report.successful_restart = 0;
        report.restarts_considered = 1;
        return report;
    }

    auto finish(const Graph & graph, int k, const EmbedOptions & options, const vector<Attempt> & attempts,
            int considered) -> EmbedReport
    {
        EmbedReport report;
        report.best_residual = std::numeric_limits<double>::infinity();
        for (int r = 0 ; r < considered ; ++r) {
            report.best_residual = std::min(report.best_residual, attempts[r].worst());
            if (succeeded(attempts[r], options)) {
                report.successful_restart = r;
                report.restarts_considered = r + 1;
                report.embedding = to_embedding(graph, k, attempts[r].coords);

                auto check = verify_representation(graph, *report.embedding, options.tolerance);
                if (! (check.max_edge_residual < options.tolerance))
                    throw std::logic_error("embedding search produced an embedding that does not verify");
                return report;
            }
        }
        report.restarts_considered = considered;
        return report;
    }
}

auto udg::embed_search_serial(const Graph & graph, int k, const EmbedOptions & options) -> EmbedReport
{
    check_input(graph, k, options);
    if (auto t = trivial(graph, k))
        return *t;

    auto problem = make_problem(graph, k);
    vector<Attempt> attempts(options.restarts);
    int considered = 0;
    for (int r = 0 ; r < options.restarts ; ++r) {
        attempts[r] = run_restart(problem, options, r);
        considered = r + 1;
        if (succeeded(attempts[r], options))
            break;
    }
    return finish(graph, k, options, attempts, considered);
}

auto udg::embed_search(const Graph & graph, int k, const EmbedOptions & options) -> EmbedReport
{
    if (options.threads <= 1)
        return embed_search_serial(graph, k, options);

    check_input(graph, k, options);
    if (auto t = trivial(graph, k))
        return *t;

    auto problem = make_problem(graph, k);
    vector<Attempt> attempts(options.restarts);
    vector<char> success(options.restarts, 0);

    // Blocks of restarts run in parallel; stop after the first block that
    // contains a success so the lowest successful index is always found.
    int block = options.threads * 4;
    int considered = 0;
    for (int start = 0 ; start < options.restarts ; start += block) {
        int end = std::min(options.restarts, start + block);

#pragma omp parallel for schedule(dynamic, 1) num_threads(options.threads)
        for (int r = start ; r < end ; ++r) {
            attempts[r] = run_restart(problem, options, r);
            success[r] = succeeded(attempts[r], options);
        }

        considered = end;
        if (std::any_of(success.begin() + start, success.begin() + end, [] (char s) { return s != 0; }))
            break;
    }
    return finish(graph, k, options, attempts, considered);
}

auto udg::embed_unit_distance(const Graph & graph, int k, const EmbedOptions & options) -> std::optional<Embedding>
{
    return embed_search(graph, k, options).embedding;
}

auto udg::embed_components(const Graph & graph, int k, const EmbedOptions & options) -> std::optional<Embedding>
{
    if (k < 1)
        throw std::invalid_argument("embedding dimension must be at least 1");

    Embedding result(k);
    double next_offset = 0.0;
    for (auto & component : connected_components(graph)) {
        auto part = embed_unit_distance(component, k, options);
        if (! part)
            return std::nullopt;

        double low = std::numeric_limits<double>::infinity(), high = -low;
        for (auto & p : part->points()) {
            low = std::min(low, p[0]);
            high = std::max(high, p[0]);
        }
        double shift = next_offset - low;
        for (int i = 0 ; i < part->size() ; ++i) {
            Point p = part->points()[i];
            p[0] += shift;
            result.set(part->labels()[i], std::move(p));
        }
        next_offset += (high - low) + 2.0;
    }
    return result;
}

auto udg::stress(const Graph & graph, const Embedding & embedding) -> double
{
    double sum = 0.0;
    for (auto & [a, b] : graph.edges()) {
        double r = distance(embedding.at(graph.label(a)), embedding.at(graph.label(b))) - 1.0;
        sum += r * r;
    }
    return sum;
}

auto udg::stress_gradient(const Graph & graph, const Embedding & embedding) -> vector<Point>
{
    int k = embedding.dimension();
    vector<Point> gradient(graph.size(), Point(k, 0.0));
    for (auto & [a, b] : graph.edges()) {
        auto & pa = embedding.at(graph.label(a));
        auto & pb = embedding.at(graph.label(b));
        double d = distance(pa, pb);
        if (d == 0.0)
            continue;
        double factor = 2.0 * (d - 1.0) / d;
        for (int axis = 0 ; axis < k ; ++axis) {
            double g = factor * (pa[axis] - pb[axis]);
            gradient[a][axis] += g;
            gradient[b][axis] -= g;
        }
    }
    return gradient;
}

auto udg::gradient_check(const Graph & graph, const Embedding & embedding, double step) -> double
{
    auto analytic = stress_gradient(graph, embedding);
    double worst = 0.0;
    Embedding probe = embedding;
    for (int v = 0 ; v < graph.size() ; ++v) {
        auto & label = graph.label(v);
        Point original = embedding.at(label);
        for (int axis = 0 ; axis < embedding.dimension() ; ++axis) {
            Point moved = original;
            moved[axis] = original[axis] + step;
            probe.set(label, moved);
            double up = stress(graph, probe);
            moved[axis] = original[axis] - step;
            probe.set(label, moved);
            double down = stress(graph, probe);
            probe.set(label, original);

            double numeric = (up - down) / (2.0 * step);
            worst = std::max(worst, std::abs(numeric - analytic[v][axis]));
        }
    }
    return worst;
}
