#include <udg/constructors.hh>
#include <udg/gadgets.hh>

#include <stdexcept>

using namespace udg;

using std::string;
using std::to_string;
using std::vector;

namespace
{
    auto clause_label(int j, const string & part) -> string
    {
        return "c" + to_string(j) + "_" + part;
    }

    const vector<string> moser_roles{ "u", "T", "F", "uP", "uPP", "v", "w" };
}

auto udg::literal_label(const Literal & literal) -> string
{
    return "x" + to_string(literal.variable) + (literal.positive ? "'" : "''");
}

auto udg::clause_gadget_roles() -> const vector<string> &
{
    static const vector<string> roles{ "c1", "c2", "c3", "c4", "c12", "c34" };
    return roles;
}

auto udg::build_g_phi(const CnfFormula & formula) -> LabeledGraph
{
    validate(formula);

    LabeledGraph result = moser_spindle();
    auto & g = result.graph;

    for (int i = 1 ; i <= formula.num_vars ; ++i) {
        auto positive = literal_label({ i, true }), negative = literal_label({ i, false });
        g.add_vertex(positive);
        g.add_vertex(negative);
        g.add_edge(positive, negative);
        g.add_edge(positive, "u");
        g.add_edge(negative, "u");
        g.add_edge(positive, "u'");
        g.add_edge(negative, "u'");
        result.add_role("xPos(" + to_string(i) + ")", positive);
        result.add_role("xNeg(" + to_string(i) + ")", negative);
    }

    for (int j = 1 ; j <= static_cast<int>(formula.clauses.size()) ; ++j) {
        auto & clause = formula.clauses[j - 1];
        for (auto & part : { "1", "2", "3", "4", "12", "34" }) {
            g.add_vertex(clause_label(j, part));
            result.add_role("c" + string(part) + "(" + to_string(j) + ")", clause_label(j, part));
        }

        auto c = [&] (const char * part) { return clause_label(j, part); };
        g.add_edge(c("1"), c("2"));
        g.add_edge(c("2"), c("3"));
        g.add_edge(c("3"), c("4"));
        g.add_edge(c("4"), c("1"));
        g.add_edge(c("1"), c("12"));
        g.add_edge(c("2"), c("12"));
        g.add_edge(c("3"), c("34"));
        g.add_edge(c("4"), c("34"));
        g.add_edge(c("12"), "F");
        g.add_edge(c("2"), literal_label(clause[0]));
        g.add_edge(c("3"), literal_label(clause[1]));
        g.add_edge(c("34"), literal_label(clause[2]));
    }
    return result;
}

auto udg::extract_assignment(const LabeledGraph & g_phi, const Homomorphism & mapping) -> Assignment
{
    auto image = [&] (const string & label) -> const string & {
        auto i = mapping.find(label);
        if (i == mapping.end())
            throw std::invalid_argument("mapping has no image for '" + label + "'");
        return i->second;
    };

    auto & true_point = image(g_phi.at("T"));
    auto & false_point = image(g_phi.at("F"));

    Assignment result;
    for (int i = 1 ; ; ++i) {
        auto positive = g_phi.find_role("xPos(" + to_string(i) + ")");
        if (! positive)
            break;
        auto & placed = image(*positive);
        if (placed != true_point && placed != false_point)
            throw std::invalid_argument("literal vertex '" + *positive + "' is placed on '" + placed
                    + "', which is neither the image of T nor of F");
        result.push_back(placed == true_point);
    }
    return result;
}

auto udg::find_clause_placements(const ClausePattern & pattern) -> vector<ClausePlacement>
{
    CnfFormula single{ 3, { Clause{ Literal{ 1, true }, Literal{ 2, true }, Literal{ 3, true } } } };
    auto g_phi = build_g_phi(single);
    auto & g = g_phi.graph;
    auto target = moser_spindle();

    Homomorphism fixed;
    for (auto & role : moser_roles)
        fixed.emplace(g_phi.at(role), target.at(role));
    for (int i = 1 ; i <= 3 ; ++i) {
        auto & on = pattern[i - 1] ? target.at("T") : target.at("F");
        auto & off = pattern[i - 1] ? target.at("F") : target.at("T");
        fixed.emplace(g_phi.at("xPos(" + to_string(i) + ")"), on);
        fixed.emplace(g_phi.at("xNeg(" + to_string(i) + ")"), off);
    }

    auto & roles = clause_gadget_roles();
    const vector<string> spots{ target.at("u"), target.at("T"), target.at("F") };

    vector<ClausePlacement> result;
    int candidates = 1;
    for (std::size_t i = 0 ; i < roles.size() ; ++i)
        candidates *= 3;

    for (int code = 0 ; code < candidates ; ++code) {
        Homomorphism mapping = fixed;
        ClausePlacement placement;
        for (int r = static_cast<int>(roles.size()) - 1, rest = code ; r >= 0 ; --r, rest /= 3) {
            auto & spot = spots[rest % 3];
            mapping.emplace(g_phi.at(roles[r] + "(1)"), spot);
            placement.emplace(roles[r], spot);
        }
        if (verify_homomorphism(g, target.graph, mapping))
            result.push_back(std::move(placement));
    }
    return result;
}

auto udg::clause_gadget_placements(const ClausePattern & pattern) -> ClausePlacement
{
    if (! pattern[0] && ! pattern[1] && ! pattern[2])
        throw std::invalid_argument("an unsatisfied clause has no gadget placement");
    auto all = find_clause_placements(pattern);
    if (all.empty())
        throw std::logic_error("no gadget placement for a satisfied clause");
    return all.front();
}

auto udg::homomorphism_from_assignment(const CnfFormula & formula, const LabeledGraph & g_phi,
        const Assignment & assignment) -> Homomorphism
{
    if (! satisfies(formula, assignment))
        throw std::invalid_argument("assignment does not satisfy the formula");

    auto target = moser_spindle();
    Homomorphism result;
    for (auto & role : moser_roles)
        result.emplace(g_phi.at(role), target.at(role));

    for (int i = 1 ; i <= formula.num_vars ; ++i) {
        bool value = assignment[i - 1];
        result.emplace(g_phi.at("xPos(" + to_string(i) + ")"), target.at(value ? "T" : "F"));
        result.emplace(g_phi.at("xNeg(" + to_string(i) + ")"), target.at(value ? "F" : "T"));
    }

    for (int j = 1 ; j <= static_cast<int>(formula.clauses.size()) ; ++j) {
        ClausePattern pattern;
        for (int l = 0 ; l < 3 ; ++l) {
            auto & literal = formula.clauses[j - 1][l];
            pattern[l] = assignment[literal.variable - 1] == literal.positive;
        }
        for (auto & [role, spot] : clause_gadget_placements(pattern))
            result.emplace(g_phi.at(role + "(" + to_string(j) + ")"), spot);
    }
    return result;
}

auto udg::build_h_k(const Graph & graph, int k) -> LabeledGraph
{
    if (k < 3)
        throw std::invalid_argument("build_h_k needs k >= 3");

    auto spindle = moser_raiskii(k);
    LabeledGraph result;
    result.graph = graph;
    auto renamed = append_disjoint(result.graph, spindle.graph);

    for (auto & [role, label] : spindle.roles)
        result.add_role(role, renamed[spindle.graph.index(label)]);

    auto & v = result.at("v");
    auto & w = result.at("wP");
    for (auto & label : graph.labels()) {
        result.graph.add_edge(label, v);
        result.graph.add_edge(label, w);
    }
    return result;
}

auto udg::coloring_to_hom(const Graph & graph, const VertexColoring & coloring, int k) -> Homomorphism
{
    for (auto & label : graph.labels()) {
        auto i = coloring.find(label);
        if (i == coloring.end())
            throw std::invalid_argument("coloring misses vertex '" + label + "'");
        if (i->second < 1 || i->second > k)
            throw std::invalid_argument("color of '" + label + "' is outside 1.." + to_string(k));
    }
    for (auto & [a, b] : graph.edges())
        if (coloring.at(graph.label(a)) == coloring.at(graph.label(b)))
            throw std::invalid_argument("improper coloring: edge " + graph.label(a) + " ~ " + graph.label(b)
                    + " is monochromatic");

    auto h_k = build_h_k(graph, k);
    auto spindle = moser_raiskii(k);

    Homomorphism result;
    for (auto & [role, label] : h_k.roles)
        result.emplace(label, spindle.at(role));
    for (auto & label : graph.labels())
        result.emplace(label, spindle.at("core(" + to_string(coloring.at(label)) + ")"));
    return result;
}
