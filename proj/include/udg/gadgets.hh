#ifndef UDG_GUARD_UDG_GADGETS_HH
#define UDG_GUARD_UDG_GADGETS_HH 1

#include <udg/cnf.hh>
#include <udg/graph.hh>
#include <udg/homomorphism.hh>

#include <array>
#include <map>
#include <string>
#include <vector>

namespace udg
{
    /// Label of the vertex for a literal in G_phi: x<i>' for x_i, x<i>'' for its negation.
    auto literal_label(const Literal & literal) -> std::string;

    /**
     * The 3-SAT reduction graph. A Moser spindle u, T, F, u', u'', v, w;
     * per variable x_i the adjacent pair x<i>', x<i>'' both joined to u and
     * u'; per clause j the six vertices c<j>_1, c<j>_2, c<j>_3, c<j>_4,
     * c<j>_12, c<j>_34 carrying the 4-cycle c1 c2 c3 c4, the triangles
     * c1 c2 c12 and c3 c4 c34, and the edges c12 ~ F, c2 ~ first literal,
     * c3 ~ second literal, c34 ~ third literal.
     *
     * Roles: the Moser roles, xPos(i) and xNeg(i), and c1(j) .. c34(j).
     * |V| = 7 + 2|X| + 6|C| and |E| = 11 + 5|X| + 12|C|.
     */
    auto build_g_phi(const CnfFormula & formula) -> LabeledGraph;

    /**
     * Reads the truth assignment off a homomorphism of G_phi: x_i is true
     * iff x<i>' lands on the image of T. Throws std::invalid_argument if a
     * literal vertex lands on neither the image of T nor that of F.
     */
    auto extract_assignment(const LabeledGraph & g_phi, const Homomorphism & mapping) -> Assignment;

    /// Truth values of the three literals of a clause.
    using ClausePattern = std::array<bool, 3>;

    /// Gadget role (c1, c2, c3, c4, c12, c34) -> Moser vertex among u, T, F.
    using ClausePlacement = std::map<std::string, std::string>;

    /// Gadget roles in placement order.
    auto clause_gadget_roles() -> const std::vector<std::string> &;

    /**
     * Every placement of the six clause gadget vertices on {u, T, F} that
     * maps all gadget edges to Moser spindle edges, with the literal
     * vertices on T (true) or F (false) as given by the pattern. The gadget
     * edges come from build_g_phi, so this checks the construction itself.
     * Exhaustive over the 3^6 candidates, in lexicographic order over (u, T, F).
     */
    auto find_clause_placements(const ClausePattern & pattern) -> std::vector<ClausePlacement>;

    /// The first placement for a satisfied clause. The all-false pattern is rejected.
    auto clause_gadget_placements(const ClausePattern & pattern) -> ClausePlacement;

    /**
     * The homomorphism G_phi -> Moser spindle induced by a satisfying
     * assignment: the spindle maps to itself, literals to T or F, and each
     * clause gadget by clause_gadget_placements.
     */
    auto homomorphism_from_assignment(const CnfFormula & formula, const LabeledGraph & g_phi,
            const Assignment & assignment) -> Homomorphism;

    /**
     * The k-coloring reduction graph: G disjoint-union M_k, plus u ~ v and
     * u ~ w' for every vertex u of G. G keeps its labels; clashing M_k
     * labels are primed. Roles are those of M_k. Requires k >= 3.
     */
    auto build_h_k(const Graph & graph, int k) -> LabeledGraph;

    using VertexColoring = std::map<std::string, int>;

    /**
     * The homomorphism build_h_k(graph, k) -> moser_raiskii(k) sending each
     * vertex of color c to core(c) and M_k to itself. Throws
     * std::invalid_argument if the coloring is not a proper coloring with
     * colors 1..k.
     */
    auto coloring_to_hom(const Graph & graph, const VertexColoring & coloring, int k) -> Homomorphism;
}

#endif
