#ifndef UDG_GUARD_UDG_CNF_HH
#define UDG_GUARD_UDG_CNF_HH 1

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace udg
{
    struct Literal
    {
        int variable = 0;      // 1-based
        bool positive = true;

        auto operator<=> (const Literal &) const = default;
    };

    using Clause = std::array<Literal, 3>;

    /// An exact 3-CNF formula.
    struct CnfFormula
    {
        int num_vars = 0;
        std::vector<Clause> clauses;

        auto operator== (const CnfFormula &) const -> bool = default;
    };

    /// values[i] is the value of variable i + 1.
    using Assignment = std::vector<bool>;

    /// Parses DIMACS CNF. Every clause must have exactly three literals. Throws ParseError.
    auto parse_dimacs(std::string_view text) -> CnfFormula;

    auto to_dimacs(const CnfFormula & formula) -> std::string;

    /// Throws std::invalid_argument unless every literal names a variable in [1, num_vars].
    auto validate(const CnfFormula & formula) -> void;

    auto satisfies(const CnfFormula & formula, const Assignment & assignment) -> bool;

    /**
     * Tries every assignment, variable 1 being the most significant bit and
     * false before true, and returns the first satisfying one. Throws
     * CapExceeded for more than max_vars variables.
     */
    auto brute_force_sat(const CnfFormula & formula, int max_vars = 20) -> std::optional<Assignment>;
}

#endif
