#include <udg/cnf.hh>
#include <udg/errors.hh>

#include <cstdint>
#include <sstream>
#include <stdexcept>

using namespace udg;

using std::optional;
using std::string;

auto udg::parse_dimacs(std::string_view text) -> CnfFormula
{
    std::istringstream in{ string{ text } };
    string line;
    int line_number = 0;
    bool seen_header = false;
    int declared_clauses = 0;
    CnfFormula formula;
    std::vector<Literal> pending;

    auto fail = [&] (const string & what) {
        return ParseError("dimacs line " + std::to_string(line_number) + ": " + what);
    };

    while (std::getline(in, line)) {
        ++line_number;
        std::istringstream fields(line);
        string first;
        if (! (fields >> first) || first == "c" || first[0] == 'c')
            continue;
        if (first == "%")
            break;

        if (first == "p") {
            string format;
            if (seen_header)
                throw fail("second problem line");
            if (! (fields >> format >> formula.num_vars >> declared_clauses) || format != "cnf"
                    || formula.num_vars < 0 || declared_clauses < 0)
                throw fail("malformed header, expected 'p cnf <vars> <clauses>'");
            string extra;
            if (fields >> extra)
                throw fail("trailing text after header");
            seen_header = true;
            continue;
        }
        if (! seen_header)
            throw fail("clause before 'p cnf' header");

        fields.clear();
        fields.seekg(0);
        string token;
        while (fields >> token) {
            long long value = 0;
            std::size_t used = 0;
            try {
                value = std::stoll(token, &used);
            }
            catch (const std::exception &) {
                throw fail("bad literal '" + token + "'");
            }
            if (used != token.size())
                throw fail("bad literal '" + token + "'");

            if (value == 0) {
                if (pending.size() != 3)
                    throw fail("clause arity " + std::to_string(pending.size()) + ", expected 3");
                formula.clauses.push_back({ pending[0], pending[1], pending[2] });
                pending.clear();
                continue;
            }
            long long variable = value < 0 ? -value : value;
            if (variable > formula.num_vars)
                throw fail("literal " + token + " out of range 1.." + std::to_string(formula.num_vars));
            pending.push_back({ static_cast<int>(variable), value > 0 });
        }
    }

    if (! seen_header)
        throw ParseError("dimacs: missing 'p cnf' header");
    if (! pending.empty())
        throw ParseError("dimacs: last clause is not terminated by 0");
    if (static_cast<int>(formula.clauses.size()) != declared_clauses)
        throw ParseError("dimacs: header declares " + std::to_string(declared_clauses) + " clauses, found "
                + std::to_string(formula.clauses.size()));
    return formula;
}

auto udg::to_dimacs(const CnfFormula & formula) -> string
{
    string out = "p cnf " + std::to_string(formula.num_vars) + " " + std::to_string(formula.clauses.size()) + "\n";
    for (auto & clause : formula.clauses) {
        for (auto & literal : clause)
            out += (literal.positive ? "" : "-") + std::to_string(literal.variable) + " ";
        out += "0\n";
    }
    return out;
}

auto udg::validate(const CnfFormula & formula) -> void
{
    if (formula.num_vars < 0)
        throw std::invalid_argument("negative variable count");
    for (auto & clause : formula.clauses)
        for (auto & literal : clause)
            if (literal.variable < 1 || literal.variable > formula.num_vars)
                throw std::invalid_argument("literal names variable " + std::to_string(literal.variable)
                        + " outside 1.." + std::to_string(formula.num_vars));
}

auto udg::satisfies(const CnfFormula & formula, const Assignment & assignment) -> bool
{
    if (static_cast<int>(assignment.size()) != formula.num_vars)
        throw std::invalid_argument("assignment size does not match the variable count");
    for (auto & clause : formula.clauses) {
        bool satisfied = false;
        for (auto & literal : clause)
            if (assignment[literal.variable - 1] == literal.positive)
                satisfied = true;
        if (! satisfied)
            return false;
    }
    return true;
}

auto udg::brute_force_sat(const CnfFormula & formula, int max_vars) -> optional<Assignment>
{
    validate(formula);
    if (formula.num_vars > max_vars)
        throw CapExceeded("brute_force_sat: " + std::to_string(formula.num_vars) + " variables exceeds the cap of "
                + std::to_string(max_vars));

    int n = formula.num_vars;
    Assignment assignment(n);
    for (std::uint64_t bits = 0 ; bits < (std::uint64_t{1} << n) ; ++bits) {
        for (int i = 0 ; i < n ; ++i)
            assignment[i] = (bits >> (n - 1 - i)) & 1;
        if (satisfies(formula, assignment))
            return assignment;
    }
    return std::nullopt;
}
