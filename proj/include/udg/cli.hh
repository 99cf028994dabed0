#ifndef UDG_GUARD_UDG_CLI_HH
#define UDG_GUARD_UDG_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace udg
{
    namespace exit_code
    {
        inline constexpr int success = 0;
        inline constexpr int negative = 1;
        inline constexpr int usage = 2;
        inline constexpr int io = 3;
    }

    /**
     * Runs one udg-forge command. args[0] is the program name. A path of
     * "-" reads from in or writes to out. Diagnostics go to err.
     */
    auto run(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err) -> int;
}

#endif
