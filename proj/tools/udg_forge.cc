#include <udg/cli.hh>

#include <iostream>
#include <string>
#include <vector>

auto main(int argc, char * argv[]) -> int
{
    std::vector<std::string> args(argv, argv + argc);
    return udg::run(args, std::cin, std::cout, std::cerr);
}
