/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef WAVELAB_GUARD_TOOLS_CLI_HH
#define WAVELAB_GUARD_TOOLS_CLI_HH 1

#include <iosfwd>
#include <string>
#include <vector>

namespace wavelab::cli
{
    inline constexpr int exit_ok = 0;
    inline constexpr int exit_domain_error = 1;
    inline constexpr int exit_usage_error = 2;
    inline constexpr int exit_incomplete = 3;

    /// args excludes the program name.
    auto run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err) -> int;
}

#endif
