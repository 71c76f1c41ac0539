#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace weakinv {

/// Command-line driver. `args` excludes the program name.
///
///   wset   --family F --element E [--n N] [--p P --q Q] [--method direct|oracle] [--json] [--compact]
///   chains --family F --element E [--n N] [--count] [--json]
///   hasse  --family F (--n N | --p P --q Q) [--below E] [--format dot|json]
///   verify --family F [--n N] [--p P --q Q]
///   rank   --family F --element E [--n N] [--p P --q Q]
///
/// Returns 0 on success, 1 when a verification fails, 2 on bad input.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace weakinv
