// Entry point of the dgtool command line. Exit codes: 0 success, 1 negative
// verdict, 2 usage or input error, 3 bound exceeded.

#ifndef DIAGRAMS_CLI_HPP_
#define DIAGRAMS_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace diagrams {

  // args excludes the program name.
  int run_cli(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace diagrams

#endif  // DIAGRAMS_CLI_HPP_
