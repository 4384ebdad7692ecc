#ifndef ELNITSKY_CLI_HPP
#define ELNITSKY_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "elnitsky/perm.hpp"

namespace elnitsky::cli {

/// Runs one command. Returns 0 on success, 1 on domain errors (with a
/// machine-readable error object on `err`), 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Accepts "34251" (compact digits, n <= 9 only) or "3,4,2,5,1".
Permutation parse_permutation(const std::string& text);

} // namespace elnitsky::cli

#endif
