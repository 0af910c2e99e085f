#ifndef LUBRIDRAG_CLI_HPP
#define LUBRIDRAG_CLI_HPP

#include <string>
#include <vector>

namespace lubridrag::cli {

/// Runs the lubridrag command line on the given arguments (excluding the
/// program name). Returns the process exit status: 0 on success, 1 on
/// numerical failure (a machine-readable error object goes to the output
/// stream), 2 on usage errors (diagnostic to stderr).
int run(const std::vector<std::string>& args);

int run(int argc, const char* const* argv);

} // namespace lubridrag::cli

#endif
