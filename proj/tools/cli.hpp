#ifndef IDEALSYNC_CLI_HPP
#define IDEALSYNC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace idealsync::cli {

/// Runs one subcommand. Returns 0 when every requested check passed,
/// 1 when a verification ran and failed, 2 on usage or input errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace idealsync::cli

#endif
