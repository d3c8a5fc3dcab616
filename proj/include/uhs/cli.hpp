// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uhs::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
    kSuccess = 0,
    kCheckFailed = 1, // verification or benchmark failure, unwritable output
    kInputError = 2,  // bad flags, unparseable input, domain violation
};

/// Run the tool with `args` (args[0] is the program name). Standard input and
/// output are the given streams; "-" paths refer to them.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

} // namespace uhs::cli
