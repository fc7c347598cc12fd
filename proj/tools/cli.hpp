#ifndef PLATEWAVE_TOOLS_CLI_HPP
#define PLATEWAVE_TOOLS_CLI_HPP

namespace platewave {

/// Entry point of the command line driver. Exit codes: 0 success, 1 numerical
/// failure, 2 usage or configuration error.
int cli_main(int argc, const char* const* argv);

}  // namespace platewave

#endif
