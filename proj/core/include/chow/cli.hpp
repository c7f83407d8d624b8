#pragma once

namespace chow {

// Full command-line front end.  Exit codes: 0 all checks pass, 1 at least
// one step failed, 2 usage or configuration error, 3 the two decision routes
// disagreed.
int cli_main(int argc, char** argv);

}  // namespace chow
