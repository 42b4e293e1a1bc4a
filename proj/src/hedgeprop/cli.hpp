#pragma once

namespace hedgeprop {

// Full command-line front end.  Returns the process exit code: 0 when the
// query ran and holds/succeeded, 1 when it ran and fails, 2 on usage, parse,
// or load errors.
int run_cli(int argc, char** argv);

}  // namespace hedgeprop
