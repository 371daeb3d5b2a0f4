#pragma once

namespace legode {

/* Full command-line entry point; returns the process exit code.  0 on
 * success, 1 on a domain error (error JSON on stderr), 2 on usage or
 * malformed input. */
int cli_run(int argc, char** argv);

} // namespace legode
