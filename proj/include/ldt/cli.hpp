#pragma once

namespace ldt {

// Entry point of the command-line tool. Subcommands: gen, fan, synth, eval,
// bench, export, verify. Returns 0 on success, 1 on validation or check
// failure, 2 on usage errors.
int cli_run(int argc, const char* const* argv);

}  // namespace ldt
