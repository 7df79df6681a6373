#pragma once

namespace hoctop {

/// Entry point of the `hoctop` tool. Returns 0 on success, 1 on input
/// errors and 2 when an internal contract fails.
int cli_main(int argc, char** argv);

}  // namespace hoctop
