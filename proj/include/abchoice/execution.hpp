#pragma once

namespace abchoice {

/// Serial runs are the reference; Parallel uses OpenMP and must agree with
/// them on every result.
enum class Execution { Serial, Parallel };

} // namespace abchoice
