#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace abchoice {

enum class ErrorKind {
    InvalidInput,
    DisconnectedInput,
    NotApplicable,
    EmptyGraph,
    OddCycle,
    ListTooSmall,
    NotChordal,
    BudgetExceeded,
    Not2Choosable,
    NoMajorityBlock,
    Exhausted,
    SizeMismatch,
    OverlappingParts,
    OracleRefused,
    ChooserRefused,
    NotSimple,
    NotBipartite,
    DegenerateParameters,
    UnknownSuite,
};

const char* to_string(ErrorKind kind);

// Every failure raised by the library. The kind drives CLI exit codes; the
// optional payload carries the offending vertex, the cycle witness or the
// attempt count, depending on the kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);

    ErrorKind kind() const noexcept { return kind_; }

    int vertex = -1;
    std::vector<int> witness;
    std::uint64_t count = 0;

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

} // namespace abchoice
