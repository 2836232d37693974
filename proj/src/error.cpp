#include "abchoice/error.hpp"

namespace abchoice {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::DisconnectedInput: return "DisconnectedInput";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::OddCycle: return "OddCycle";
    case ErrorKind::ListTooSmall: return "ListTooSmall";
    case ErrorKind::NotChordal: return "NotChordal";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::Not2Choosable: return "Not2Choosable";
    case ErrorKind::NoMajorityBlock: return "NoMajorityBlock";
    case ErrorKind::Exhausted: return "Exhausted";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::OverlappingParts: return "OverlappingParts";
    case ErrorKind::OracleRefused: return "OracleRefused";
    case ErrorKind::ChooserRefused: return "ChooserRefused";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::DegenerateParameters: return "DegenerateParameters";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
{
}

void fail(ErrorKind kind, const std::string& message)
{
    throw Error(kind, message);
}

} // namespace abchoice
