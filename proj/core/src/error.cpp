#include "cbramsey/error.hpp"

namespace cbramsey {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidVertex: return "InvalidVertex";
        case ErrorKind::SelfLoopCreated: return "SelfLoopCreated";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::OddCycleLength: return "OddCycleLength";
        case ErrorKind::EllOutOfRange: return "EllOutOfRange";
        case ErrorKind::Unsupported: return "Unsupported";
        case ErrorKind::AttachOverflow: return "AttachOverflow";
        case ErrorKind::InfeasibleAssembly: return "InfeasibleAssembly";
        case ErrorKind::NotBlockClique: return "NotBlockClique";
        case ErrorKind::NoIndependentSet: return "NoIndependentSet";
        case ErrorKind::ResourceLimit: return "ResourceLimit";
        case ErrorKind::EmptyFamily: return "EmptyFamily";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace cbramsey
