#include "kce/error.hpp"

namespace kce {

std::string_view to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::NotOneMod4: return "NotOneMod4";
        case ErrorCode::TooSmall: return "TooSmall";
        case ErrorCode::NarrowClassNotOne: return "NarrowClassNotOne";
        case ErrorCode::NotGreaterThanOne: return "NotGreaterThanOne";
        case ErrorCode::NotSymmetric: return "NotSymmetric";
        case ErrorCode::Ramified: return "Ramified";
        case ErrorCode::NoSuchRoot: return "NoSuchRoot";
        case ErrorCode::BadDenominator: return "BadDenominator";
        case ErrorCode::RootMismatch: return "RootMismatch";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace kce
