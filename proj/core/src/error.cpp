#include "orthograph/error.hpp"

namespace orthograph {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidField: return "InvalidField";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::TrivialKernel: return "TrivialKernel";
    case Errc::NotInvertible: return "NotInvertible";
    case Errc::ParseError: return "ParseError";
    case Errc::NotTriangular: return "NotTriangular";
    case Errc::DimensionTooSmall: return "DimensionTooSmall";
    case Errc::Unclassifiable: return "Unclassifiable";
    case Errc::WrongClass: return "WrongClass";
    case Errc::BadIndex: return "BadIndex";
    case Errc::TooLarge: return "TooLarge";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::NotAVertex: return "NotAVertex";
    case Errc::Disconnected: return "Disconnected";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

}  // namespace orthograph
