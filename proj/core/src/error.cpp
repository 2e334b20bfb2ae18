#include "sl2geo/error.hpp"

namespace sl2geo {

const char* to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::NotUnimodular: return "NotUnimodular";
    case Errc::ClassMismatch: return "ClassMismatch";
    case Errc::SingularPoint: return "SingularPoint";
    case Errc::OutOfRegime: return "OutOfRegime";
    case Errc::NoRoot: return "NoRoot";
    case Errc::Unbounded: return "Unbounded";
    case Errc::BadGrid: return "BadGrid";
    case Errc::Unreachable: return "Unreachable";
    case Errc::StartPoint: return "StartPoint";
    case Errc::NotInGroup: return "NotInGroup";
    case Errc::NotUnitDeterminant: return "NotUnitDeterminant";
    case Errc::Singular: return "Singular";
    case Errc::DependentFrame: return "DependentFrame";
    }
    return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

} // namespace sl2geo
