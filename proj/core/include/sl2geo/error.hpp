#pragma once

#include <stdexcept>
#include <string>

namespace sl2geo {

enum class Errc {
    NotUnimodular,
    ClassMismatch,
    SingularPoint,
    OutOfRegime,
    NoRoot,
    Unbounded,
    BadGrid,
    Unreachable,
    StartPoint,
    NotInGroup,
    NotUnitDeterminant,
    Singular,
    DependentFrame,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what);
    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

} // namespace sl2geo
