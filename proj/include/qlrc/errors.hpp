#pragma once

#include <stdexcept>
#include <string>

namespace qlrc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct FieldMismatch : Error { using Error::Error; };
struct DivisionByZero : Error { using Error::Error; };
struct NonTowerField : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct NotFound : Error { using Error::Error; };
struct DimensionObstruction : Error { using Error::Error; };
struct ProvenanceMissing : Error { using Error::Error; };
struct NotDualContaining : Error { using Error::Error; };
struct DualDistanceTooSmall : Error { using Error::Error; };
struct LocalityUndefined : Error { using Error::Error; };
struct ParameterError : Error { using Error::Error; };

}  // namespace qlrc
