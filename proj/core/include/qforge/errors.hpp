// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace qforge {

/// Base of all typed pipeline errors. `kind()` is a stable machine-checkable
/// tag; what() carries the tag plus the offending path or value.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define QFORGE_DEFINE_ERROR(NAME)                                              \
    class NAME : public Error {                                                \
    public:                                                                    \
        explicit NAME(const std::string& message) : Error(#NAME, message) {}   \
    }

// DSL parsing and validation
QFORGE_DEFINE_ERROR(SyntaxError);
QFORGE_DEFINE_ERROR(SchemaError);
QFORGE_DEFINE_ERROR(ShapeError);

// Encoding
QFORGE_DEFINE_ERROR(PenaltyError);
QFORGE_DEFINE_ERROR(InputError);
QFORGE_DEFINE_ERROR(DimensionError);
QFORGE_DEFINE_ERROR(SizeError);

// Circuits and simulation
QFORGE_DEFINE_ERROR(UnboundParameterError);
QFORGE_DEFINE_ERROR(UnsupportedGateError);
QFORGE_DEFINE_ERROR(LayoutError);
QFORGE_DEFINE_ERROR(NonClassicalOutputError);

// Devices and IO
QFORGE_DEFINE_ERROR(CatalogError);
QFORGE_DEFINE_ERROR(NoEligibleDeviceError);
QFORGE_DEFINE_ERROR(IoError);

#undef QFORGE_DEFINE_ERROR

} // namespace qforge
