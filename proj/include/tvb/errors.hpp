#pragma once

#include <stdexcept>
#include <string>

namespace tvb {

// Fan admits no strictly convex integral piecewise linear function.
struct NonProjectiveFanError : std::runtime_error {
    explicit NonProjectiveFanError(const std::string& what) : std::runtime_error(what) {}
};

// Klyachko filtrations admit no compatible per-cone splitting.
struct IncompatibleBundleError : std::runtime_error {
    IncompatibleBundleError(std::string what, std::string detail_)
        : std::runtime_error(std::move(what)), detail(std::move(detail_)) {}
    std::string detail;  // failing cone / ray / threshold description
};

// Malformed input document.
struct JsonFormatError : std::runtime_error {
    JsonFormatError(std::string what, std::string location_)
        : std::runtime_error(std::move(what)), location(std::move(location_)) {}
    std::string location;
};

}  // namespace tvb
