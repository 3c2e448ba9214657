#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace slopecert {

enum class ErrorKind {
    InvalidInput,
    NoEssentialComponent,
    ViolatesBoundaryCount,
    DegenerateClass,
};

constexpr std::string_view to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::NoEssentialComponent: return "no-essential-component";
    case ErrorKind::ViolatesBoundaryCount: return "violates-boundary-count";
    case ErrorKind::DegenerateClass: return "degenerate-class";
    }
    return "unknown";
}

/// Every precondition failure in the library surfaces as this exception.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const std::string& what) {
    if (!cond) throw Error(kind, what);
}

} // namespace slopecert
