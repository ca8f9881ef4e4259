#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cburgers {

/// Argument outside the domain of a closed-form map (light cone, negative radicand, horizon).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A time step produced an inadmissible state.
class NumericalError : public std::runtime_error {
public:
    NumericalError(const std::string& what, double time, std::size_t cell)
        : std::runtime_error(what + " (t=" + std::to_string(time) + ", cell " +
                             std::to_string(cell) + ")"),
          time_(time),
          cell_(cell) {}

    double time() const { return time_; }
    std::size_t cell() const { return cell_; }

private:
    double time_;
    std::size_t cell_;
};

}  // namespace cburgers
