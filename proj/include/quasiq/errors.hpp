#pragma once

#include <stdexcept>
#include <string>

namespace quasiq {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& msg) : Error(msg) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg) : Error(msg) {}
};
struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg) : Error(msg) {}
};
struct ModuliMismatch : Error {
    explicit ModuliMismatch(const std::string& msg) : Error(msg) {}
};
struct GroupTooLargeForExhaustive : Error {
    explicit GroupTooLargeForExhaustive(const std::string& msg) : Error(msg) {}
};
struct NonSymmetricCocycle : Error {
    explicit NonSymmetricCocycle(const std::string& msg) : Error(msg) {}
};
struct NonReducedCocycle : Error {
    explicit NonReducedCocycle(const std::string& msg) : Error(msg) {}
};
struct SpaceMismatch : Error {
    explicit SpaceMismatch(const std::string& msg) : Error(msg) {}
};
struct AlgebraMismatch : Error {
    explicit AlgebraMismatch(const std::string& msg) : Error(msg) {}
};
struct DimensionLimitExceeded : Error {
    explicit DimensionLimitExceeded(const std::string& msg) : Error(msg) {}
};
struct UnclassifiedSeries : Error {
    explicit UnclassifiedSeries(const std::string& msg) : Error(msg) {}
};
struct ConfigError : Error {
    explicit ConfigError(const std::string& msg) : Error(msg) {}
};

} // namespace quasiq
