#pragma once

#include <stdexcept>
#include <string>

namespace bilayer {

struct BranchPointError : std::runtime_error {
    explicit BranchPointError(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct TailError : std::runtime_error {
    explicit TailError(const std::string& what) : std::runtime_error(what) {}
};

struct NearSpectrumError : std::runtime_error {
    explicit NearSpectrumError(const std::string& what) : std::runtime_error(what) {}
};

struct ConvergenceError : std::runtime_error {
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

struct SizeError : std::runtime_error {
    explicit SizeError(const std::string& what) : std::runtime_error(what) {}
};

struct NoOutliersError : std::runtime_error {
    explicit NoOutliersError(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bilayer
