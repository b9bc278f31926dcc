#pragma once

#include <stdexcept>
#include <string>

namespace bergstab {

// Error taxonomy mirrors the CLI exit codes: configuration problems (2),
// numeric/singularity failures (3), resource-cap hits (4).

class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

class ModelMismatchError : public ConfigError {
public:
    explicit ModelMismatchError(const std::string& msg) : ConfigError(msg) {}
};

class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& msg) : std::runtime_error(msg) {}
};

class SingularityError : public NumericError {
public:
    explicit SingularityError(const std::string& msg) : NumericError(msg) {}
};

class ResourceCapError : public std::runtime_error {
public:
    explicit ResourceCapError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace bergstab
