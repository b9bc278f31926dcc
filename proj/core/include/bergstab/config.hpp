#pragma once

#include <optional>
#include <string>

#include "bergstab/kernels.hpp"

namespace bergstab {

/// Evaluation grid: `count` points on the real axis for the first argument
/// times `count` points on the imaginary axis for the second, all within
/// |z| <= extent (disc model).
struct GridSpec {
    int count = 5;
    double extent = 0.69;

    std::vector<Complex> first_axis() const;  // real-axis points
    std::vector<Complex> second_axis() const; // imaginary-axis points
};

/// Fully validated experiment description loaded from a config file.
struct ExperimentConfig {
    GroupSpec group;
    std::optional<TowerSpec> tower;
    GridSpec grid;
    SeriesOptions series;
    std::string level = "base"; // "base", "top", or a 1-based level number
    Complex basepoint{0.0, 0.0};
    bool bundled = false;
    std::string config_hash; // FNV-1a 64 of the raw file bytes, hex
    std::string source_path;
};

/// Parse and schema-validate a config file.  Unknown sections or keys,
/// missing required keys, and malformed values all raise ConfigError.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& text, const std::string& path_label);

/// Membership predicate selected by the config's `level` (possibly
/// overridden): "base", "top", or a level number.
MembershipPredicate predicate_for_level(const ExperimentConfig& cfg, const std::string& level);

std::string fnv1a_hex(const std::string& bytes);

} // namespace bergstab
