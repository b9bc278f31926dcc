#pragma once

#include <ostream>

#include "bergstab/tower.hpp"

namespace bergstab {

/// 17 significant digits, locale-independent (machine files).
std::string format_full(double v);
/// 6 significant digits (human summaries).
std::string format_short(double v);

std::string format_index(const TowerIndex& idx);

void write_tower_csv(const TowerReport& report, std::ostream& out);
void write_tower_record(const TowerReport& report, std::ostream& out);

} // namespace bergstab
