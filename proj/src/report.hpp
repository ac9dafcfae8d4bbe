#pragma once

#include <string>

#include "atlas.hpp"

// Text renderings of tone rows, box-kite anatomy, twists, lanyards, and
// censuses for the command-line surface.
namespace boxkite {

std::string tone_row_report(const StrutContext& ctx);
std::string boxkites_report(const StrutContext& ctx);
std::string twist_report(const StrutContext& ctx, Strut strut);
std::string lanyards_report(const StrutContext& ctx, LanyardKind kind);
std::string census_report(const CensusReport& report);

}  // namespace boxkite
