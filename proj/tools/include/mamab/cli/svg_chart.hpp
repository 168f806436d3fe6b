#pragma once

#include <string>

#include "mamab/sim_harness.hpp"

namespace mamab::cli {

/// Static SVG line chart of mean team error against t: one polyline per
/// strategy and a dashed vertical marker at each convergence time.
std::string render_error_chart(const SweepResult& sweep);

}  // namespace mamab::cli
