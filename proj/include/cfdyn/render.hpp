#pragma once

#include <optional>
#include <string>

namespace cfdyn {

enum class Figure { Regions, Partition, Dne, Z1hat, Psi };

std::optional<Figure> figure_from_name(const std::string& name);

/// Deterministic SVG for the named figure: fixed 6-decimal coordinates,
/// y-up mathematical frame, [-3.5, 3.5]^2 viewport per panel. Identical
/// calls produce identical bytes.
std::string render_figure(Figure fig);

} // namespace cfdyn
