#pragma once

/**
 * @file render.hpp
 * @brief SVG and DOT emitters for snake graphs and fence posets.
 */

#include <optional>
#include <string>

#include "qcomb/fence.hpp"
#include "qcomb/snake.hpp"

namespace qcomb {

// Basic matching dashed, m solid, cells enclosed by m (xor) basic shaded.
std::string snake_svg(const SnakeGraph& g, const std::optional<Matching>& m = std::nullopt);
std::string snake_dot(const SnakeGraph& g, const std::optional<Matching>& m = std::nullopt);

// Nodes at their up/down heights; members of the ideal filled.
std::string fence_svg(const FencePoset& P, const std::optional<OrderIdeal>& I = std::nullopt);
std::string fence_dot(const FencePoset& P, const std::optional<OrderIdeal>& I = std::nullopt);

} // namespace qcomb
