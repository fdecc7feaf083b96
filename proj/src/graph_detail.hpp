#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "tverberg/graph.hpp"

namespace tvk::detail {

inline constexpr std::size_t no_component = std::numeric_limits<std::size_t>::max();

/// Component label per vertex of G minus `removed`; removed vertices get
/// no_component.
std::vector<std::size_t> component_labels(const UGraph& g, std::span<const std::size_t> removed);

struct Pairing {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    std::optional<std::size_t> leftover;
};

/// Repeatedly pairs one element from each of the two largest groups. Every pair
/// crosses two groups as long as no group exceeds half the total.
Pairing pair_across(std::vector<std::vector<std::size_t>> groups);

void check_vertex_ids(const UGraph& g, std::span<const std::size_t> ids, const char* what);

}  // namespace tvk::detail
