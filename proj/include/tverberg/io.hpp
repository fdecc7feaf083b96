#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tverberg/euclid.hpp"
#include "tverberg/graph.hpp"
#include "tverberg/hardness.hpp"

namespace tvk {

inline constexpr int format_version = 1;

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

/// One point per row, comma-separated rational or decimal entries. An optional
/// first row "dim=d" fixes the dimension; blank rows and rows starting with '#'
/// are skipped. Point ids follow row order from 0.
PointSet parse_points_csv(std::string_view text);
std::string format_points_csv(const PointSet& x);

/// Header "n m", then m whitespace-separated edges, vertex ids 0-based.
UGraph parse_edge_list(std::string_view text);
std::string format_edge_list(const UGraph& g);

/// Whitespace- or comma-separated vertex ids.
std::vector<std::size_t> parse_id_list(std::string_view text);

std::string certificate_json(const PipelineResult& result, std::uint64_t seed);
TverbergCertificate parse_certificate_json(std::string_view text);

std::string geodetic_certificate_json(const GeodeticCertificate& cert, std::string_view mode);
GeodeticCertificate parse_geodetic_certificate_json(std::string_view text);

/// Reads the "type" field of a certificate ("euclid" or "geodetic").
std::string certificate_type(std::string_view text);

std::string gadget_sidecar_json(const GadgetGraph& gadget);

}  // namespace tvk
