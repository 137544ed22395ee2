#pragma once

#include <iosfwd>
#include <string>

#include "cdmc/graph.hpp"

namespace cdmc::tsplib {

/// How to turn NODE_COORD_SECTION coordinates into edge weights.
/// ForceEuc2d overrides GEO/ATT and applies the plain rounded Euclidean
/// distance to the raw coordinate columns (needed to reproduce published
/// cut values computed that way); it has no effect on EXPLICIT instances.
enum class CoordDistance { FromFile, ForceEuc2d };

/// Rounded Euclidean distance: nint(sqrt(dx² + dy²)),
/// nint = round half away from zero.
int dist_euc2d(double ax, double ay, double bx, double by);

/// Geographical distance on the ideal sphere of radius 6378.388 km.
/// Inputs are in DD.MM encoding (integer part degrees, fraction minutes);
/// the integer part is taken by truncation toward zero. Returns the
/// truncated great-circle distance plus one.
int dist_geo(double alat, double alon, double blat, double blon);

/// Pseudo-Euclidean distance: r = sqrt((dx² + dy²)/10), t = nint(r),
/// result t+1 if t < r else t.
int dist_att(double ax, double ay, double bx, double by);

/// Parses a TSPLIB-format instance into a complete weighted graph.
///
/// Supported: EDGE_WEIGHT_TYPE ∈ {EUC_2D, GEO, ATT, EXPLICIT} with
/// EDGE_WEIGHT_FORMAT ∈ {FULL_MATRIX, UPPER_ROW, LOWER_ROW,
/// UPPER_DIAG_ROW, LOWER_DIAG_ROW}. Anything else throws
/// UnsupportedFormatError; malformed input throws ParseError with the
/// offending line number.
WeightedGraph parse(std::istream& source,
                    CoordDistance coord_mode = CoordDistance::FromFile);

WeightedGraph parse_string(const std::string& text,
                           CoordDistance coord_mode = CoordDistance::FromFile);

WeightedGraph parse_file(const std::string& path,
                         CoordDistance coord_mode = CoordDistance::FromFile);

/// Serializes a graph as an EXPLICIT/FULL_MATRIX TSPLIB instance.
/// Weights are printed with enough digits to round-trip exactly.
std::string write_explicit_full_matrix(const WeightedGraph& graph);

} // namespace cdmc::tsplib
