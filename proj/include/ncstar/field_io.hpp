#pragma once

#include <filesystem>
#include <iosfwd>

#include "ncstar/field.hpp"

namespace ncstar {

/// Position dump: header `axis0,...,axis{d-1},re,im`, one row per site in
/// row-major order; axis columns hold coordinates.
void write_field_csv(std::ostream& out, const ScalarField& f);
void write_field_csv(const std::filesystem::path& path, const ScalarField& f);

/// Mode dump: same layout with signed integer wave numbers in the axis columns.
void write_modes_csv(std::ostream& out, const ScalarField& f);
void write_modes_csv(const std::filesystem::path& path, const ScalarField& f);

/// Reads a position dump written for `grid`. Rows must appear in row-major
/// order with matching coordinates.
ScalarField read_field_csv(std::istream& in, const GridSpec& grid, bool real = false);
ScalarField read_field_csv(const std::filesystem::path& path, const GridSpec& grid,
                           bool real = false);

}  // namespace ncstar
