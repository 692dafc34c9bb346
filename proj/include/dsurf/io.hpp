#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dsurf/ksurf.hpp"
#include "dsurf/surfaces.hpp"

namespace dsurf {

// 17 significant digits, "%.17g".
std::string format_double(double v);

using CsvRow = std::vector<double>;

// Header row then one line per row, comma separated, LF endings.
void write_csv(std::ostream& out, const std::vector<std::string>& header, const std::vector<CsvRow>& rows);

// Columns t, m, x, y, z, Bx, By, Bz.
const std::vector<std::string>& curve_csv_header();
std::vector<CsvRow> curve_rows(const CurveSnapshot& s);

// "v x y z" per vertex in row-major (m, n) order, then quads
// (m,n) (m+1,n) (m+1,n+1) (m,n+1), 1-indexed.
void write_obj(std::ostream& out, const KGrid& g);

}  // namespace dsurf
