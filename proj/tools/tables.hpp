#pragma once

// Reproduction of the published tables. The curve tables only store the
// defining equations; points, flexes, class counts and matrices are all
// recomputed on every run.

#include <string>
#include <vector>

#include "cubicdet/io.hpp"

namespace cubicdet::cli {

enum class Format { Text, Csv, Json };

struct CurveRow {
  std::string field;  // literal accepted by parse_field
  std::string form;
};

struct CurveTable {
  std::string id;
  std::string caption;
  std::vector<CurveRow> rows;
};

/// Ids 5, 6, 7, 8, 9, 10, 11 in that order.
const std::vector<CurveTable>& curve_tables();
/// All selectable ids: 1, 2, 3, 5, 6, sym, 7, 8, 9, 10, 11.
const std::vector<std::string>& table_ids();

/// Throws InvalidArgument for an unknown id.
std::string render_table(const std::string& id, Format format);
Json table_json(const std::string& id);

/// Field sizes of the Cub grid; the last column stands for every q >= 8.
const std::vector<long long>& grid_fields();
const std::vector<long long>& large_fields();

}  // namespace cubicdet::cli
