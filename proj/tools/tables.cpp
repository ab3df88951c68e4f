#include "tables.hpp"

#include <algorithm>
#include <sstream>

#include "cubicdet/counting.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/text.hpp"

namespace cubicdet::cli {
namespace {

struct Grid {
  std::string caption;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string field_name(long long q) { return "F_" + std::to_string(q); }

std::vector<std::string> lines_of(const std::string& cell) {
  std::vector<std::string> out;
  std::stringstream ss(cell);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  if (out.empty()) out.emplace_back();
  return out;
}

// Display width, counting UTF-8 continuation bytes as zero.
std::size_t width(const std::string& s) {
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string render_text(const Grid& g) {
  const std::size_t cols = g.header.size();
  std::vector<std::size_t> w(cols, 0);
  auto measure = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < cols; ++c)
      for (const auto& l : lines_of(row[c])) w[c] = std::max(w[c], width(l));
  };
  measure(g.header);
  for (const auto& r : g.rows) measure(r);

  std::string out = g.caption.empty() ? "" : g.caption + "\n";
  auto emit = [&](const std::vector<std::string>& row) {
    std::vector<std::vector<std::string>> cells;
    std::size_t height = 1;
    for (const auto& cell : row) {
      cells.push_back(lines_of(cell));
      height = std::max(height, cells.back().size());
    }
    for (std::size_t l = 0; l < height; ++l) {
      std::string line;
      for (std::size_t c = 0; c < cols; ++c) {
        const std::string s = l < cells[c].size() ? cells[c][l] : "";
        line += (c ? " | " : "") + s;
        if (c + 1 < cols) line += std::string(w[c] - width(s), ' ');
      }
      while (!line.empty() && line.back() == ' ') line.pop_back();
      out += line + "\n";
    }
  };
  auto rule = [&] {
    std::string line;
    for (std::size_t c = 0; c < cols; ++c) line += (c ? "-+-" : "") + std::string(w[c], '-');
    out += line + "\n";
  };
  bool multiline = false;
  for (const auto& r : g.rows)
    for (const auto& cell : r) multiline = multiline || lines_of(cell).size() > 1;
  emit(g.header);
  rule();
  for (std::size_t i = 0; i < g.rows.size(); ++i) {
    if (i && multiline) rule();
    emit(g.rows[i]);
  }
  return out;
}

std::string csv_cell(const std::string& s) {
  std::string flat = s;
  std::replace(flat.begin(), flat.end(), '\n', ';');
  if (flat.find_first_of(",\";") == std::string::npos) return flat;
  std::string out = "\"";
  for (char c : flat) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

std::string render_csv(const Grid& g) {
  std::string out;
  auto emit = [&](const std::vector<std::string>& row) {
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? "," : "") + csv_cell(row[c]);
    out += "\n";
  };
  emit(g.header);
  for (const auto& r : g.rows) emit(r);
  return out;
}

// ---------------------------------------------------------------------------

std::string large_field_value(long long n) {
  std::vector<long long> values;
  for (long long q : large_fields()) values.push_back(cub(q, n).total);
  const bool constant = std::all_of(values.begin(), values.end(), [&](long long v) { return v == values.front(); });
  return constant ? std::to_string(values.front()) : "varies";
}

Grid cub_grid() {
  Grid g;
  g.caption = "Cub_q(n): classes of smooth plane cubics with exactly n classes of representations";
  g.header = {""};
  for (long long q : grid_fields()) g.header.push_back(field_name(q));
  g.header.push_back("F_q (q >= 8)");
  for (long long n = 0; n <= 2; ++n) {
    std::vector<std::string> row{"Cub_q(" + std::to_string(n) + ")"};
    for (long long q : grid_fields()) row.push_back(std::to_string(cub(q, n).total));
    row.push_back(large_field_value(n));
    g.rows.push_back(row);
  }
  return g;
}

Grid breakdown_grid() {
  Grid g;
  g.caption = "Cub_q(n) = #E_q(n+1) + #E_q,3(n+1) + 3 #E_q,3,3(n+1) - eps_q(q-n)";
  g.header = {"F_q", "n", "#E_q(n+1)", "#E_q,3(n+1)", "#E_q,3,3(n+1)", "eps_q(q-n)", "Cub_q(n)"};
  std::vector<long long> qs = grid_fields();
  qs.insert(qs.end(), large_fields().begin(), large_fields().end());
  for (long long q : qs) {
    for (long long n = 0; n <= 2; ++n) {
      const CountReport r = cub(q, n);
      g.rows.push_back({field_name(q), std::to_string(n), std::to_string(r.e), std::to_string(r.e3),
                        std::to_string(r.e33), std::to_string(r.eps), std::to_string(r.total)});
    }
  }
  return g;
}

std::vector<Grid> ingredient_grids() {
  Grid a, b;
  a.caption = "Isogeny counts entering the formula";
  a.header = {"", "#E_q(1)", "#E_q(2)", "#E_q(3)", "#E_q,3(1)", "#E_q,3(2)", "#E_q,3(3)"};
  b.caption = "";
  b.header = {"", "#E_q,3,3(1)", "#E_q,3,3(2)", "#E_q,3,3(3)", "t0", "t1", "eps_q(q)", "eps_q(q-1)", "eps_q(q-2)"};
  for (long long q : grid_fields()) {
    std::vector<std::string> ra{field_name(q)}, rb{field_name(q)};
    for (long long n = 1; n <= 3; ++n) ra.push_back(std::to_string(count_E(q, n)));
    for (long long n = 1; n <= 3; ++n) ra.push_back(std::to_string(count_E3(q, n)));
    for (long long n = 1; n <= 3; ++n) rb.push_back(std::to_string(count_E33(q, n)));
    rb.push_back(t0(q).str());
    rb.push_back(t1(q).str());
    for (long long k = 0; k <= 2; ++k) rb.push_back(std::to_string(epsilon(q, q - k)));
    a.rows.push_back(ra);
    b.rows.push_back(rb);
  }
  return {a, b};
}

// ---------------------------------------------------------------------------

struct ComputedRow {
  TernaryCubic form;
  std::vector<std::pair<ProjPoint, bool>> points;  // (point, is flex)
  std::vector<RepresentationEntry> reps;
  std::size_t classes = 0;
};

ComputedRow compute_row(const CurveRow& row) {
  ComputedRow out;
  const FieldSpec& fs = parse_field(row.field);
  out.form = parse_form(fs, row.form);
  for (const auto& p : rational_points(out.form)) out.points.emplace_back(p, is_flex(out.form, p));
  if (out.points.empty()) return out;
  out.reps = all_reps(out.form);
  std::vector<LinearMatrixRep> reps;
  for (const auto& e : out.reps) reps.push_back(e.rep);
  out.classes = count_classes(reps);
  return out;
}

const CurveTable* find_curve_table(const std::string& id) {
  for (const auto& t : curve_tables())
    if (t.id == id) return &t;
  return nullptr;
}

std::string point_cell(const ComputedRow& r) {
  std::string s;
  for (const auto& [p, flex] : r.points) s += format_point(p) + (flex ? " (flex)" : "") + "\n";
  return s;
}

Grid curve_grid(const CurveTable& t) {
  Grid g;
  g.caption = t.caption;
  g.header = {"F_q", "F(X, Y, Z)", "C(F_q)", "#LDR(C)", "representations"};
  for (const auto& row : t.rows) {
    const ComputedRow r = compute_row(row);
    std::string reps;
    for (const auto& e : r.reps) reps += format_matrix(e.rep) + "\n";
    g.rows.push_back({field_name(r.form.field().q()), format_form(r.form), point_cell(r), std::to_string(r.classes),
                      reps});
  }
  return g;
}

struct SymmetricRow {
  TernaryCubic form;
  LinearMatrixRep rep;
  Mat3 a;
  LinearMatrixRep symmetric;
};

SymmetricRow compute_symmetric(const CurveRow& row) {
  const FieldSpec& fs = parse_field(row.field);
  SymmetricRow out{parse_form(fs, row.form), {}, {}, {}};
  out.rep = all_reps(out.form).at(0).rep;
  const auto a = symmetrizer(out.rep);
  if (!a) throw Error(ErrorCode::BrokenInvariant, "no symmetric representation for " + row.form);
  out.a = *a;
  out.symmetric = transform(*a, out.rep, Mat3::identity(fs));
  if (!is_symmetric(out.symmetric) || !is_ldr_of(out.symmetric, out.form))
    throw Error(ErrorCode::BrokenInvariant, "symmetrized matrix failed to verify");
  return out;
}

Grid symmetric_grid() {
  Grid g;
  g.caption = "Symmetric representations A M of the curves with one class (B = I)";
  g.header = {"F_q", "F(X, Y, Z)", "symmetric representation", "A"};
  for (const auto& row : find_curve_table("6")->rows) {
    const SymmetricRow r = compute_symmetric(row);
    g.rows.push_back({field_name(r.form.field().q()), format_form(r.form), format_matrix(r.symmetric), format_mat3(r.a)});
  }
  return g;
}

std::vector<Grid> grids(const std::string& id) {
  if (id == "1") return {cub_grid()};
  if (id == "2") return {breakdown_grid()};
  if (id == "3") return ingredient_grids();
  if (id == "sym") return {symmetric_grid()};
  if (const CurveTable* t = find_curve_table(id)) return {curve_grid(*t)};
  throw Error(ErrorCode::InvalidArgument, "unknown table \"" + id + "\"");
}

Json grid_json(const Grid& g) {
  Json rows = Json::array();
  for (const auto& r : g.rows) {
    Json obj = Json::object();
    for (std::size_t c = 0; c < g.header.size(); ++c) obj[g.header[c].empty() ? "row" : g.header[c]] = r[c];
    rows.push_back(obj);
  }
  return Json{{"caption", g.caption}, {"rows", rows}};
}

}  // namespace

const std::vector<long long>& grid_fields() {
  static const std::vector<long long> v{2, 3, 4, 5, 7};
  return v;
}

const std::vector<long long>& large_fields() {
  static const std::vector<long long> v{8, 9, 11, 13};
  return v;
}

const std::vector<CurveTable>& curve_tables() {
  static const std::vector<CurveTable> tables{
      {"5",
       "Smooth plane cubics admitting no linear determinantal representation",
       {{"2", "X^2Z + XZ^2 + Y^3 + Y^2Z + Z^3"}, {"3", "X^2Z + Y^3 - YZ^2 + Z^3"}, {"2^2", "X^2Z + XZ^2 + Y^3 + wZ^3"}}},
      {"6",
       "Smooth plane cubics admitting exactly one class of representations",
       {{"2", "X^2Z + XYZ + Y^3 + Y^2Z + YZ^2"},
        {"3", "X^2Z - Y^3 + Y^2Z + YZ^2"},
        {"2^2", "X^2Z + wXYZ + Y^3 + Y^2Z + wYZ^2"},
        {"5", "X^2Z + Y^3 + 2YZ^2"}}},
      {"7",
       "Smooth plane cubics over F_2 admitting exactly two classes of representations",
       {{"2", "X^2Z + XY^2 + YZ^2"}, {"2", "X^2Z + XZ^2 + Y^3"}}},
      {"8",
       "Smooth plane cubics over F_3 admitting exactly two classes of representations",
       {{"3", "X^2Z + XY^2 + YZ^2 + 2XYZ"}, {"3", "X^2Z - XZ^2 - XYZ - Y^3"}}},
      {"9",
       "Smooth plane cubics over F_4 admitting exactly two classes of representations",
       {{"2^2", "X^2Z + XY^2 + wYZ^2"},
        {"2^2", "X^2Z + XY^2 + (w + 1)YZ^2"},
        {"2^2", "X^2Z + XZ^2 + wY^3"},
        {"2^2", "X^2Z + XZ^2 + (w + 1)Y^3"}}},
      {"10",
       "Smooth plane cubics over F_5 admitting exactly two classes of representations",
       {{"5", "X^2Z + XY^2 + YZ^2 - 2XYZ"}, {"5", "X^2Z - XZ^2 - 2XYZ - Y^3"}}},
      {"11",
       "Smooth plane cubics over F_7 admitting exactly two classes of representations",
       {{"7", "X^2Z + XY^2 + 3YZ^2"}, {"7", "X^2Z - XZ^2 + 3Y^3"}}},
  };
  return tables;
}

const std::vector<std::string>& table_ids() {
  static const std::vector<std::string> ids{"1", "2", "3", "5", "6", "sym", "7", "8", "9", "10", "11"};
  return ids;
}

std::string render_table(const std::string& id, Format format) {
  if (format == Format::Json) return table_json(id).dump(2) + "\n";
  std::string out;
  for (const auto& g : grids(id)) {
    if (!out.empty()) out += "\n";
    out += format == Format::Csv ? render_csv(g) : render_text(g);
  }
  return out;
}

Json table_json(const std::string& id) {
  if (const CurveTable* t = find_curve_table(id)) {
    Json rows = Json::array();
    for (const auto& row : t->rows) {
      const ComputedRow r = compute_row(row);
      Json points = Json::array();
      for (const auto& [p, flex] : r.points) points.push_back(Json{{"point", format_point(p)}, {"flex", flex}});
      Json reps = Json::array();
      for (const auto& e : r.reps) {
        Json j = rep_to_json(e.rep);
        j["point"] = format_point(e.point);
        j["lambda"] = format_element(e.lambda);
        reps.push_back(j);
      }
      rows.push_back(Json{{"field", r.form.field().literal()},
                          {"form", format_form(r.form)},
                          {"points", points},
                          {"ldr", r.classes},
                          {"representations", reps}});
    }
    return Json{{"id", id}, {"caption", t->caption}, {"rows", rows}};
  }
  if (id == "sym") {
    Json rows = Json::array();
    for (const auto& row : find_curve_table("6")->rows) {
      const SymmetricRow r = compute_symmetric(row);
      Json j = rep_to_json(r.symmetric);
      j["form"] = format_form(r.form);
      j["a"] = mat3_to_json(r.a);
      rows.push_back(j);
    }
    return Json{{"id", id}, {"rows", rows}};
  }
  Json out{{"id", id}, {"tables", Json::array()}};
  for (const auto& g : grids(id)) out["tables"].push_back(grid_json(g));
  return out;
}

}  // namespace cubicdet::cli
