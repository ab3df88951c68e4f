#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iomanip>
#include <fstream>
#include <sstream>

#include "cubicdet/counting.hpp"
#include "cubicdet/detrep.hpp"
#include "cubicdet/io.hpp"
#include "cubicdet/oracle.hpp"
#include "cubicdet/text.hpp"
#include "tables.hpp"

namespace cubicdet::cli {
namespace {

struct Globals {
  bool json = false;
  bool csv = false;
  unsigned jobs = 1;

  Format format() const { return json ? Format::Json : csv ? Format::Csv : Format::Text; }
};

std::string strip_field_prefix(std::string lit) {
  if (lit.rfind("F_", 0) == 0) return lit.substr(2);
  if (!lit.empty() && lit[0] == 'F') return lit.substr(1);
  return lit;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

// Either a JSON file or inline "FIELD: text".
template <typename FromJson, typename FromText>
auto load(const std::string& arg, FromJson from_json, FromText from_text) {
  if (std::filesystem::is_regular_file(arg)) return from_json(read_json_file(arg));
  const auto colon = arg.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::ParseError, "\"" + arg + "\" is neither a file nor of the form FIELD: text");
  const FieldSpec& fs = parse_field(strip_field_prefix(arg.substr(0, colon)));
  return from_text(fs, std::string_view(arg).substr(colon + 1));
}

TernaryCubic load_curve(const std::string& arg) {
  return load(arg, [](const Json& j) { return cubic_from_json(j); },
              [](const FieldSpec& fs, std::string_view text) { return parse_form(fs, text); });
}

LinearMatrixRep load_rep(const std::string& arg) {
  return load(arg, [](const Json& j) { return rep_from_json(j); },
              [](const FieldSpec& fs, std::string_view text) { return parse_matrix(fs, text); });
}

// A single rep, an array of reps, or an object listing "representations".
std::vector<LinearMatrixRep> load_rep_list(const std::string& path) {
  const Json j = read_json_file(path);
  const Json& list = j.is_object() && j.contains("representations") ? j.at("representations") : j;
  std::vector<LinearMatrixRep> out;
  if (list.is_array()) {
    for (const auto& item : list) out.push_back(rep_from_json(item));
  } else {
    out.push_back(rep_from_json(list));
  }
  return out;
}

void require_smooth(const TernaryCubic& f) {
  if (f.is_zero() || !is_smooth(f)) throw Error(ErrorCode::SingularInput, format_form(f) + " is not smooth");
}

// ---------------------------------------------------------------------------

int cmd_field(const Globals& g, const std::string& literal, std::ostream& out) {
  const FieldSpec& fs = parse_field(strip_field_prefix(literal));
  std::vector<std::string> elements;
  for (const auto& a : enumerate(fs)) elements.push_back(format_element(a));
  std::string modulus = "x";
  if (fs.m() > 1) {
    modulus.clear();
    const auto& f = fs.modulus();
    for (int d = static_cast<int>(f.size()) - 1; d >= 0; --d) {
      if (!f[d]) continue;
      if (!modulus.empty()) modulus += " + ";
      if (f[d] != 1 || d == 0) modulus += std::to_string(f[d]);
      if (d >= 1) modulus += "w";
      if (d > 1) modulus += "^" + std::to_string(d);
    }
  }
  if (g.json) {
    out << Json{{"field", fs.literal()}, {"p", fs.p()}, {"m", fs.m()}, {"q", fs.q()}, {"modulus", fs.modulus()},
                {"elements", elements}}
               .dump(2)
        << "\n";
    return kOk;
  }
  out << "F_" << fs.q() << " = F_" << fs.p();
  if (fs.m() > 1) out << "[w]/(" << modulus << ")";
  out << "\nelements:";
  for (std::size_t i = 0; i < elements.size(); ++i) out << (i ? ", " : " ") << elements[i];
  out << "\n";
  return kOk;
}

int cmd_points(const Globals& g, const std::string& curve, const std::string& p0_text, std::ostream& out) {
  const TernaryCubic f = load_curve(curve);
  require_smooth(f);
  std::optional<ProjPoint> p0;
  if (!p0_text.empty()) {
    p0 = parse_point(f.field(), p0_text);
    if (!evaluate(f, *p0).is_zero()) throw Error(ErrorCode::NotOnCurve, format_point(*p0) + " is not on the curve");
  }
  const auto points = rational_points(f);
  if (g.json) {
    Json list = Json::array();
    for (const auto& p : points)
      list.push_back(Json{{"point", format_point(p)}, {"flex", is_flex(f, p)}, {"base", p0 && *p0 == p}});
    out << Json{{"curve", cubic_to_json(f)}, {"points", list}}.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << (i ? ", " : "") << format_point(points[i]);
    if (is_flex(f, points[i])) out << " (flex)";
    if (p0 && *p0 == points[i]) out << " (base)";
  }
  out << "\n";
  return kOk;
}

int cmd_detrep(const Globals& g, const std::string& curve, const std::string& p0_text, const std::string& witness,
               bool scan, std::ostream& out) {
  const TernaryCubic f = load_curve(curve);
  require_smooth(f);
  std::optional<ProjPoint> p0;
  if (!p0_text.empty()) p0 = parse_point(f.field(), p0_text);
  const auto points = rational_points(f);
  if (points.empty()) {
    // No rational point: no representations at all.
    if (g.json) out << Json{{"curve", cubic_to_json(f)}, {"representations", Json::array()}}.dump(2) << "\n";
    return kOk;
  }
  const auto reps = all_reps(f, p0);
  for (const auto& e : reps)
    if (is_ldr_of(e.rep, f) != e.lambda) throw Error(ErrorCode::BrokenInvariant, "determinant check failed");

  std::vector<LinearMatrixRep> references;
  if (!witness.empty()) references = load_rep_list(witness);
  EquivalenceOptions opts;
  opts.jobs = g.jobs;
  if (scan) opts.method = EquivalenceOptions::Method::GroupScan;

  struct Match {
    std::size_t index;
    EquivalenceWitness w;
  };
  auto match_of = [&](const LinearMatrixRep& m) -> std::optional<Match> {
    for (std::size_t i = 0; i < references.size(); ++i)
      if (auto w = equivalent(m, references[i], opts)) return Match{i, *w};
    return std::nullopt;
  };

  if (g.json) {
    Json list = Json::array();
    for (const auto& e : reps) {
      Json j = rep_to_json(e.rep);
      j["point"] = format_point(e.point);
      j["lambda"] = element_to_json(e.lambda);
      if (!references.empty()) {
        const auto m = match_of(e.rep);
        j["witness"] = m ? Json{{"reference", m->index}, {"a", mat3_to_json(m->w.a.matrix())},
                                {"b", mat3_to_json(m->w.b.matrix())}}
                         : Json(nullptr);
      }
      list.push_back(j);
    }
    out << Json{{"curve", cubic_to_json(f)}, {"base_point", format_point(p0 ? *p0 : points.front())},
                {"representations", list}}
               .dump(2)
        << "\n";
    return kOk;
  }
  for (const auto& e : reps) {
    out << format_point(e.point) << "  lambda = " << format_element(e.lambda) << "  " << format_matrix(e.rep) << "\n";
    if (references.empty()) continue;
    if (const auto m = match_of(e.rep))
      out << "  ~ reference " << m->index << ": " << format_matrix(references[m->index])
          << " = A M B with A = " << format_mat3(m->w.a.matrix()) << ", B = " << format_mat3(m->w.b.matrix()) << "\n";
    else
      out << "  no equivalent reference\n";
  }
  return kOk;
}

int cmd_verify(const Globals& g, const std::string& curve, const std::string& rep_arg, std::ostream& out) {
  const TernaryCubic f = load_curve(curve);
  const LinearMatrixRep rep = load_rep(rep_arg);
  if (&rep.field() != &f.field()) throw Error(ErrorCode::FieldMismatch, "curve and matrix over different fields");
  const TernaryCubic det = det_cubic(rep);
  const auto lambda = f.is_zero() ? std::nullopt : is_ldr_of(rep, f);
  if (g.json) {
    out << Json{{"ok", lambda.has_value()},
                {"lambda", lambda ? element_to_json(*lambda) : Json(nullptr)},
                {"det", format_form(det)},
                {"form", format_form(f)}}
               .dump(2)
        << "\n";
  } else if (lambda) {
    out << "lambda = " << format_element(*lambda) << "\n";
  } else {
    out << "not a representation: det(M) is not a nonzero multiple of F\n"
        << "  det(M) = " << format_form(det) << "\n"
        << "  F      = " << format_form(f) << "\n";
  }
  return lambda ? kOk : kVerifyFailed;
}

int cmd_classnum(const Globals& g, long long delta, std::ostream& out) {
  const auto forms = reduced_forms(delta);
  if (g.json) {
    Json list = Json::array();
    for (const auto& f : forms) list.push_back({f.a, f.b, f.c});
    out << Json{{"delta", delta}, {"H", forms.size()}, {"forms", list}}.dump(2) << "\n";
    return kOk;
  }
  out << "H(" << delta << ") = " << forms.size() << "\n";
  for (const auto& f : forms) out << "  (" << f.a << ", " << f.b << ", " << f.c << ")\n";
  return kOk;
}

void print_report(const Globals& g, const CountReport& r, bool ldr, std::ostream& out) {
  if (g.json) {
    Json j = report_to_json(r);
    j["kind"] = ldr ? "cub" : "points";
    out << j.dump(2) << "\n";
  } else if (g.csv) {
    out << "q,n,e,e3,e33,t0,t1,eps,total\n"
        << r.q << "," << r.n << "," << r.e << "," << r.e3 << "," << r.e33 << "," << r.t0.str() << "," << r.t1.str()
        << "," << r.eps << "," << r.total << "\n";
  } else {
    const long long n = ldr ? r.n - 1 : r.n;
    out << (ldr ? "Cub_" : "classes with n points, q = ") << (ldr ? std::to_string(r.q) + "(" + std::to_string(n) + ")" : std::to_string(r.q) + ", n = " + std::to_string(n))
        << " = " << r.total << "\n"
        << "  #E_q(" << r.n << ") = " << r.e << "\n"
        << "  #E_q,3(" << r.n << ") = " << r.e3 << "\n"
        << "  #E_q,3,3(" << r.n << ") = " << r.e33 << "\n"
        << "  t0 = " << r.t0.str() << ", t1 = " << r.t1.str() << "\n"
        << "  eps_q(" << r.q + 1 - r.n << ") = " << r.eps << "\n";
  }
}

int cmd_classify(const Globals& g, long long q, bool slow, const std::string& out_path, std::ostream& out) {
  CensusOptions opts;
  opts.allow_slow = slow;
  opts.jobs = g.jobs;
  const OrbitCensus c = census(static_cast<std::uint64_t>(q), opts);
  const auto rows = crosscheck(c);
  const auto mismatches = std::count_if(rows.begin(), rows.end(), [](const CrosscheckRow& r) { return !r.match(); });
  Json j = census_to_json(c);
  Json check = Json::array();
  for (const auto& r : rows) check.push_back(Json{{"n", r.n}, {"census", r.census}, {"formula", r.formula}});
  j["crosscheck"] = check;
  if (!out_path.empty()) {
    std::ofstream f(out_path);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
    f << j.dump(2) << "\n";
  }
  if (g.json) {
    out << j.dump(2) << "\n";
  } else if (g.csv) {
    out << "n,census,formula\n";
    for (const auto& r : rows) out << r.n << "," << r.census << "," << r.formula << "\n";
  } else {
    out << "F_" << q << ": " << c.orbits.size() << " classes of smooth plane cubics (" << c.smooth_forms
        << " smooth forms up to scalar)\n"
        << "#C(F_q)  census  formula\n";
    for (const auto& r : rows)
      if (r.census || r.formula)
        out << std::setw(7) << r.n << "  " << std::setw(6) << r.census << "  " << std::setw(7) << r.formula
            << (r.match() ? "" : "  MISMATCH") << "\n";
    out << (mismatches ? std::to_string(mismatches) + " mismatches\n" : "census agrees with the formula\n");
  }
  return mismatches ? kVerifyFailed : kOk;
}

int cmd_tables(const Globals& g, const std::string& id, std::ostream& out) {
  if (id != "all") {
    out << render_table(id, g.format());
    return kOk;
  }
  if (g.json) {
    Json all = Json::array();
    for (const auto& t : table_ids()) all.push_back(table_json(t));
    out << all.dump(2) << "\n";
    return kOk;
  }
  for (std::size_t i = 0; i < table_ids().size(); ++i) out << (i ? "\n" : "") << render_table(table_ids()[i], g.format());
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear determinantal representations of smooth plane cubics over finite fields", "cubicdet"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output where tabular");
  app.add_option("--jobs", g.jobs, "Worker threads for the census and the group scan")->check(CLI::Range(1u, 256u));

  std::function<int()> action;

  auto* field = app.add_subcommand("field", "Describe F_q and list its elements");
  std::string field_lit;
  field->add_option("field", field_lit, "Field literal, e.g. 4 or 2^2")->required();
  field->callback([&] { action = [&] { return cmd_field(g, field_lit, out); }; });

  std::string curve, p0, witness, rep;
  bool scan = false;
  auto* points = app.add_subcommand("points", "List the rational points of a smooth cubic");
  points->add_option("curve", curve, "Curve JSON file or \"FIELD: form\"")->required();
  points->add_option("--p0", p0, "Base point to mark");
  points->callback([&] { action = [&] { return cmd_points(g, curve, p0, out); }; });

  auto* detrep = app.add_subcommand("detrep", "One representation per rational point other than P0");
  detrep->add_option("curve", curve, "Curve JSON file or \"FIELD: form\"")->required();
  detrep->add_option("--p0", p0, "Base point (default: first rational point)");
  detrep->add_option("--witness", witness, "JSON file of reference matrices to match up to equivalence");
  detrep->add_flag("--scan", scan, "Search witnesses by scanning GL_3 instead of solving linearly");
  detrep->callback([&] { action = [&] { return cmd_detrep(g, curve, p0, witness, scan, out); }; });

  auto* verify = app.add_subcommand("verify", "Check det(M) = lambda F");
  verify->add_option("curve", curve, "Curve JSON file or \"FIELD: form\"")->required();
  verify->add_option("rep", rep, "Matrix JSON file or \"FIELD: [[..], [..], [..]]\"")->required();
  verify->callback([&] { action = [&] { return cmd_verify(g, curve, rep, out); }; });

  auto* classnum = app.add_subcommand("classnum", "Kronecker class number H(delta)");
  long long delta = 0;
  classnum->add_option("delta", delta, "Negative discriminant")->required();
  classnum->callback([&] { action = [&] { return cmd_classnum(g, delta, out); }; });

  auto* count = app.add_subcommand("count", "Counting formula for classes of smooth cubics");
  long long q = 0, n = -1, npoints = -1;
  std::string table;
  count->add_option("--q", q, "Field size");
  count->add_option("--n", n, "Number of classes of representations");
  count->add_option("--points", npoints, "Number of rational points");
  count->add_option("--table", table, "Print table 1, 2 or 3 instead")->check(CLI::IsMember({"1", "2", "3"}));
  count->callback([&] {
    action = [&]() -> int {
      if (!table.empty()) return cmd_tables(g, table, out);
      if (q < 2 || (n < 0) == (npoints < 0))
        throw Error(ErrorCode::InvalidArgument, "count needs --q and exactly one of --n, --points");
      if (n >= 0) print_report(g, cub(q, n), true, out);
      else print_report(g, cubics_with_points(q, npoints), false, out);
      return kOk;
    };
  });

  auto* classify = app.add_subcommand("classify", "Brute-force census of smooth cubics over F_2, F_3 (F_4 with --slow)");
  bool slow = false;
  std::string census_out;
  classify->add_option("--q", q, "Field size")->required();
  classify->add_flag("--slow", slow, "Allow q = 4");
  classify->add_option("--out", census_out, "Write the census JSON here");
  classify->callback([&] { action = [&] { return cmd_classify(g, q, slow, census_out, out); }; });

  auto* tables = app.add_subcommand("tables", "Recompute one of the tables");
  std::string table_id;
  std::vector<std::string> ids = table_ids();
  ids.push_back("all");
  tables->add_option("id", table_id, "1, 2, 3, 5, 6, sym, 7, 8, 9, 10, 11 or all")->required()->check(CLI::IsMember(ids));
  tables->callback([&] { action = [&] { return cmd_tables(g, table_id, out); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kParseOrIo;
  }

  try {
    return action ? action() : kOk;
  } catch (const Error& e) {
    err << e.what() << "\n";
    if (e.code() == ErrorCode::ParseError) return kParseOrIo;
    if (e.code() == ErrorCode::BrokenInvariant) return kVerifyFailed;
    return kPrecondition;
  } catch (const nlohmann::json::exception& e) {
    err << e.what() << "\n";
    return kParseOrIo;
  }
}

}  // namespace cubicdet::cli
