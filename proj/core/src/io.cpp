#include "cubicdet/io.hpp"

#include "cubicdet/text.hpp"

namespace cubicdet {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing \"") + key + "\"");
  return j.at(key);
}

// Wraps nlohmann's type errors as parse errors.
template <typename F>
decltype(auto) guarded(F&& f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    bad(e.what());
  }
}

}  // namespace

Json field_to_json(const FieldSpec& fs) { return fs.literal(); }

const FieldSpec& field_from_json(const Json& j) {
  return guarded([&]() -> const FieldSpec& {
    const auto lit = member(j, "field").get<std::string>();
    if (!j.contains("modulus")) return parse_field(lit);
    const FieldSpec& base = parse_field(lit);
    auto modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return mk_field(base.p(), base.m(), modulus);
  });
}

Json element_to_json(const FieldElement& a) {
  Json out = Json::array();
  for (auto c : a.coeffs()) out.push_back(c);
  while (out.size() > 1 && out.back() == 0) out.erase(out.end() - 1);
  return out;
}

FieldElement element_from_json(const FieldSpec& fs, const Json& j) {
  return guarded([&] {
    if (j.is_number_integer()) return fs.from_int(j.get<long long>());
    if (j.is_string()) return parse_element(fs, j.get<std::string>());
    if (!j.is_array()) bad("field element must be an array of coefficients");
    const auto c = j.get<std::vector<long long>>();
    if (c.size() > fs.m()) bad("too many coefficients for F_" + std::to_string(fs.q()));
    return fs.from_coeffs(c);
  });
}

Json point_to_json(const ProjPoint& p) {
  return Json::array({element_to_json(p.x()), element_to_json(p.y()), element_to_json(p.z())});
}

ProjPoint point_from_json(const FieldSpec& fs, const Json& j) {
  if (j.is_string()) return parse_point(fs, j.get<std::string>());
  if (!j.is_array() || j.size() != 3) bad("point must have three coordinates");
  return ProjPoint(element_from_json(fs, j[0]), element_from_json(fs, j[1]), element_from_json(fs, j[2]));
}

Json mat3_to_json(const Mat3& m) {
  Json out = Json::array();
  for (int r = 0; r < 3; ++r) {
    Json row = Json::array();
    for (int c = 0; c < 3; ++c) row.push_back(element_to_json(m(r, c)));
    out.push_back(row);
  }
  return out;
}

Mat3 mat3_from_json(const FieldSpec& fs, const Json& j) {
  if (j.is_string()) return parse_mat3(fs, j.get<std::string>());
  if (!j.is_array() || j.size() != 3) bad("matrix must have three rows");
  Mat3 m(fs);
  for (int r = 0; r < 3; ++r) {
    if (!j[r].is_array() || j[r].size() != 3) bad("matrix rows must have three entries");
    for (int c = 0; c < 3; ++c) m(r, c) = element_from_json(fs, j[r][c]);
  }
  return m;
}

Json cubic_to_json(const TernaryCubic& f) {
  Json out;
  out["field"] = field_to_json(f.field());
  if (!f.field().has_default_modulus()) out["modulus"] = f.field().modulus();
  Json coeffs = Json::object();
  for (std::size_t k = 0; k < 10; ++k)
    if (!f.coeff(k).is_zero()) coeffs[std::string(kCubicLabels[k])] = element_to_json(f.coeff(k));
  out["coeffs"] = coeffs;
  out["form"] = format_form(f);
  return out;
}

TernaryCubic cubic_from_json(const Json& j) {
  const FieldSpec& fs = field_from_json(j);
  if (j.contains("coeffs")) {
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_object()) bad("\"coeffs\" must be an object");
    TernaryCubic f(fs);
    for (const auto& [label, value] : coeffs.items()) {
      const auto k = cubic_index(label);
      if (!k) bad("unknown coefficient label \"" + label + "\"");
      f.set(*k, element_from_json(fs, value));
    }
    return f;
  }
  return guarded([&] { return parse_form(fs, member(j, "form").get<std::string>()); });
}

Json rep_to_json(const LinearMatrixRep& m) {
  Json out;
  out["field"] = field_to_json(m.field());
  if (!m.field().has_default_modulus()) out["modulus"] = m.field().modulus();
  for (int v = 0; v < 3; ++v) out["m" + std::to_string(v)] = mat3_to_json(m.coeff(v));
  out["matrix"] = format_matrix(m);
  return out;
}

LinearMatrixRep rep_from_json(const Json& j) {
  const FieldSpec& fs = field_from_json(j);
  if (j.contains("m0"))
    return LinearMatrixRep(
        {mat3_from_json(fs, member(j, "m0")), mat3_from_json(fs, member(j, "m1")), mat3_from_json(fs, member(j, "m2"))});
  return guarded([&] { return parse_matrix(fs, member(j, "matrix").get<std::string>()); });
}

Json witness_to_json(const EquivalenceWitness& w) {
  return Json{{"a", mat3_to_json(w.a.matrix())}, {"b", mat3_to_json(w.b.matrix())}};
}

EquivalenceWitness witness_from_json(const FieldSpec& fs, const Json& j) {
  return {LinearTransform(mat3_from_json(fs, member(j, "a"))), LinearTransform(mat3_from_json(fs, member(j, "b")))};
}

Json report_to_json(const CountReport& r) {
  auto ext = [](const ExtInt& t) { return t.is_infinite() ? Json("inf") : Json(t.value()); };
  return Json{{"q", r.q},   {"n", r.n},   {"e", r.e},   {"e3", r.e3},   {"e33", r.e33},
              {"t0", ext(r.t0)}, {"t1", ext(r.t1)}, {"eps", r.eps}, {"total", r.total}};
}

Json census_to_json(const OrbitCensus& c) {
  Json orbits = Json::array();
  for (const auto& o : c.orbits) {
    orbits.push_back(Json{{"representative", cubic_to_json(o.representative)},
                          {"orbit_size", o.orbit_size},
                          {"point_count", o.point_count}});
  }
  Json hist = Json::object();
  for (const auto& [n, count] : c.histogram) hist[std::to_string(n)] = count;
  return Json{{"q", c.q}, {"smooth_forms", c.smooth_forms}, {"histogram", hist}, {"orbits", orbits}};
}

}  // namespace cubicdet
