#include "cubicdet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "cubicdet/error.hpp"

namespace cubicdet {
namespace {

using Raw = TernaryCubic::Raw;
using Group = std::vector<std::array<std::uint32_t, 9>>;

// Scales so the first nonzero coefficient is 1; f must be nonzero.
void make_monic(const FieldSpec& fs, Raw& f) {
  std::size_t k = 0;
  while (f[k] == 0) ++k;
  if (f[k] == 1) return;
  const std::uint32_t inv = fs.inv(f[k]);
  for (; k < 10; ++k) f[k] = fs.mul(f[k], inv);
}

std::uint64_t raw_index(const Raw& f, std::uint64_t q) {
  std::uint64_t idx = 0;
  for (std::uint32_t c : f) idx = idx * q + c;
  return idx;
}

std::uint32_t det3(const FieldSpec& fs, const std::array<std::uint32_t, 9>& a) {
  auto term = [&](int i, int j, int k) { return fs.mul(a[i], fs.mul(a[3 + j], a[6 + k])); };
  std::uint32_t pos = fs.add(fs.add(term(0, 1, 2), term(1, 2, 0)), term(2, 0, 1));
  std::uint32_t neg = fs.add(fs.add(term(0, 2, 1), term(2, 1, 0)), term(1, 0, 2));
  return fs.sub(pos, neg);
}

// Sorted, deduplicated indices of the monic images of f under the group.
std::vector<std::uint64_t> orbit_of(const FieldSpec& fs, const Raw& f, const Group& group, unsigned jobs) {
  auto work = [&](std::size_t begin, std::size_t end, std::vector<std::uint64_t>& out) {
    Raw img;
    out.reserve(end - begin);
    for (std::size_t g = begin; g < end; ++g) {
      substitute_raw(fs, group[g].data(), f, img);
      make_monic(fs, img);
      out.push_back(raw_index(img, fs.q()));
    }
  };
  std::vector<std::vector<std::uint64_t>> parts(std::max(1u, jobs));
  if (parts.size() == 1) {
    work(0, group.size(), parts[0]);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (group.size() + parts.size() - 1) / parts.size();
    for (std::size_t j = 0; j < parts.size(); ++j) {
      const std::size_t begin = std::min(group.size(), j * chunk), end = std::min(group.size(), begin + chunk);
      workers.emplace_back([&, j, begin, end] { work(begin, end, parts[j]); });
    }
  }
  std::vector<std::uint64_t> all;
  for (auto& part : parts) all.insert(all.end(), part.begin(), part.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

}  // namespace

Group projective_linear_group(const FieldSpec& fs) {
  const std::uint64_t q = fs.q();
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  Group out;
  std::array<std::uint32_t, 9> a{};
  for (std::uint64_t n = 0; n < total; ++n) {
    std::uint64_t v = n;
    for (int e = 8; e >= 0; --e) {
      a[e] = static_cast<std::uint32_t>(v % q);
      v /= q;
    }
    const auto first = std::find_if(a.begin(), a.end(), [](std::uint32_t x) { return x != 0; });
    if (first == a.end() || *first != 1) continue;
    if (det3(fs, a) != 0) out.push_back(a);
  }
  return out;
}

std::uint64_t form_index(const TernaryCubic& f) { return raw_index(f.raw(), f.field().q()); }

TernaryCubic form_from_index(const FieldSpec& fs, std::uint64_t index) {
  Raw raw{};
  for (int k = 9; k >= 0; --k) {
    raw[k] = static_cast<std::uint32_t>(index % fs.q());
    index /= fs.q();
  }
  if (index) throw Error(ErrorCode::InvalidArgument, "form index out of range");
  return TernaryCubic(fs, raw);
}

std::uint64_t stabilizer_size(const TernaryCubic& f, const Group& group) {
  const FieldSpec& fs = f.field();
  Raw target = f.raw();
  make_monic(fs, target);
  std::uint64_t count = 0;
  Raw img;
  for (const auto& g : group) {
    substitute_raw(fs, g.data(), f.raw(), img);
    make_monic(fs, img);
    if (img == target) ++count;
  }
  return count;
}

OrbitCensus census(std::uint64_t q, const CensusOptions& options) {
  if (!(q == 2 || q == 3 || (q == 4 && options.allow_slow)))
    throw Error(ErrorCode::TooLarge, "census supports q = 2, 3 (q = 4 with the slow opt-in)");
  const auto pm = prime_power(q);
  const FieldSpec& fs = mk_field(pm->first, pm->second);
  const Group group = projective_linear_group(fs);

  std::uint64_t total = 1;
  for (int i = 0; i < 10; ++i) total *= q;
  std::vector<bool> visited(total, false);

  OrbitCensus out;
  out.q = q;
  out.field = &fs;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    if (visited[idx]) continue;
    TernaryCubic f = form_from_index(fs, idx);
    if (f.monic() != f) continue;
    const auto members = orbit_of(fs, f.raw(), group, options.jobs);
    for (auto m : members) visited[m] = true;
    if (!is_smooth(f)) continue;

    Orbit orbit;
    orbit.representative = f;
    orbit.orbit_size = members.size();
    orbit.point_count = rational_points(f).size();
    if (options.keep_members) {
      orbit.members.reserve(members.size());
      for (auto m : members) orbit.members.push_back(form_from_index(fs, m));
    }
    out.smooth_forms += orbit.orbit_size;
    ++out.histogram[orbit.point_count];
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

std::vector<CrosscheckRow> crosscheck(const OrbitCensus& c) {
  const auto bound = static_cast<std::uint64_t>(c.q + 1 + std::floor(2 * std::sqrt(static_cast<double>(c.q))));
  std::vector<CrosscheckRow> rows;
  for (std::uint64_t n = 0; n <= std::max(bound, c.histogram.empty() ? 0 : c.histogram.rbegin()->first); ++n) {
    CrosscheckRow row;
    row.n = n;
    const auto it = c.histogram.find(n);
    row.census = it == c.histogram.end() ? 0 : it->second;
    row.formula = cubics_with_points(static_cast<long long>(c.q), static_cast<long long>(n)).total;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace cubicdet
