#include "grp/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "grp/error.hpp"
#include "grp/witness.hpp"

namespace grp {
namespace {

// Cycle start..start+len-1 inside a possibly larger point set.
Perm cycle_on(int degree, int start, int len) {
  std::vector<uint16_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = uint16_t(i);
  for (int i = 0; i < len; ++i) img[start + i] = uint16_t(start + (i + 1) % len);
  return Perm(std::move(img));
}

Perm reflection_on(int m) {
  std::vector<uint16_t> img(m);
  for (int i = 0; i < m; ++i) img[i] = uint16_t((m - i) % m);
  return Perm(std::move(img));
}

// Generalized quaternion group of order 4m: a of order 2m, b with b^2 = a^m
// and b^-1 a b = a^-1, realized by right multiplication on the 4m elements
// a^i b^j (index i + 2m j).
std::vector<Perm> quaternion_gens(int m) {
  int n = 4 * m;
  auto mul = [m](std::pair<int, int> g, std::pair<int, int> h) {
    auto [i, j] = g;
    auto [k, l] = h;
    if (j == 0) return std::pair<int, int>{(i + k) % (2 * m), l};
    if (l == 0) return std::pair<int, int>{(i - k + 2 * m) % (2 * m), 1};
    return std::pair<int, int>{(i - k + m + 4 * m) % (2 * m), 0};
  };
  auto rep = [&](std::pair<int, int> g) {
    std::vector<uint16_t> img(n);
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2 * m; ++i) {
        auto r = mul({i, j}, g);
        img[i + 2 * m * j] = uint16_t(r.first + 2 * m * r.second);
      }
    return Perm(std::move(img));
  };
  return {rep({1, 0}), rep({0, 1})};
}

// Determinant-one 2x2 matrices over arithmetic mod 3, acting on the eight
// nonzero coordinate pairs.
std::vector<Perm> special_linear_gens() {
  std::vector<std::pair<int, int>> pts;
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y)
      if (x != 0 || y != 0) pts.emplace_back(x, y);
  auto locate = [&](int x, int y) {
    x = ((x % 3) + 3) % 3;
    y = ((y % 3) + 3) % 3;
    for (size_t k = 0; k < pts.size(); ++k)
      if (pts[k].first == x && pts[k].second == y) return int(k);
    throw InternalDisagreement("matrix action left the nonzero pairs");
  };
  auto act = [&](auto f) {
    std::vector<uint16_t> img(pts.size());
    for (size_t k = 0; k < pts.size(); ++k) {
      auto [nx, ny] = f(pts[k].first, pts[k].second);
      img[k] = uint16_t(locate(nx, ny));
    }
    return Perm(std::move(img));
  };
  Perm s = act([](int x, int y) { return std::pair<int, int>{-y, x}; });
  Perm t = act([](int x, int y) { return std::pair<int, int>{x + y, y}; });
  return {s, t};
}

// Re-point p to act on offset..offset+deg(p)-1 inside a larger point set.
Perm shifted(const Perm& p, int offset, int degree) {
  std::vector<uint16_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = uint16_t(i);
  for (int i = 0; i < p.degree(); ++i) img[offset + i] = uint16_t(offset + p[i]);
  return Perm(std::move(img));
}

int locate_element(const GroupTable& t, const Perm& p) {
  for (int e = 0; e < t.order; ++e)
    if (t.elt_perm[e] == p) return e;
  throw InternalDisagreement("generator not found in its own closure");
}

PreparedGroup make(std::string name, int degree, std::vector<Perm> gens, int cap,
                   std::vector<std::string> tags = {}) {
  PreparedGroup pg;
  pg.name = std::move(name);
  pg.degree = degree;
  pg.generators = std::move(gens);
  pg.tags = std::move(tags);
  pg.table = build_group(GroupSpec{pg.name, pg.degree, pg.generators}, cap);
  return pg;
}

// Disjoint-support union of the factors' generators; the factor subgroups are
// recovered as closures and double-checked to form a direct decomposition.
PreparedGroup make_product(const std::string& name, const PreparedGroup& lhs,
                           const PreparedGroup& rhs, int cap,
                           std::vector<std::string> tags = {}) {
  int degree = lhs.degree + rhs.degree;
  std::vector<Perm> gens, lg, rg;
  for (const Perm& p : lhs.generators) {
    lg.push_back(shifted(p, 0, degree));
    gens.push_back(lg.back());
  }
  for (const Perm& p : rhs.generators) {
    rg.push_back(shifted(p, lhs.degree, degree));
    gens.push_back(rg.back());
  }
  PreparedGroup pg = make(name, degree, std::move(gens), cap, std::move(tags));
  std::vector<int> le, re;
  for (const Perm& p : lg) le.push_back(locate_element(*pg.table, p));
  for (const Perm& p : rg) re.push_back(locate_element(*pg.table, p));
  Subgroup left = closure(pg.table, le);
  Subgroup right = closure(pg.table, re);
  if (1LL * left.order() * right.order() != pg.table->order ||
      (left.members() & right.members()).count() != 1 || !is_normal(left) ||
      !is_normal(right))
    throw InternalDisagreement("factors of " + name + " do not form a direct decomposition");
  pg.split = DirectProduct{pg.table, std::move(left), std::move(right)};
  return pg;
}

std::string strip_line_zero(std::string msg) {
  const std::string suffix = " (line 0)";
  if (msg.size() >= suffix.size() &&
      msg.compare(msg.size() - suffix.size(), suffix.size(), suffix) == 0)
    msg.erase(msg.size() - suffix.size());
  return msg;
}

}  // namespace

std::vector<PreparedGroup> builtin_catalog(int cap) {
  std::vector<PreparedGroup> out;
  auto try_add = [&](auto&& build) {
    try {
      out.push_back(build());
    } catch (const OrderExceedsCap&) {
      // caller asked for a smaller corpus; drop the entry silently
    }
  };

  for (int n = 1; n <= 24; ++n)
    try_add([&] {
      std::vector<Perm> gens;
      if (n > 1) gens.push_back(cycle_on(n, 0, n));
      return make("C" + std::to_string(n), std::max(n, 1), std::move(gens), cap,
                  {"abelian"});
    });

  for (int n = 6; n <= 24; n += 2)
    try_add([&] {
      int m = n / 2;
      return make("D" + std::to_string(n), m, {cycle_on(m, 0, m), reflection_on(m)}, cap);
    });

  try_add([&] { return make("Q8", 8, quaternion_gens(2), cap); });
  try_add([&] { return make("Q16", 16, quaternion_gens(4), cap); });

  try_add([&] {
    return make("S3", 3, {parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)}, cap);
  });
  try_add([&] {
    return make("S4", 4, {parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)}, cap);
  });
  try_add([&] {
    return make("S5", 5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1)", 5)}, cap);
  });
  try_add([&] {
    return make("A4", 4, {parse_cycles("(0 1 2)", 4), parse_cycles("(1 2 3)", 4)}, cap);
  });
  try_add([&] {
    return make("A5", 5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1 2)", 5)}, cap,
                {"simple"});
  });
  try_add([&] { return make("SL23", 8, special_linear_gens(), cap); });

  for (int p : {2, 3, 5})
    try_add([&] {
      return make("E" + std::to_string(p * p), 2 * p,
                  {cycle_on(2 * p, 0, p), cycle_on(2 * p, p, p)}, cap, {"abelian"});
    });

  try_add([&] {
    GroupSpec spec = witness_group_spec();
    PreparedGroup pg;
    pg.name = spec.name;
    pg.degree = spec.degree;
    pg.generators = spec.generators;
    pg.tags = {"counterexample"};
    pg.table = build_group(spec, cap);
    return pg;
  });

  {
    PreparedGroup c2 = make("C2", 2, {cycle_on(2, 0, 2)}, kHardOrderCap);
    PreparedGroup c3 = make("C3", 3, {cycle_on(3, 0, 3)}, kHardOrderCap);
    PreparedGroup c5 = make("C5", 5, {cycle_on(5, 0, 5)}, kHardOrderCap);
    PreparedGroup c6 = make("C6", 6, {cycle_on(6, 0, 6)}, kHardOrderCap);
    PreparedGroup s3 =
        make("S3", 3, {parse_cycles("(0 1 2)", 3), parse_cycles("(0 1)", 3)}, kHardOrderCap);
    PreparedGroup s4 =
        make("S4", 4, {parse_cycles("(0 1 2 3)", 4), parse_cycles("(0 1)", 4)}, kHardOrderCap);
    PreparedGroup a5 = make(
        "A5", 5, {parse_cycles("(0 1 2 3 4)", 5), parse_cycles("(0 1 2)", 5)}, kHardOrderCap);
    PreparedGroup q8 = make("Q8", 8, quaternion_gens(2), kHardOrderCap);
    try_add([&] { return make_product("S3xC2", s3, c2, cap); });
    try_add([&] { return make_product("S3xC5", s3, c5, cap); });
    try_add([&] { return make_product("Q8xC3", q8, c3, cap); });
    try_add([&] { return make_product("S4xC2", s4, c2, cap); });
    try_add([&] { return make_product("S3xS4", s3, s4, cap); });
    try_add([&] { return make_product("A5xC6", a5, c6, cap); });
  }

  std::stable_sort(out.begin(), out.end(), [](const PreparedGroup& a, const PreparedGroup& b) {
    if (a.table->order != b.table->order) return a.table->order < b.table->order;
    return a.name < b.name;
  });
  return out;
}

PreparedGroup load_group_file(const std::string& path, int cap) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  PreparedGroup pg;
  pg.source = path;
  bool have_name = false, have_degree = false;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    size_t last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    std::istringstream ls(line);
    std::string key, rest;
    ls >> key;
    std::getline(ls, rest);
    size_t r0 = rest.find_first_not_of(" \t");
    rest = r0 == std::string::npos ? std::string() : rest.substr(r0);
    if (key == "name") {
      if (have_name) throw ParseError("duplicate name line", line_no);
      if (rest.empty()) throw ParseError("name line needs a value", line_no);
      pg.name = rest;
      have_name = true;
    } else if (key == "degree") {
      if (have_degree) throw ParseError("duplicate degree line", line_no);
      int d = 0;
      try {
        size_t used = 0;
        d = std::stoi(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw ParseError("degree line needs an integer", line_no);
      }
      if (d < 1 || d > kHardOrderCap) throw ParseError("degree out of range", line_no);
      pg.degree = d;
      have_degree = true;
    } else if (key == "gen") {
      if (!have_degree) throw ParseError("gen line before the degree line", line_no);
      try {
        pg.generators.push_back(parse_cycles(rest, pg.degree));
      } catch (const DegreeMismatch& e) {
        throw DegreeMismatch(strip_line_zero(e.what()), line_no);
      } catch (const ParseError& e) {
        throw ParseError(strip_line_zero(e.what()), line_no);
      }
    } else {
      throw ParseError("unknown key '" + key + "'", line_no);
    }
  }
  if (!have_name) throw ParseError("missing name line", line_no);
  if (!have_degree) throw ParseError("missing degree line", line_no);
  pg.table = build_group(GroupSpec{pg.name, pg.degree, pg.generators}, cap);
  return pg;
}

std::string serialize_group(const PreparedGroup& g) {
  std::ostringstream out;
  out << "name " << g.name << "\n";
  out << "degree " << g.degree << "\n";
  for (const Perm& p : g.generators) out << "gen " << format_cycles(p) << "\n";
  return out.str();
}

}  // namespace grp
