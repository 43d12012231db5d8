#pragma once

#include <optional>
#include <string>
#include <vector>

#include "grp/group.hpp"
#include "grp/subgroup.hpp"

namespace grp {

// A corpus entry: generator description plus the built table.  Entries made
// of two commuting disjoint-support factors carry the recovered split.
struct PreparedGroup {
  std::string name;
  int degree = 0;
  std::vector<Perm> generators;
  std::vector<std::string> tags;
  std::string source = "builtin";
  TablePtr table;
  std::optional<DirectProduct> split;
};

// All built-in groups whose order fits the cap, sorted by (order, name).
std::vector<PreparedGroup> builtin_catalog(int cap = kHardOrderCap);

// Reads a line-oriented group description:
//   name <id>
//   degree <n>
//   gen <cycle notation>     (one line per generator, 0-based points)
// with '#' comments.  Throws ParseError / DegreeMismatch with the offending
// line number, or OrderExceedsCap from the closure.
PreparedGroup load_group_file(const std::string& path, int cap = kHardOrderCap);

// Inverse of load_group_file: text in the same format.
std::string serialize_group(const PreparedGroup& g);

}  // namespace grp
