#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace grp {

// Permutation of {0..degree-1}.  p * q applies p first, then q.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<uint16_t> images);  // throws InvalidPerm unless bijective
  static Perm identity(int degree);

  int degree() const { return int(img_.size()); }
  int operator[](int i) const { return img_[i]; }
  const std::vector<uint16_t>& images() const { return img_; }

  Perm operator*(const Perm& o) const;
  Perm inverse() const;
  bool is_identity() const;
  bool operator==(const Perm& o) const = default;

 private:
  std::vector<uint16_t> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const;
};

// Cycle notation: 0-based points, whitespace-separated inside parentheses,
// e.g. "(0 1 2)(3 4)".  "()" and the empty string denote the identity.
Perm parse_cycles(const std::string& text, int degree);
std::string format_cycles(const Perm& p);

}  // namespace grp
