#include "grp/perm.hpp"

#include <cctype>

#include "grp/error.hpp"

namespace grp {

Perm::Perm(std::vector<uint16_t> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (uint16_t v : img_) {
    if (v >= img_.size() || seen[v]) throw InvalidPerm("image list is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::identity(int degree) {
  Perm p;
  p.img_.resize(degree);
  for (int i = 0; i < degree; ++i) p.img_[i] = uint16_t(i);
  return p;
}

Perm Perm::operator*(const Perm& o) const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = o.img_[img_[i]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i]] = uint16_t(i);
  return r;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != i) return false;
  return true;
}

size_t PermHash::operator()(const Perm& p) const {
  uint64_t h = 0xcbf29ce484222325ull;
  for (uint16_t v : p.images()) {
    h ^= v;
    h *= 0x100000001b3ull;
  }
  return size_t(h);
}

Perm parse_cycles(const std::string& text, int degree) {
  std::vector<uint16_t> img(degree);
  for (int i = 0; i < degree; ++i) img[i] = uint16_t(i);
  std::vector<char> used(degree, 0);

  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  while (pos < text.size()) {
    if (text[pos] != '(') throw ParseError("expected '(' in cycle notation", 0);
    ++pos;
    std::vector<int> cycle;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected point or ')' in cycle", 0);
      int v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        v = v * 10 + (text[pos] - '0');
        if (v > 0xffff) throw ParseError("point out of range", 0);
        ++pos;
      }
      if (v >= degree) throw DegreeMismatch("point " + std::to_string(v) + " exceeds degree " + std::to_string(degree), 0);
      if (used[v]) throw ParseError("point " + std::to_string(v) + " repeated", 0);
      used[v] = 1;
      cycle.push_back(v);
      skip_ws();
    }
    if (pos >= text.size()) throw ParseError("unclosed cycle", 0);
    ++pos;  // ')'
    for (size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = uint16_t(cycle[(i + 1) % cycle.size()]);
    skip_ws();
  }
  return Perm(std::move(img));
}

std::string format_cycles(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      seen[j] = 1;
      j = p[j];
      first = false;
    } while (j != i);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

}  // namespace grp
