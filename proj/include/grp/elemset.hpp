#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grp {

// Membership set over the element indices 0..n-1 of one group table.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  int universe() const { return n_; }

  bool test(int i) const { return (w_[size_t(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[size_t(i) >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[size_t(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += std::popcount(w);
    return c;
  }

  bool operator==(const ElemSet& o) const = default;

  bool subset_of(const ElemSet& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  ElemSet operator&(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }

  ElemSet operator|(const ElemSet& o) const {
    ElemSet r(n_);
    for (size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }

  void operator&=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  }

  void operator|=(const ElemSet& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  }

  // Orders sets of equal size by their sorted member sequence: the set owning
  // the lowest differing index comes first.
  static bool lex_less(const ElemSet& a, const ElemSet& b) {
    for (size_t i = 0; i < a.w_.size(); ++i) {
      uint64_t d = a.w_[i] ^ b.w_[i];
      if (d) {
        uint64_t low = d & (~d + 1);
        return a.w_[i] & low;
      }
    }
    return false;
  }

  uint64_t hash() const {
    uint64_t h = 0xcbf29ce484222325ull ^ uint64_t(n_);
    for (uint64_t w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return h;
  }

  template <class F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(int(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> v;
    v.reserve(count());
    for_each([&](int i) { v.push_back(i); });
    return v;
  }

  int first() const {
    for (size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return int(i * 64) + std::countr_zero(w_[i]);
    return -1;
  }

 private:
  int n_ = 0;
  std::vector<uint64_t> w_;
};

struct ElemSetHash {
  size_t operator()(const ElemSet& s) const { return size_t(s.hash()); }
};

}  // namespace grp
