#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace oridom {

/// Fixed-capacity bitset over vertex indices. `Words` 64-bit words give a
/// capacity of 64 * Words vertices; BasicSet<1> is the fast path for the
/// small graphs the exact solvers spend their time on.
template <std::size_t Words>
class BasicSet {
 public:
  static constexpr std::size_t kWords = Words;
  static constexpr std::size_t kCapacity = 64 * Words;

  constexpr BasicSet() = default;
  BasicSet(std::initializer_list<int> vs) {
    for (int v : vs) set(v);
  }

  static BasicSet range(int n) {
    BasicSet s;
    for (std::size_t w = 0; w < Words && n > 0; ++w, n -= 64)
      s.bits_[w] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return s;
  }

  bool test(int v) const { return (bits_[v >> 6] >> (v & 63)) & 1u; }
  void set(int v) { bits_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(int v) { bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  void assign(int v, bool on) { on ? set(v) : reset(v); }

  int count() const {
    int c = 0;
    for (auto w : bits_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : bits_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  /// Lowest member, or -1.
  int first() const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w]) return static_cast<int>(64 * w) + std::countr_zero(bits_[w]);
    return -1;
  }
  /// Lowest member strictly greater than v, or -1.
  int next(int v) const {
    ++v;
    std::size_t w = static_cast<std::size_t>(v) >> 6;
    if (w >= Words) return -1;
    std::uint64_t cur = bits_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return static_cast<int>(64 * w) + std::countr_zero(cur);
      if (++w == Words) return -1;
      cur = bits_[w];
    }
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < Words; ++w) {
      std::uint64_t cur = bits_[w];
      while (cur) {
        f(static_cast<int>(64 * w) + std::countr_zero(cur));
        cur &= cur - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool subset_of(const BasicSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w] & ~o.bits_[w]) return false;
    return true;
  }
  bool intersects(const BasicSet& o) const {
    for (std::size_t w = 0; w < Words; ++w)
      if (bits_[w] & o.bits_[w]) return true;
    return false;
  }

  BasicSet& operator&=(const BasicSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] &= o.bits_[w];
    return *this;
  }
  BasicSet& operator|=(const BasicSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] |= o.bits_[w];
    return *this;
  }
  /// Set difference.
  BasicSet& operator-=(const BasicSet& o) {
    for (std::size_t w = 0; w < Words; ++w) bits_[w] &= ~o.bits_[w];
    return *this;
  }
  friend BasicSet operator&(BasicSet a, const BasicSet& b) { return a &= b; }
  friend BasicSet operator|(BasicSet a, const BasicSet& b) { return a |= b; }
  friend BasicSet operator-(BasicSet a, const BasicSet& b) { return a -= b; }

  friend bool operator==(const BasicSet&, const BasicSet&) = default;
  friend auto operator<=>(const BasicSet&, const BasicSet&) = default;

  std::uint64_t word(std::size_t w) const { return bits_[w]; }

 private:
  std::array<std::uint64_t, Words> bits_{};
};

inline constexpr int kMaxVertices = 512;

using VertexSet = BasicSet<kMaxVertices / 64>;
using SmallSet = BasicSet<1>;

/// Narrowing copy; members at index >= To::kCapacity are dropped.
template <class To, class From>
To convert_set(const From& s) {
  To out;
  s.for_each([&](int v) {
    if (static_cast<std::size_t>(v) < To::kCapacity) out.set(v);
  });
  return out;
}

template <class Set>
Set make_set(const std::vector<int>& vs) {
  Set s;
  for (int v : vs) s.set(v);
  return s;
}

}  // namespace oridom
