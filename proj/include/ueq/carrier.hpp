#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "ueq/error.hpp"

namespace ueq {

/// Product carriers are rejected beyond this size; keeps every brute-force
/// sweep in the test harness feasible.
inline constexpr int kProductSizeCap = 4096;

/// A finite ground set; elements are 0..size-1.
struct Carrier {
  int size;

  explicit Carrier(int n) : size(n) {
    require(n >= 1, ErrorKind::Validation, "carrier size must be >= 1");
  }

  friend bool operator==(const Carrier& a, const Carrier& b) { return a.size == b.size; }
  friend bool operator!=(const Carrier& a, const Carrier& b) { return a.size != b.size; }
};

/// Subset of a carrier, stored as a bitmask.
class ElemSet {
 public:
  ElemSet() = default;
  explicit ElemSet(int universe) : universe_(universe), w_(words(universe), 0) {}

  static ElemSet full_set(int universe) {
    ElemSet s(universe);
    for (auto& w : s.w_) w = ~std::uint64_t{0};
    s.mask_tail();
    return s;
  }

  static ElemSet from_elements(int universe, const std::vector<int>& xs) {
    ElemSet s(universe);
    for (int x : xs) {
      require(0 <= x && x < universe, ErrorKind::Index, "element out of range");
      s.set(x);
    }
    return s;
  }

  static ElemSet of(int universe, std::initializer_list<int> xs) {
    return from_elements(universe, std::vector<int>(xs));
  }

  int universe() const { return universe_; }

  bool test(int x) const {
    assert(0 <= x && x < universe_);
    return (w_[static_cast<std::size_t>(x) >> 6] >> (x & 63)) & 1u;
  }
  void set(int x) {
    assert(0 <= x && x < universe_);
    w_[static_cast<std::size_t>(x) >> 6] |= std::uint64_t{1} << (x & 63);
  }
  void reset(int x) {
    assert(0 <= x && x < universe_);
    w_[static_cast<std::size_t>(x) >> 6] &= ~(std::uint64_t{1} << (x & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool is_full() const { return count() == universe_; }

  /// Smallest element, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + static_cast<std::size_t>(std::countr_zero(w_[i])));
    return -1;
  }

  bool is_subset_of(const ElemSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  bool intersects(const ElemSet& o) const {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  ElemSet& operator|=(const ElemSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  ElemSet& operator&=(const ElemSet& o) {
    assert(universe_ == o.universe_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  friend ElemSet operator|(ElemSet a, const ElemSet& b) { return a |= b; }
  friend ElemSet operator&(ElemSet a, const ElemSet& b) { return a &= b; }

  ElemSet complement() const {
    ElemSet s(universe_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.mask_tail();
    return s;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for_each([&](int x) { out.push_back(x); });
    return out;
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        int b = std::countr_zero(w);
        f(static_cast<int>(i * 64) + b);
        w &= w - 1;
      }
    }
  }

  friend bool operator==(const ElemSet& a, const ElemSet& b) {
    return a.universe_ == b.universe_ && a.w_ == b.w_;
  }
  friend bool operator!=(const ElemSet& a, const ElemSet& b) { return !(a == b); }
  friend bool operator<(const ElemSet& a, const ElemSet& b) {
    if (a.universe_ != b.universe_) return a.universe_ < b.universe_;
    return a.w_ < b.w_;
  }

 private:
  static std::size_t words(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
  void mask_tail() {
    if (universe_ % 64 != 0 && !w_.empty())
      w_.back() &= (std::uint64_t{1} << (universe_ % 64)) - 1;
  }

  int universe_ = 0;
  std::vector<std::uint64_t> w_;
};

/// Mixed-radix encoding of tuples over factor carriers; the first factor is
/// the most significant digit.
struct ProductShape {
  std::vector<int> sizes;
  std::vector<int> strides;
  int total = 1;

  static ProductShape of(const std::vector<int>& sizes, int size_cap = kProductSizeCap) {
    require(!sizes.empty(), ErrorKind::EmptyFamily, "product needs at least one factor");
    ProductShape s;
    s.sizes = sizes;
    long long t = 1;
    for (int n : sizes) {
      require(n >= 1, ErrorKind::Validation, "factor carrier size must be >= 1");
      t *= n;
      require(t <= size_cap, ErrorKind::TooManyFactors,
              "product carrier exceeds size cap " + std::to_string(size_cap));
    }
    s.total = static_cast<int>(t);
    s.strides.assign(sizes.size(), 1);
    for (int i = static_cast<int>(sizes.size()) - 2; i >= 0; --i)
      s.strides[static_cast<std::size_t>(i)] =
          s.strides[static_cast<std::size_t>(i) + 1] * sizes[static_cast<std::size_t>(i) + 1];
    return s;
  }

  int factors() const { return static_cast<int>(sizes.size()); }

  int coord(int code, int i) const {
    assert(0 <= code && code < total);
    return (code / strides[static_cast<std::size_t>(i)]) % sizes[static_cast<std::size_t>(i)];
  }

  int encode(const std::vector<int>& tuple) const {
    assert(tuple.size() == sizes.size());
    int code = 0;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      assert(0 <= tuple[i] && tuple[i] < sizes[i]);
      code += tuple[i] * strides[i];
    }
    return code;
  }

  std::vector<int> decode(int code) const {
    std::vector<int> t(sizes.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) t[i] = coord(code, static_cast<int>(i));
    return t;
  }
};

}  // namespace ueq
