#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace superdom {

// Subset of {0,...,universe-1} backed by 64-bit words. A universe of at most
// 64 vertices fits in a single word, which covers every instance the exact
// solver accepts; larger universes spill into further words.
class VertexSet {
 public:
  VertexSet() = default;

  explicit VertexSet(int universe) {
    if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
    n_ = universe;
    words_.assign(static_cast<size_t>((universe + 63) / 64), 0);
  }

  VertexSet(int universe, std::initializer_list<int> members) : VertexSet(universe) {
    for (int v : members) set(v);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (auto& w : s.words_) w = ~uint64_t{0};
    s.trim();
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    check_member(v);
    return (words_[static_cast<size_t>(v >> 6)] >> (v & 63)) & 1;
  }

  void set(int v) {
    check_member(v);
    words_[static_cast<size_t>(v >> 6)] |= uint64_t{1} << (v & 63);
  }

  void reset(int v) {
    check_member(v);
    words_[static_cast<size_t>(v >> 6)] &= ~(uint64_t{1} << (v & 63));
  }

  void clear() {
    for (auto& w : words_) w = 0;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  bool any() const { return !empty(); }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  VertexSet& operator^=(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
    return *this;
  }

  // set difference
  VertexSet& operator-=(const VertexSet& o) {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.n_ == b.n_ && a.words_ == b.words_;
  }

  bool is_subset_of(const VertexSet& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // Smallest member, or -1 when empty.
  int first() const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  // Smallest member strictly greater than v, or -1.
  int next(int v) const {
    check_member(v);
    size_t i = static_cast<size_t>(v >> 6);
    uint64_t w = words_[i] & ~((uint64_t{2} << (v & 63)) - 1);
    if (w) return static_cast<int>(i * 64) + std::countr_zero(w);
    for (++i; i < words_.size(); ++i)
      if (words_[i]) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
    return -1;
  }

  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<size_t>(count()));
    for (int v = first(); v != -1; v = next(v)) out.push_back(v);
    return out;
  }

  // Lexicographic order on the ascending member lists.
  bool lex_less(const VertexSet& o) const {
    check_same(o);
    int a = first(), b = o.first();
    while (a != -1 && b != -1) {
      if (a != b) return a < b;
      a = next(a);
      b = o.next(b);
    }
    return a == -1 && b != -1;
  }

  std::string to_string() const {
    std::string s = "{";
    for (int v = first(); v != -1; v = next(v)) {
      if (s.size() > 1) s += ',';
      s += std::to_string(v);
    }
    return s + "}";
  }

 private:
  void check_member(int v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("VertexSet: vertex out of range");
  }

  void check_same(const VertexSet& o) const {
    if (n_ != o.n_) throw std::invalid_argument("VertexSet: universe mismatch");
  }

  void trim() {
    if (n_ % 64 != 0 && !words_.empty())
      words_.back() &= (uint64_t{1} << (n_ % 64)) - 1;
  }

  int n_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace superdom
