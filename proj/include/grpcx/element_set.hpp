#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace grpcx
{

using ElementIndex = std::uint32_t;

/// Fixed-size bitset over the element indices of an ambient group.
class ElementSet
{
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0)
  {}

  std::size_t universe() const { return universe_; }

  bool contains(ElementIndex i) const
  {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void insert(ElementIndex i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(ElementIndex i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const
  {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  bool subset_of(ElementSet const &other) const
  {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i])
        return false;
    return true;
  }

  ElementSet operator&(ElementSet const &other) const
  {
    ElementSet res(*this);
    for (std::size_t i = 0; i < words_.size(); ++i)
      res.words_[i] &= other.words_[i];
    return res;
  }

  ElementSet operator|(ElementSet const &other) const
  {
    ElementSet res(*this);
    for (std::size_t i = 0; i < words_.size(); ++i)
      res.words_[i] |= other.words_[i];
    return res;
  }

  std::vector<ElementIndex> indices() const
  {
    std::vector<ElementIndex> res;
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        res.push_back(static_cast<ElementIndex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return res;
  }

  template <typename F>
  void for_each(F &&f) const
  {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      auto bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(static_cast<ElementIndex>(w * 64 + b));
        bits &= bits - 1;
      }
    }
  }

  std::size_t hash() const
  {
    std::uint64_t h = 0x9e3779b97f4a7c15ull ^ universe_;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  friend bool operator==(ElementSet const &, ElementSet const &) = default;

private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ElementSetHash
{
  std::size_t operator()(ElementSet const &s) const { return s.hash(); }
};

} // namespace grpcx
