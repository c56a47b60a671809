#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace grpcx
{

using Point = std::uint32_t;

/// A bijection on the points 0..degree-1 (printed 1-based).
///
/// Points act on the right: the product `p * q` applies p first, then q, so
/// (p * q)(i) = q(p(i)).
class Permutation
{
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Builds a permutation from 1-based cycles; points outside all cycles are
  // fixed. Throws InputError on repeated or out-of-range points.
  static Permutation from_cycles(std::size_t degree,
                                 std::vector<std::vector<Point>> const &cycles);

  std::size_t degree() const { return images_.size(); }
  Point operator[](Point i) const { return images_[i]; }
  std::span<Point const> images() const { return images_; }

  bool is_identity() const;
  bool is_even() const;
  Permutation inverse() const;
  std::uint64_t order() const;

  // Disjoint cycles of length >= 2, 0-based, each starting at its smallest
  // point, sorted by that point.
  std::vector<std::vector<Point>> cycles() const;

  // Restriction to [first, first + count), which must be an invariant range.
  Permutation restricted(Point first, std::size_t count) const;

  friend Permutation operator*(Permutation const &p, Permutation const &q);
  friend bool operator==(Permutation const &, Permutation const &) = default;
  friend std::strong_ordering operator<=>(Permutation const &a,
                                          Permutation const &b)
  {
    return a.images_ <=> b.images_;
  }

  std::size_t hash() const;

private:
  std::vector<Point> images_;
};

inline Permutation compose(Permutation const &p, Permutation const &q)
{
  return p * q;
}

// Conjugate p^g = g^-1 p g.
Permutation conjugate(Permutation const &p, Permutation const &g);
// Commutator [p, q] = p^-1 q^-1 p q.
Permutation commutator(Permutation const &p, Permutation const &q);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);
bool is_prime(std::uint64_t n);
// Prime divisors in ascending order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace grpcx

template <>
struct std::hash<grpcx::Permutation>
{
  std::size_t operator()(grpcx::Permutation const &p) const { return p.hash(); }
};
