#include "grpcx/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "grpcx/error.hpp"

namespace grpcx
{

Permutation::Permutation(std::size_t degree) : images_(degree)
{
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images))
{
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw InputError("image sequence is not a permutation");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(
  std::size_t degree, std::vector<std::vector<Point>> const &cycles)
{
  Permutation res(degree);
  std::vector<bool> used(degree, false);
  for (auto const &cycle : cycles) {
    for (Point p : cycle) {
      if (p < 1 || p > degree)
        throw InputError("point " + std::to_string(p) + " outside 1.." +
                         std::to_string(degree));
      if (used[p - 1])
        throw InputError("repeated point " + std::to_string(p));
      used[p - 1] = true;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      res.images_[cycle[i] - 1] = cycle[(i + 1) % cycle.size()] - 1;
  }
  return res;
}

bool Permutation::is_identity() const
{
  for (Point i = 0; i < images_.size(); ++i)
    if (images_[i] != i)
      return false;
  return true;
}

bool Permutation::is_even() const
{
  std::size_t transpositions = 0;
  for (auto const &c : cycles())
    transpositions += c.size() - 1;
  return transpositions % 2 == 0;
}

Permutation Permutation::inverse() const
{
  Permutation res(images_.size());
  for (Point i = 0; i < images_.size(); ++i)
    res.images_[images_[i]] = i;
  return res;
}

std::uint64_t Permutation::order() const
{
  std::uint64_t res = 1;
  for (auto const &c : cycles())
    res = lcm_u64(res, c.size());
  return res;
}

std::vector<std::vector<Point>> Permutation::cycles() const
{
  std::vector<std::vector<Point>> res;
  std::vector<bool> seen(images_.size(), false);
  for (Point start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start)
      continue;
    std::vector<Point> cycle;
    for (Point i = start; !seen[i]; i = images_[i]) {
      seen[i] = true;
      cycle.push_back(i);
    }
    res.push_back(std::move(cycle));
  }
  return res;
}

Permutation Permutation::restricted(Point first, std::size_t count) const
{
  std::vector<Point> imgs(count);
  for (std::size_t i = 0; i < count; ++i) {
    Point img = images_[first + i];
    if (img < first || img >= first + count)
      throw PreconditionError("range is not invariant under permutation");
    imgs[i] = img - first;
  }
  return Permutation(std::move(imgs));
}

Permutation operator*(Permutation const &p, Permutation const &q)
{
  if (p.degree() != q.degree())
    throw PreconditionError("degree mismatch in composition");
  Permutation res;
  res.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i)
    res.images_[i] = q.images_[p.images_[i]];
  return res;
}

std::size_t Permutation::hash() const
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (Point p : images_) {
    h ^= p;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

Permutation conjugate(Permutation const &p, Permutation const &g)
{
  return g.inverse() * p * g;
}

Permutation commutator(Permutation const &p, Permutation const &q)
{
  return p.inverse() * q.inverse() * p * q;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b)
{
  return std::gcd(a, b);
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b)
{
  return a / std::gcd(a, b) * b;
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
  std::vector<std::uint64_t> res;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      res.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    res.push_back(n);
  return res;
}

} // namespace grpcx
