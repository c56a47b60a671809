#include "grpcx/kernels.hpp"

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "grpcx/perm_group.hpp"

namespace grpcx::kernels
{

int max_threads()
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

namespace serial
{

std::vector<ElementIndex> product_table(std::span<Permutation const> elements,
                                        Lookup const &lookup)
{
  std::size_t n = elements.size();
  std::vector<ElementIndex> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[a * n + b] = lookup.at(elements[a] * elements[b]);
  return table;
}

std::vector<std::vector<ElementIndex>>
conjugation_images(PermGroup const &g, std::span<ElementIndex const> by)
{
  std::size_t n = g.order();
  std::vector<std::vector<ElementIndex>> images(by.size(),
                                                std::vector<ElementIndex>(n));
  for (std::size_t k = 0; k < by.size(); ++k)
    for (std::size_t x = 0; x < n; ++x)
      images[k][x] = g.conj(static_cast<ElementIndex>(x), by[k]);
  return images;
}

std::vector<std::uint64_t> element_orders(std::span<Permutation const> elements)
{
  std::vector<std::uint64_t> res(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    res[i] = elements[i].order();
  return res;
}

ElementSet commutator_set(PermGroup const &g, ElementSet const &a,
                          ElementSet const &b)
{
  ElementSet res = g.empty_set();
  auto bs = b.indices();
  a.for_each([&](ElementIndex x) {
    for (ElementIndex y : bs)
      res.insert(g.comm(x, y));
  });
  return res;
}

} // namespace serial

namespace omp
{

std::vector<ElementIndex> product_table(std::span<Permutation const> elements,
                                        Lookup const &lookup)
{
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(elements.size());
  std::vector<ElementIndex> table(elements.size() * elements.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t a = 0; a < n; ++a)
    for (std::ptrdiff_t b = 0; b < n; ++b)
      table[a * n + b] = lookup.at(elements[a] * elements[b]);
  return table;
}

std::vector<std::vector<ElementIndex>>
conjugation_images(PermGroup const &g, std::span<ElementIndex const> by)
{
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(g.order());
  std::vector<std::vector<ElementIndex>> images(
    by.size(), std::vector<ElementIndex>(g.order()));
  g.mul(0, 0); // fill the table outside the parallel region
  for (std::size_t k = 0; k < by.size(); ++k) {
    auto &row = images[k];
    ElementIndex h = by[k];
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t x = 0; x < n; ++x)
      row[x] = g.conj(static_cast<ElementIndex>(x), h);
  }
  return images;
}

std::vector<std::uint64_t> element_orders(std::span<Permutation const> elements)
{
  std::ptrdiff_t n = static_cast<std::ptrdiff_t>(elements.size());
  std::vector<std::uint64_t> res(elements.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i)
    res[i] = elements[i].order();
  return res;
}

ElementSet commutator_set(PermGroup const &g, ElementSet const &a,
                          ElementSet const &b)
{
  auto as = a.indices();
  auto bs = b.indices();
  std::ptrdiff_t na = static_cast<std::ptrdiff_t>(as.size());
  ElementSet res = g.empty_set();
  g.mul(0, 0);
#pragma omp parallel
  {
    ElementSet local = g.empty_set();
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < na; ++i)
      for (ElementIndex y : bs)
        local.insert(g.comm(as[i], y));
#pragma omp critical(grpcx_commutator_merge)
    res = res | local;
  }
  return res;
}

} // namespace omp

} // namespace grpcx::kernels
