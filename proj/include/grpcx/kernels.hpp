#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "grpcx/element_set.hpp"
#include "grpcx/permutation.hpp"

namespace grpcx
{
class PermGroup;
}

/// Data-parallel inner loops of the group machinery.
///
/// Each kernel exists twice: `serial` is the reference implementation kept
/// for testing, `omp` is the OpenMP version the library dispatches to. Both
/// must produce identical output.
namespace grpcx::kernels
{

using Lookup = std::unordered_map<Permutation, ElementIndex>;

namespace serial
{
// table[a * n + b] = index of elements[a] * elements[b].
std::vector<ElementIndex> product_table(std::span<Permutation const> elements,
                                        Lookup const &lookup);
// images[k][x] = index of by[k]^-1 * x * by[k].
std::vector<std::vector<ElementIndex>>
conjugation_images(PermGroup const &g, std::span<ElementIndex const> by);
std::vector<std::uint64_t> element_orders(std::span<Permutation const> elements);
// Set of all commutators [a, b] with a in `a`, b in `b`.
ElementSet commutator_set(PermGroup const &g, ElementSet const &a,
                          ElementSet const &b);
} // namespace serial

namespace omp
{
std::vector<ElementIndex> product_table(std::span<Permutation const> elements,
                                        Lookup const &lookup);
std::vector<std::vector<ElementIndex>>
conjugation_images(PermGroup const &g, std::span<ElementIndex const> by);
std::vector<std::uint64_t> element_orders(std::span<Permutation const> elements);
ElementSet commutator_set(PermGroup const &g, ElementSet const &a,
                          ElementSet const &b);
} // namespace omp

// Number of threads the omp kernels will use (1 without OpenMP).
int max_threads();

} // namespace grpcx::kernels
