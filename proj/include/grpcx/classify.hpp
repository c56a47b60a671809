#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "grpcx/lattice.hpp"

namespace grpcx
{

bool is_abelian(GroupPtr const &g);
bool is_nilpotent(GroupPtr const &g);
bool is_solvable(GroupPtr const &g);
// Throws PreconditionError for the trivial group.
bool is_simple(GroupPtr const &g);
// Nontrivial and equal to its own socle. False for the trivial group.
bool is_span_of_gems(GroupPtr const &g);

enum class NecklaceClass
{
  abelian,
  nilpotent,
  solvable
};

std::string to_string(NecklaceClass c);

// G = L x C with L the join of the nonabelian minimal normal subgroups,
// C its centralizer, and C in the given class.
bool is_necklace(GroupPtr const &g, NecklaceClass c);

/// Isomorphism proxy for simple groups: order plus abelian flag. A simple
/// group is abelian exactly when its order is prime.
struct SimpleDescriptor
{
  std::uint64_t order = 0;
  bool abelian = false;

  // "<order>a" or "<order>n", e.g. "2a", "60n".
  static SimpleDescriptor parse(std::string_view text);
  std::string str() const;

  friend auto operator<=>(SimpleDescriptor const &,
                          SimpleDescriptor const &) = default;
};

// Throws PreconditionError unless g is simple.
SimpleDescriptor simple_type(GroupPtr const &g);

struct FactorMultiset
{
  std::map<SimpleDescriptor, std::uint64_t> entries;

  void add(SimpleDescriptor d, std::uint64_t count = 1);
  std::uint64_t total() const;
  // Product of order^multiplicity; the order of the described group.
  std::uint64_t group_order() const;
  // e.g. "2a^3 3a"; "1" when empty.
  std::string str() const;

  friend bool operator==(FactorMultiset const &,
                         FactorMultiset const &) = default;
};

// Composition factors along the series that always steps to the smallest
// maximal normal subgroup.
FactorMultiset jh_factors(GroupPtr const &g);
// Simple direct factors; throws PreconditionError unless a span of gems.
FactorMultiset gem_factor_multiset(GroupPtr const &g);
// Elements of p-power order; throws PreconditionError unless nilpotent.
Subgroup sylow_of_nilpotent(GroupPtr const &g, std::uint64_t p);

// Properties of G/N decided inside G, for N normal in G = n.ambient().
bool quotient_is_abelian(Subgroup const &n);
bool quotient_is_span_of_gems(Subgroup const &n);
bool quotient_is_necklace(Subgroup const &n, NecklaceClass c);
FactorMultiset quotient_gem_factors(Subgroup const &n);
// True when X/N lies in the class, for N <= X both normal in the ambient.
bool section_in_class(Subgroup const &x, Subgroup const &n, NecklaceClass c);

} // namespace grpcx
