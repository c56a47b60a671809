#pragma once

#include <cstddef>
#include <vector>

#include "grpcx/perm_group.hpp"

namespace grpcx
{

/// All normal subgroups of a group, sorted by (order, canonical key).
/// members.front() is the trivial subgroup, members.back() the whole group.
struct NormalLattice
{
  GroupPtr ambient;
  std::vector<Subgroup> members;

  // Position of a normal subgroup in `members`; throws if absent.
  std::size_t index_of(Subgroup const &h) const;
  // Members strictly above members[i] with nothing in between.
  std::vector<std::size_t> covers(std::size_t i) const;
  // Members strictly below members[i] with nothing in between.
  std::vector<std::size_t> covered_by(std::size_t i) const;
};

// Join-closure of the normal closures of the conjugacy classes. Cached per
// group; throws CapExceeded past Limits::max_lattice members.
NormalLattice normal_subgroups(GroupPtr const &g);

// Product of two normal subgroups (a subgroup since both are normal).
Subgroup normal_join(Subgroup const &a, Subgroup const &b);

std::vector<Subgroup> minimal_normal_subgroups(GroupPtr const &g);
std::vector<Subgroup> maximal_normal_subgroups(GroupPtr const &g);

// Join of the minimal normal subgroups. The socle of the trivial group is the
// trivial subgroup; `socle_info` reports that convention explicitly.
Subgroup socle(GroupPtr const &g);

struct SocleInfo
{
  Subgroup subgroup;
  bool trivial_group = false;
};
SocleInfo socle_info(GroupPtr const &g);

// Preimage of soc(G/N) for N normal in G: the join of the minimal members of
// the lattice strictly above N.
Subgroup socle_above(Subgroup const &n);

// Largest nilpotent normal subgroup.
Subgroup fitting_subgroup(GroupPtr const &g);

// For G a span of gems and A normal in G, a normal B with G = A x B. Found by
// adjoining minimal normal subgroups not inside the current A*B.
Subgroup split_complement(GroupPtr const &g, Subgroup const &a);

} // namespace grpcx
