#pragma once

#include <string>
#include <vector>

#include "grpcx/builders.hpp"
#include "grpcx/group_spec.hpp"

inline grpcx::GroupPtr make_group(std::size_t degree,
                                  std::vector<std::string> const &gens)
{
  std::vector<grpcx::Permutation> perms;
  for (auto const &s : gens)
    perms.push_back(grpcx::parse_cycles(s, degree));
  return grpcx::group_from_generators(degree, perms);
}

inline grpcx::Permutation cyc(std::string const &s, std::size_t degree)
{
  return grpcx::parse_cycles(s, degree);
}

inline grpcx::Subgroup subgroup_of(grpcx::GroupPtr const &g,
                                   std::vector<std::string> const &gens)
{
  std::vector<grpcx::Permutation> perms;
  for (auto const &s : gens)
    perms.push_back(grpcx::parse_cycles(s, g->degree()));
  return grpcx::generated_subgroup(g, perms);
}
