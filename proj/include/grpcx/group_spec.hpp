#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grpcx/builders.hpp"

namespace grpcx
{

struct NamedGroup
{
  std::string name;
  GroupPtr group;
};

// Quaternion group of order 8 in its regular action on 8 points.
GroupPtr quaternion(Limits const &limits = default_limits());
// Order-32 group with socle length 3 and cx 2.
GroupPtr h32(Limits const &limits = default_limits());
// Z2 wr Z4 on 8 points given by five generators.
GroupPtr g64(Limits const &limits = default_limits());
// The Klein subgroup <(3,4)(7,8), (1,2)(5,6)> of g64().
Subgroup g64_klein(GroupPtr const &g64);

// Builtin names: trivial, Z<n>, Z<p>^<k>, D<n>, S<n>, A<n>, V4, Q8,
// SL2_<p>, H32, G64, combined with infix "x" (direct product, loosest) and
// "wr" (wreath product, left associative), with parentheses for grouping.
// Examples: "A5xZ2", "Z2wrZ4", "Z2wrZ2wrZ2", "(Z2xZ2)wrZ2".
GroupPtr builtin_group(std::string_view name,
                       Limits const &limits = default_limits());

// Group definition documents:
//   {"name": "...", "degree": n, "generators": ["(1,2)", ...]}
//   {"name": "...", "builtin": "S4"}
//   {"name": "...", "construct": {"op": "...", "args": [...]}}
// where op is one of cyclic, dihedral, symmetric, alternating, sl2 (integer
// argument), direct_product, wreath (two group arguments), quotient (a group
// and an array of kernel generator strings) or embed_alternating (a group).
// Group arguments are nested documents or builtin name strings.
NamedGroup group_from_json(nlohmann::json const &doc,
                           Limits const &limits = default_limits());
NamedGroup load_group_file(std::string const &path,
                           Limits const &limits = default_limits());

} // namespace grpcx
