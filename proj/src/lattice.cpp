#include "grpcx/lattice.hpp"

#include <algorithm>
#include <unordered_set>

#include "grpcx/error.hpp"

namespace grpcx
{

std::size_t NormalLattice::index_of(Subgroup const &h) const
{
  auto it = std::lower_bound(members.begin(), members.end(), h);
  if (it == members.end() || !(*it == h))
    throw PreconditionError("subgroup is not normal in the ambient group");
  return static_cast<std::size_t>(it - members.begin());
}

std::vector<std::size_t> NormalLattice::covers(std::size_t i) const
{
  std::vector<std::size_t> above;
  for (std::size_t j = i + 1; j < members.size(); ++j)
    if (members[j].order() > members[i].order() &&
        members[i].subset_of(members[j]))
      above.push_back(j);
  std::vector<std::size_t> res;
  for (std::size_t j : above) {
    bool minimal = true;
    for (std::size_t k : above) {
      if (k != j && members[k].order() < members[j].order() &&
          members[k].subset_of(members[j])) {
        minimal = false;
        break;
      }
    }
    if (minimal)
      res.push_back(j);
  }
  return res;
}

std::vector<std::size_t> NormalLattice::covered_by(std::size_t i) const
{
  std::vector<std::size_t> below;
  for (std::size_t j = 0; j < i; ++j)
    if (members[j].order() < members[i].order() &&
        members[j].subset_of(members[i]))
      below.push_back(j);
  std::vector<std::size_t> res;
  for (std::size_t j : below) {
    bool maximal = true;
    for (std::size_t k : below) {
      if (k != j && members[k].order() > members[j].order() &&
          members[j].subset_of(members[k])) {
        maximal = false;
        break;
      }
    }
    if (maximal)
      res.push_back(j);
  }
  return res;
}

Subgroup normal_join(Subgroup const &a, Subgroup const &b)
{
  if (b.subset_of(a))
    return a;
  if (a.subset_of(b))
    return b;
  auto const &g = *a.ambient();
  // AB is the union of the cosets Ab; a b already covered lies in a coset
  // that was added.
  ElementSet res = a.members();
  auto as = a.members().indices();
  b.members().for_each([&](ElementIndex y) {
    if (res.contains(y))
      return;
    for (ElementIndex x : as)
      res.insert(g.mul(x, y));
  });
  return Subgroup(a.ambient(), std::move(res));
}

namespace
{

std::shared_ptr<NormalLattice const> build_lattice(GroupPtr const &g)
{
  // Members hold a non-owning handle so the cache does not keep its own
  // group alive; normal_subgroups() rebinds them.
  GroupPtr weak(GroupPtr(), g.get());

  std::vector<Subgroup> generators;
  std::unordered_set<ElementSet, ElementSetHash> seen_gens;
  for (auto const &cls : g->conjugacy_classes()) {
    if (cls.front() == PermGroup::identity_index())
      continue;
    auto h = generated_subgroup(weak, cls);
    if (seen_gens.insert(h.members()).second)
      generators.push_back(std::move(h));
  }
  std::sort(generators.begin(), generators.end());

  std::vector<Subgroup> members{trivial_subgroup(weak)};
  std::unordered_set<ElementSet, ElementSetHash> seen{members.front().members()};
  std::size_t cap = g->limits().max_lattice;
  for (std::size_t k = 0; k < members.size(); ++k) {
    for (auto const &c : generators) {
      auto j = normal_join(members[k], c);
      if (seen.insert(j.members()).second) {
        members.push_back(std::move(j));
        if (members.size() > cap)
          throw CapExceeded("lattice too large (more than " +
                            std::to_string(cap) + " normal subgroups)");
      }
    }
  }
  std::sort(members.begin(), members.end());
  auto res = std::make_shared<NormalLattice>();
  res->ambient = weak;
  res->members = std::move(members);
  return res;
}

} // namespace

NormalLattice normal_subgroups(GroupPtr const &g)
{
  auto const &cached = g->lattice_cache([&] { return build_lattice(g); });
  NormalLattice res;
  res.ambient = g;
  res.members.reserve(cached.members.size());
  for (auto const &m : cached.members)
    res.members.push_back(m.with_ambient(g));
  return res;
}

std::vector<Subgroup> minimal_normal_subgroups(GroupPtr const &g)
{
  if (g->is_trivial())
    return {};
  auto lat = normal_subgroups(g);
  std::vector<Subgroup> res;
  for (std::size_t i : lat.covers(0))
    res.push_back(lat.members[i]);
  return res;
}

std::vector<Subgroup> maximal_normal_subgroups(GroupPtr const &g)
{
  if (g->is_trivial())
    return {};
  auto lat = normal_subgroups(g);
  std::vector<Subgroup> res;
  for (std::size_t i : lat.covered_by(lat.members.size() - 1))
    res.push_back(lat.members[i]);
  return res;
}

SocleInfo socle_info(GroupPtr const &g)
{
  if (g->is_trivial())
    return {trivial_subgroup(g), true};
  Subgroup res = trivial_subgroup(g);
  for (auto const &m : minimal_normal_subgroups(g))
    res = normal_join(res, m);
  return {res, false};
}

Subgroup socle(GroupPtr const &g) { return socle_info(g).subgroup; }

Subgroup socle_above(Subgroup const &n)
{
  auto lat = normal_subgroups(n.ambient());
  std::size_t i = lat.index_of(n);
  Subgroup res = n;
  for (std::size_t j : lat.covers(i))
    res = normal_join(res, lat.members[j]);
  return res;
}

Subgroup fitting_subgroup(GroupPtr const &g)
{
  auto lat = normal_subgroups(g);
  Subgroup res = trivial_subgroup(g);
  for (auto const &m : lat.members) {
    if (m.subset_of(res))
      continue;
    if (lower_central_series(as_group(m)).back().is_trivial())
      res = normal_join(res, m);
  }
  if (!lower_central_series(as_group(res)).back().is_trivial())
    throw AssertionFailure("join of nilpotent normal subgroups is not "
                           "nilpotent");
  return res;
}

Subgroup split_complement(GroupPtr const &g, Subgroup const &a)
{
  if (g->is_trivial() || !socle(g).is_whole())
    throw PreconditionError("split_complement needs a span of gems");
  if (!is_normal(a))
    throw PreconditionError("split_complement needs a normal subgroup");
  Subgroup b = trivial_subgroup(g);
  auto minimal = minimal_normal_subgroups(g);
  while (a.order() * b.order() < g->order()) {
    Subgroup ab = normal_join(a, b);
    auto it = std::find_if(minimal.begin(), minimal.end(),
                           [&](Subgroup const &m) { return !m.subset_of(ab); });
    if (it == minimal.end())
      throw AssertionFailure("span of gems without a complementing factor");
    b = normal_join(b, *it);
  }
  return b;
}

} // namespace grpcx
