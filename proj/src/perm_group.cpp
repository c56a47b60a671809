#include "grpcx/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "grpcx/error.hpp"
#include "grpcx/kernels.hpp"

namespace grpcx
{

Limits &default_limits()
{
  static Limits limits;
  return limits;
}

std::string GroupKey::str() const
{
  std::ostringstream os;
  os << degree << '-' << order << '-' << std::hex << hash;
  return os.str();
}

namespace
{

std::uint64_t fnv_mix(std::uint64_t h, std::uint64_t v)
{
  h ^= v;
  h *= 0x100000001b3ull;
  return h;
}

// Stabilizer chain with base points chosen as the smallest moved point.
class StabChain
{
public:
  explicit StabChain(std::size_t degree) : degree_(degree) {}

  void build(std::vector<Permutation> const &gens)
  {
    std::vector<Permutation> strong;
    for (auto const &g : gens)
      if (!g.is_identity())
        strong.push_back(g);
    if (strong.empty())
      return;

    for (auto const &s : strong)
      append_generator(s, 0);

    std::size_t i = levels_.size();
    while (i > 0) {
      std::size_t lvl = i - 1;
      if (auto top = extend_from(lvl))
        i = *top + 1;
      else
        --i;
    }
  }

  std::uint64_t order(std::uint64_t cap) const
  {
    std::uint64_t res = 1;
    for (auto const &L : levels_) {
      std::uint64_t s = L.orbit.size();
      if (res > cap / s + 1)
        return cap + 1;
      res *= s;
      if (res > cap)
        return cap + 1;
    }
    return res;
  }

  std::vector<Permutation> enumerate() const
  {
    std::vector<Permutation> list{Permutation::identity(degree_)};
    for (std::size_t l = levels_.size(); l-- > 0;) {
      std::vector<Permutation> next;
      next.reserve(list.size() * levels_[l].reps.size());
      for (auto const &x : list)
        for (auto const &r : levels_[l].reps)
          next.push_back(x * r);
      list = std::move(next);
    }
    return list;
  }

private:
  struct Level
  {
    Point base;
    std::vector<Permutation> gens;
    std::vector<std::int32_t> slot;
    std::vector<Point> orbit;
    std::vector<Permutation> reps;
    std::vector<Permutation> reps_inv;
  };

  void compute_orbit(Level &L)
  {
    L.slot.assign(degree_, -1);
    L.orbit = {L.base};
    L.reps = {Permutation::identity(degree_)};
    L.slot[L.base] = 0;
    for (std::size_t k = 0; k < L.orbit.size(); ++k) {
      for (auto const &g : L.gens) {
        Point q = g[L.orbit[k]];
        if (L.slot[q] < 0) {
          L.slot[q] = static_cast<std::int32_t>(L.orbit.size());
          L.orbit.push_back(q);
          L.reps.push_back(L.reps[k] * g);
        }
      }
    }
    L.reps_inv.clear();
    for (auto const &r : L.reps)
      L.reps_inv.push_back(r.inverse());
  }

  // Sifts the Schreier generators of level `lvl`; on the first one that does
  // not sift, adds its residue and returns the deepest level touched.
  std::optional<std::size_t> extend_from(std::size_t lvl)
  {
    for (std::size_t k = 0; k < levels_[lvl].orbit.size(); ++k) {
      for (std::size_t gi = 0; gi < levels_[lvl].gens.size(); ++gi) {
        Level const &L = levels_[lvl];
        Permutation const &g = L.gens[gi];
        Point img = g[L.orbit[k]];
        Permutation h = L.reps[k] * g * L.reps_inv[L.slot[img]];
        if (h.is_identity())
          continue;
        auto [residue, stop] = strip(std::move(h), lvl + 1);
        if (stop == levels_.size() && residue.is_identity())
          continue;
        return append_generator(residue, lvl + 1);
      }
    }
    return std::nullopt;
  }

  std::pair<Permutation, std::size_t> strip(Permutation h,
                                            std::size_t from) const
  {
    for (std::size_t l = from; l < levels_.size(); ++l) {
      Level const &L = levels_[l];
      Point beta = h[L.base];
      if (L.slot[beta] < 0)
        return {std::move(h), l};
      h = h * L.reps_inv[L.slot[beta]];
    }
    return {std::move(h), levels_.size()};
  }

  // Adds g (which fixes the base points before `from`) as a strong generator
  // for levels from..j, where j is the first level whose base point g moves
  // (a new level is created when g fixes every base point). Returns j.
  std::size_t append_generator(Permutation const &g, std::size_t from)
  {
    std::size_t j = from;
    while (j < levels_.size() && g[levels_[j].base] == levels_[j].base)
      ++j;
    if (j == levels_.size()) {
      Point moved = 0;
      while (g[moved] == moved)
        ++moved;
      levels_.push_back(Level{moved, {}, {}, {}, {}, {}});
    }
    for (std::size_t l = from; l <= j; ++l) {
      levels_[l].gens.push_back(g);
      compute_orbit(levels_[l]);
    }
    return j;
  }

  std::size_t degree_;
  std::vector<Level> levels_;
};

struct Registry
{
  std::mutex mutex;
  std::unordered_map<GroupKey, GroupPtr, GroupKeyHash> groups;
};

Registry &registry()
{
  static Registry r;
  return r;
}

} // namespace

GroupKey key_of_sorted(std::size_t degree,
                       std::span<Permutation const> sorted_elements)
{
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv_mix(h, degree);
  for (auto const &p : sorted_elements)
    for (Point x : p.images())
      h = fnv_mix(h, x);
  return GroupKey{degree, sorted_elements.size(), h};
}

PermGroup::PermGroup(Private, std::size_t degree,
                     std::vector<Permutation> generators, Limits limits)
  : degree_(degree), generators_(std::move(generators)), limits_(limits)
{}

GroupPtr PermGroup::create(std::size_t degree,
                           std::vector<Permutation> generators,
                           Limits const &limits)
{
  if (degree == 0)
    throw InputError("degree must be positive");
  if (degree > limits.max_degree)
    throw CapExceeded("degree " + std::to_string(degree) + " exceeds cap " +
                      std::to_string(limits.max_degree));
  for (auto const &g : generators)
    if (g.degree() != degree)
      throw InputError("generator degree " + std::to_string(g.degree()) +
                       " does not match group degree " +
                       std::to_string(degree));
  if (generators.empty())
    generators.push_back(Permutation::identity(degree));

  StabChain chain(degree);
  chain.build(generators);
  if (chain.order(limits.max_order) > limits.max_order)
    throw CapExceeded("group too large for exhaustive measures (order cap " +
                      std::to_string(limits.max_order) + ")");

  auto elements = chain.enumerate();
  std::sort(elements.begin(), elements.end());
  auto g = std::make_shared<PermGroup>(Private{}, degree, std::move(generators),
                                       limits);
  g->init_elements(std::move(elements));
  return g;
}

GroupPtr PermGroup::from_elements(std::size_t degree,
                                  std::vector<Permutation> generators,
                                  std::vector<Permutation> sorted_elements,
                                  Limits const &limits)
{
  if (generators.empty())
    generators.push_back(Permutation::identity(degree));
  auto g = std::make_shared<PermGroup>(Private{}, degree, std::move(generators),
                                       limits);
  g->init_elements(std::move(sorted_elements));
  return g;
}

void PermGroup::init_elements(std::vector<Permutation> sorted)
{
  elements_ = std::move(sorted);
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    index_.emplace(elements_[i], static_cast<ElementIndex>(i));
  inverses_.resize(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i)
    inverses_[i] = index_.at(elements_[i].inverse());
  for (auto const &g : generators_)
    generator_indices_.push_back(index_.at(g));
  key_ = key_of_sorted(degree_, elements_);
}

std::optional<ElementIndex> PermGroup::find(Permutation const &p) const
{
  if (p.degree() != degree_)
    return std::nullopt;
  auto it = index_.find(p);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElementIndex PermGroup::index_of(Permutation const &p) const
{
  auto i = find(p);
  if (!i)
    throw PreconditionError("permutation is not an element of the group");
  return *i;
}

void PermGroup::build_table() const
{
  std::call_once(table_once_, [this] {
    if (order() <= limits_.table_cap)
      table_ = kernels::omp::product_table(elements_, index_);
  });
}

ElementIndex PermGroup::mul(ElementIndex a, ElementIndex b) const
{
  build_table();
  if (!table_.empty())
    return table_[static_cast<std::size_t>(a) * elements_.size() + b];
  return index_.at(elements_[a] * elements_[b]);
}

std::vector<std::vector<ElementIndex>> const &
PermGroup::conjugacy_classes() const
{
  std::call_once(classes_once_, [this] {
    auto images = kernels::omp::conjugation_images(*this, generator_indices_);
    std::vector<bool> seen(order(), false);
    for (ElementIndex start = 0; start < order(); ++start) {
      if (seen[start])
        continue;
      std::vector<ElementIndex> cls{start};
      seen[start] = true;
      for (std::size_t k = 0; k < cls.size(); ++k) {
        for (auto const &row : images) {
          ElementIndex y = row[cls[k]];
          if (!seen[y]) {
            seen[y] = true;
            cls.push_back(y);
          }
        }
      }
      std::sort(cls.begin(), cls.end());
      classes_.push_back(std::move(cls));
    }
  });
  return classes_;
}

std::uint64_t PermGroup::element_order(ElementIndex i) const
{
  return elements_[i].order();
}

Subgroup::Subgroup(GroupPtr ambient, ElementSet members)
  : ambient_(std::move(ambient)), members_(std::move(members))
{
  order_ = members_.count();
  std::uint64_t h = 0xcbf29ce484222325ull;
  h = fnv_mix(h, ambient_->degree());
  members_.for_each([&](ElementIndex i) {
    for (Point x : ambient_->element(i).images())
      h = fnv_mix(h, x);
  });
  key_ = GroupKey{ambient_->degree(), order_, h};
}

bool Subgroup::contains(Permutation const &p) const
{
  auto i = ambient_->find(p);
  return i && members_.contains(*i);
}

std::vector<Permutation> Subgroup::elements() const
{
  std::vector<Permutation> res;
  res.reserve(order_);
  members_.for_each([&](ElementIndex i) { res.push_back(ambient_->element(i)); });
  return res;
}

std::vector<ElementIndex> Subgroup::generators() const
{
  std::vector<ElementIndex> gens;
  ElementSet span = ambient_->empty_set();
  span.insert(PermGroup::identity_index());
  std::size_t have = 1;
  members_.for_each([&](ElementIndex i) {
    if (have == order_ || span.contains(i))
      return;
    gens.push_back(i);
    span = generated_subgroup(ambient_, gens).members();
    have = span.count();
  });
  return gens;
}

std::vector<Permutation> Subgroup::generator_perms() const
{
  std::vector<Permutation> res;
  for (ElementIndex i : generators())
    res.push_back(ambient_->element(i));
  return res;
}

bool operator<(Subgroup const &a, Subgroup const &b)
{
  if (a.order_ != b.order_)
    return a.order_ < b.order_;
  if (a.key_.hash != b.key_.hash)
    return a.key_.hash < b.key_.hash;
  return a.members_.indices() < b.members_.indices();
}

GroupPtr group_from_generators(std::size_t degree,
                               std::vector<Permutation> gens,
                               Limits const &limits)
{
  return PermGroup::create(degree, std::move(gens), limits);
}

Subgroup trivial_subgroup(GroupPtr const &g)
{
  ElementSet s = g->empty_set();
  s.insert(PermGroup::identity_index());
  return Subgroup(g, std::move(s));
}

Subgroup whole_group(GroupPtr const &g)
{
  ElementSet s = g->empty_set();
  for (ElementIndex i = 0; i < g->order(); ++i)
    s.insert(i);
  return Subgroup(g, std::move(s));
}

namespace
{

// Closure of `start` (already containing the identity) under right
// multiplication by `gens`.
ElementSet close(PermGroup const &g, ElementSet set,
                 std::span<ElementIndex const> gens)
{
  std::vector<ElementIndex> queue = set.indices();
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (ElementIndex s : gens) {
      ElementIndex y = g.mul(queue[k], s);
      if (!set.contains(y)) {
        set.insert(y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

} // namespace

Subgroup generated_subgroup(GroupPtr const &g,
                            std::span<ElementIndex const> gens)
{
  ElementSet s = g->empty_set();
  s.insert(PermGroup::identity_index());
  return Subgroup(g, close(*g, std::move(s), gens));
}

Subgroup generated_subgroup(GroupPtr const &g,
                            std::span<Permutation const> gens)
{
  std::vector<ElementIndex> idx;
  for (auto const &p : gens)
    idx.push_back(g->index_of(p));
  return generated_subgroup(g, idx);
}

Subgroup join(Subgroup const &a, Subgroup const &b)
{
  if (b.subset_of(a))
    return a;
  if (a.subset_of(b))
    return b;
  auto gens = a.generators();
  for (ElementIndex i : b.generators())
    gens.push_back(i);
  return generated_subgroup(a.ambient(), gens);
}

Subgroup intersection(Subgroup const &a, Subgroup const &b)
{
  return Subgroup(a.ambient(), a.members() & b.members());
}

bool is_normal_in(Subgroup const &h, Subgroup const &over)
{
  auto const &g = *h.ambient();
  auto hg = h.generators();
  for (ElementIndex x : over.generators())
    for (ElementIndex s : hg)
      if (!h.contains(g.conj(s, x)))
        return false;
  return true;
}

bool is_normal(Subgroup const &h)
{
  auto const &g = *h.ambient();
  auto hg = h.generators();
  for (ElementIndex x : g.generator_indices())
    for (ElementIndex s : hg)
      if (!h.contains(g.conj(s, x)))
        return false;
  return true;
}

Subgroup normal_closure(GroupPtr const &g, std::span<ElementIndex const> seed)
{
  std::vector<ElementIndex> gens;
  ElementSet set = g->empty_set();
  set.insert(PermGroup::identity_index());
  for (ElementIndex s : seed) {
    if (!set.contains(s)) {
      gens.push_back(s);
      set = close(*g, std::move(set), gens);
    }
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (ElementIndex x : g->generator_indices()) {
      ElementIndex c = g->conj(gens[k], x);
      if (!set.contains(c)) {
        gens.push_back(c);
        set = close(*g, std::move(set), gens);
      }
    }
  }
  return Subgroup(g, std::move(set));
}

Subgroup normal_closure(GroupPtr const &g, std::span<Permutation const> seed)
{
  std::vector<ElementIndex> idx;
  for (auto const &p : seed)
    idx.push_back(g->index_of(p));
  return normal_closure(g, idx);
}

Subgroup centralizer(GroupPtr const &g, Subgroup const &h)
{
  auto hg = h.generators();
  ElementSet res = g->empty_set();
  for (ElementIndex x = 0; x < g->order(); ++x) {
    bool commutes = true;
    for (ElementIndex s : hg) {
      if (g->mul(x, s) != g->mul(s, x)) {
        commutes = false;
        break;
      }
    }
    if (commutes)
      res.insert(x);
  }
  return Subgroup(g, std::move(res));
}

Subgroup center(GroupPtr const &g) { return centralizer(g, whole_group(g)); }

Subgroup commutator_subgroup(GroupPtr const &g, Subgroup const &a,
                             Subgroup const &b)
{
  // [A, B] is the normal closure in <A, B> of the generator commutators.
  auto xs = a.generators();
  auto ys = b.generators();
  std::vector<ElementIndex> conj_by = xs;
  conj_by.insert(conj_by.end(), ys.begin(), ys.end());
  std::vector<ElementIndex> gens;
  ElementSet set = g->empty_set();
  set.insert(PermGroup::identity_index());
  auto absorb = [&](ElementIndex c) {
    if (!set.contains(c)) {
      gens.push_back(c);
      set = close(*g, std::move(set), gens);
    }
  };
  for (ElementIndex x : xs)
    for (ElementIndex y : ys)
      absorb(g->comm(x, y));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (ElementIndex z : conj_by)
      absorb(g->conj(gens[k], z));
  return Subgroup(g, std::move(set));
}

std::vector<Subgroup> derived_series(GroupPtr const &g)
{
  std::vector<Subgroup> series{whole_group(g)};
  while (!series.back().is_trivial()) {
    auto next = commutator_subgroup(g, series.back(), series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::vector<Subgroup> lower_central_series(GroupPtr const &g)
{
  auto whole = whole_group(g);
  std::vector<Subgroup> series{whole};
  while (!series.back().is_trivial()) {
    auto next = commutator_subgroup(g, whole, series.back());
    if (next == series.back())
      break;
    series.push_back(std::move(next));
  }
  return series;
}

std::uint64_t element_order(Permutation const &p) { return p.order(); }

unsigned max_prime_power_order(GroupPtr const &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw InputError(std::to_string(p) + " is not prime");
  unsigned best = 0;
  for (auto ord : kernels::omp::element_orders(g->elements())) {
    unsigned e = 0;
    while (ord % p == 0) {
      ord /= p;
      ++e;
    }
    if (ord == 1)
      best = std::max(best, e);
  }
  return best;
}

GroupPtr intern(GroupPtr g)
{
  auto &r = registry();
  std::lock_guard lock(r.mutex);
  auto [it, inserted] = r.groups.emplace(g->key(), g);
  if (inserted)
    return g;
  if (it->second->elements() == g->elements())
    return it->second;
  return g;
}

GroupPtr as_group(Subgroup const &h)
{
  {
    auto &r = registry();
    std::lock_guard lock(r.mutex);
    auto it = r.groups.find(h.key());
    if (it != r.groups.end() && it->second->order() == h.order()) {
      bool same = true;
      auto const &elems = it->second->elements();
      std::size_t k = 0;
      h.members().for_each([&](ElementIndex i) {
        if (same && !(elems[k++] == h.ambient()->element(i)))
          same = false;
      });
      if (same)
        return it->second;
    }
  }
  auto gens = h.generator_perms();
  return intern(PermGroup::from_elements(h.ambient()->degree(), std::move(gens),
                                         h.elements(),
                                         h.ambient()->limits()));
}

Subgroup transfer(Subgroup const &h, GroupPtr const &target)
{
  ElementSet s = target->empty_set();
  h.members().for_each([&](ElementIndex i) {
    s.insert(target->index_of(h.ambient()->element(i)));
  });
  return Subgroup(target, std::move(s));
}

} // namespace grpcx
