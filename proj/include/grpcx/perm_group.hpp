#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "grpcx/element_set.hpp"
#include "grpcx/permutation.hpp"

namespace grpcx
{

/// Resource caps shared by every group derived from a constructed group.
struct Limits
{
  std::uint64_t max_order = 20000;
  std::size_t max_degree = 20000;
  std::size_t max_lattice = 100000;
  // Groups up to this order get a full multiplication table.
  std::uint64_t table_cap = 2048;
};

// Process-wide defaults used when no Limits are passed explicitly.
Limits &default_limits();

/// Deterministic identity of a concrete group: degree, order and a hash of the
/// sorted element images. Used for memoization only, never as an isomorphism
/// invariant.
struct GroupKey
{
  std::size_t degree = 0;
  std::uint64_t order = 0;
  std::uint64_t hash = 0;

  friend auto operator<=>(GroupKey const &, GroupKey const &) = default;
  std::string str() const;
};

struct GroupKeyHash
{
  std::size_t operator()(GroupKey const &k) const
  {
    return static_cast<std::size_t>(k.hash ^ (k.order * 0x9e3779b97f4a7c15ull) ^
                                    k.degree);
  }
};

class PermGroup;
struct NormalLattice;
using GroupPtr = std::shared_ptr<PermGroup const>;

/// A finite permutation group given by generators.
///
/// The order comes from a Schreier-Sims stabilizer chain with base points in
/// natural order. Elements are enumerated eagerly (the order is capped) and
/// sorted lexicographically by image sequence, so index 0 is the identity.
/// Conjugacy classes and the multiplication table are filled lazily; fills
/// are guarded by std::call_once so concurrent readers are safe.
class PermGroup
{
  struct Private
  {};

public:
  PermGroup(Private, std::size_t degree, std::vector<Permutation> generators,
            Limits limits);

  static GroupPtr create(std::size_t degree,
                         std::vector<Permutation> generators,
                         Limits const &limits = default_limits());

  // Builds a group whose sorted element list is already known.
  static GroupPtr from_elements(std::size_t degree,
                                std::vector<Permutation> generators,
                                std::vector<Permutation> sorted_elements,
                                Limits const &limits);

  std::size_t degree() const { return degree_; }
  std::vector<Permutation> const &generators() const { return generators_; }
  std::uint64_t order() const { return elements_.size(); }
  bool is_trivial() const { return order() == 1; }
  Limits const &limits() const { return limits_; }
  GroupKey const &key() const { return key_; }

  std::vector<Permutation> const &elements() const { return elements_; }
  Permutation const &element(ElementIndex i) const { return elements_[i]; }
  std::optional<ElementIndex> find(Permutation const &p) const;
  ElementIndex index_of(Permutation const &p) const;
  bool contains(Permutation const &p) const { return find(p).has_value(); }

  static constexpr ElementIndex identity_index() { return 0; }
  ElementIndex mul(ElementIndex a, ElementIndex b) const;
  ElementIndex inv(ElementIndex a) const { return inverses_[a]; }
  ElementIndex conj(ElementIndex x, ElementIndex g) const
  {
    return mul(mul(inv(g), x), g);
  }
  ElementIndex comm(ElementIndex a, ElementIndex b) const
  {
    return mul(mul(inv(a), inv(b)), mul(a, b));
  }

  std::vector<ElementIndex> const &generator_indices() const
  {
    return generator_indices_;
  }

  // Classes sorted by smallest member; the identity class comes first.
  std::vector<std::vector<ElementIndex>> const &conjugacy_classes() const;
  std::uint64_t element_order(ElementIndex i) const;

  ElementSet empty_set() const { return ElementSet(elements_.size()); }

  // Storage slot for normal_subgroups(); `build` runs at most once.
  template <typename F>
  NormalLattice const &lattice_cache(F &&build) const
  {
    std::call_once(lattice_once_, [&] { lattice_ = build(); });
    return *lattice_;
  }

private:
  void init_elements(std::vector<Permutation> sorted);
  void build_table() const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  Limits limits_;
  GroupKey key_;
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, ElementIndex> index_;
  std::vector<ElementIndex> inverses_;
  std::vector<ElementIndex> generator_indices_;

  mutable std::once_flag table_once_;
  mutable std::vector<ElementIndex> table_;
  mutable std::once_flag classes_once_;
  mutable std::vector<std::vector<ElementIndex>> classes_;
  mutable std::once_flag lattice_once_;
  mutable std::shared_ptr<NormalLattice const> lattice_;
};

// Key of a sorted element list, shared by groups and subgroups.
GroupKey key_of_sorted(std::size_t degree,
                       std::span<Permutation const> sorted_elements);

/// A subgroup of a fixed ambient group, stored as an element-index set.
class Subgroup
{
public:
  Subgroup() = default;
  Subgroup(GroupPtr ambient, ElementSet members);

  GroupPtr const &ambient() const { return ambient_; }
  ElementSet const &members() const { return members_; }
  std::uint64_t order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == ambient_->order(); }
  bool contains(ElementIndex i) const { return members_.contains(i); }
  bool contains(Permutation const &p) const;
  GroupKey const &key() const { return key_; }

  std::vector<Permutation> elements() const;
  // Deterministic small generating set (greedy over index order).
  std::vector<ElementIndex> generators() const;
  std::vector<Permutation> generator_perms() const;

  // Same members over another handle to the same ambient group.
  Subgroup with_ambient(GroupPtr ambient) const
  {
    Subgroup res(*this);
    res.ambient_ = std::move(ambient);
    return res;
  }

  bool subset_of(Subgroup const &other) const
  {
    return members_.subset_of(other.members_);
  }

  friend bool operator==(Subgroup const &a, Subgroup const &b)
  {
    return a.members_ == b.members_;
  }
  // (order, canonical key, members) ordering used for every deterministic
  // listing.
  friend bool operator<(Subgroup const &a, Subgroup const &b);

private:
  GroupPtr ambient_;
  ElementSet members_;
  std::uint64_t order_ = 0;
  GroupKey key_;
};

GroupPtr group_from_generators(std::size_t degree,
                               std::vector<Permutation> gens,
                               Limits const &limits = default_limits());

Subgroup trivial_subgroup(GroupPtr const &g);
Subgroup whole_group(GroupPtr const &g);
Subgroup generated_subgroup(GroupPtr const &g,
                            std::span<ElementIndex const> gens);
Subgroup generated_subgroup(GroupPtr const &g,
                            std::span<Permutation const> gens);
// Subgroup generated by a and b.
Subgroup join(Subgroup const &a, Subgroup const &b);
Subgroup intersection(Subgroup const &a, Subgroup const &b);

bool is_normal(Subgroup const &h);
// Normal in `over`, where h <= over <= ambient.
bool is_normal_in(Subgroup const &h, Subgroup const &over);

Subgroup normal_closure(GroupPtr const &g, std::span<ElementIndex const> seed);
Subgroup normal_closure(GroupPtr const &g, std::span<Permutation const> seed);
Subgroup centralizer(GroupPtr const &g, Subgroup const &h);
Subgroup center(GroupPtr const &g);
// Subgroup generated by all [a, b], closed under conjugation by <A, B>.
Subgroup commutator_subgroup(GroupPtr const &g, Subgroup const &a,
                             Subgroup const &b);
std::vector<Subgroup> derived_series(GroupPtr const &g);
std::vector<Subgroup> lower_central_series(GroupPtr const &g);

std::uint64_t element_order(Permutation const &p);
// log_p: largest e such that g has an element of order p^e.
unsigned max_prime_power_order(GroupPtr const &g, std::uint64_t p);

// The subgroup as a group in its own right (same degree and points).
// Interned: equal element sets yield the same object.
GroupPtr as_group(Subgroup const &h);
// Re-expresses h (a subgroup of some group whose elements all lie in
// `target`) as a subgroup of `target`.
Subgroup transfer(Subgroup const &h, GroupPtr const &target);

// Shares a group with all other groups of the same key; returns the
// canonical instance.
GroupPtr intern(GroupPtr g);

} // namespace grpcx
