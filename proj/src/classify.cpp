#include "grpcx/classify.hpp"

#include <algorithm>
#include <charconv>

#include "grpcx/error.hpp"

namespace grpcx
{

namespace
{

// N[A, B] for A, B, N normal in the ambient.
Subgroup commutator_mod(Subgroup const &a, Subgroup const &b,
                        Subgroup const &n)
{
  return normal_join(commutator_subgroup(a.ambient(), a, b), n);
}

} // namespace

bool is_abelian(GroupPtr const &g)
{
  auto const &gens = g->generator_indices();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (g->mul(gens[i], gens[j]) != g->mul(gens[j], gens[i]))
        return false;
  return true;
}

bool is_nilpotent(GroupPtr const &g)
{
  return lower_central_series(g).back().is_trivial();
}

bool is_solvable(GroupPtr const &g)
{
  return derived_series(g).back().is_trivial();
}

bool is_simple(GroupPtr const &g)
{
  if (g->is_trivial())
    throw PreconditionError("the trivial group is not simple by convention");
  return normal_subgroups(g).members.size() == 2;
}

bool is_span_of_gems(GroupPtr const &g)
{
  return !g->is_trivial() && quotient_is_span_of_gems(trivial_subgroup(g));
}

std::string to_string(NecklaceClass c)
{
  switch (c) {
  case NecklaceClass::abelian:
    return "abelian";
  case NecklaceClass::nilpotent:
    return "nilpotent";
  case NecklaceClass::solvable:
    return "solvable";
  }
  return "?";
}

bool is_necklace(GroupPtr const &g, NecklaceClass c)
{
  return quotient_is_necklace(trivial_subgroup(g), c);
}

SimpleDescriptor SimpleDescriptor::parse(std::string_view text)
{
  auto bad = [&] {
    return InputError("bad simple descriptor '" + std::string(text) +
                      "' (expected e.g. 2a or 60n)");
  };
  if (text.size() < 2)
    throw bad();
  char tag = text.back();
  if (tag != 'a' && tag != 'n')
    throw bad();
  SimpleDescriptor d;
  auto digits = text.substr(0, text.size() - 1);
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), d.order);
  if (ec != std::errc() || ptr != digits.data() + digits.size())
    throw bad();
  d.abelian = tag == 'a';
  if (d.abelian && !is_prime(d.order))
    throw InputError("abelian simple descriptor needs a prime order: " +
                     std::string(text));
  if (!d.abelian && d.order < 60)
    throw InputError("nonabelian simple groups have order at least 60: " +
                     std::string(text));
  return d;
}

std::string SimpleDescriptor::str() const
{
  return std::to_string(order) + (abelian ? "a" : "n");
}

SimpleDescriptor simple_type(GroupPtr const &g)
{
  if (g->is_trivial() || !is_simple(g))
    throw PreconditionError("simple_type needs a simple group");
  return {g->order(), is_prime(g->order())};
}

void FactorMultiset::add(SimpleDescriptor d, std::uint64_t count)
{
  if (count > 0)
    entries[d] += count;
}

std::uint64_t FactorMultiset::total() const
{
  std::uint64_t res = 0;
  for (auto const &[d, k] : entries)
    res += k;
  return res;
}

std::uint64_t FactorMultiset::group_order() const
{
  std::uint64_t res = 1;
  for (auto const &[d, k] : entries)
    for (std::uint64_t i = 0; i < k; ++i)
      res *= d.order;
  return res;
}

std::string FactorMultiset::str() const
{
  if (entries.empty())
    return "1";
  std::string res;
  for (auto const &[d, k] : entries) {
    if (!res.empty())
      res += ' ';
    res += d.str();
    if (k > 1)
      res += '^' + std::to_string(k);
  }
  return res;
}

FactorMultiset jh_factors(GroupPtr const &g)
{
  FactorMultiset res;
  GroupPtr cur = g;
  while (!cur->is_trivial()) {
    auto maximal = maximal_normal_subgroups(cur);
    Subgroup const &m = maximal.front();
    std::uint64_t index = cur->order() / m.order();
    res.add({index, is_prime(index)});
    cur = as_group(m);
  }
  return res;
}

FactorMultiset gem_factor_multiset(GroupPtr const &g)
{
  if (!is_span_of_gems(g))
    throw PreconditionError("gem_factor_multiset needs a span of gems");
  return quotient_gem_factors(trivial_subgroup(g));
}

Subgroup sylow_of_nilpotent(GroupPtr const &g, std::uint64_t p)
{
  if (!is_prime(p))
    throw InputError("sylow_of_nilpotent needs a prime, got " +
                     std::to_string(p));
  if (!is_nilpotent(g))
    throw PreconditionError("sylow_of_nilpotent needs a nilpotent group");
  ElementSet members = g->empty_set();
  for (ElementIndex i = 0; i < g->order(); ++i) {
    std::uint64_t k = g->element_order(i);
    while (k % p == 0)
      k /= p;
    if (k == 1)
      members.insert(i);
  }
  return Subgroup(g, std::move(members));
}

bool section_in_class(Subgroup const &x, Subgroup const &n, NecklaceClass c)
{
  switch (c) {
  case NecklaceClass::abelian:
    return commutator_mod(x, x, n) == n;
  case NecklaceClass::nilpotent: {
    Subgroup k = x;
    while (!(k == n)) {
      Subgroup next = commutator_mod(x, k, n);
      if (next == k)
        return false;
      k = std::move(next);
    }
    return true;
  }
  case NecklaceClass::solvable: {
    Subgroup k = x;
    while (!(k == n)) {
      Subgroup next = commutator_mod(k, k, n);
      if (next == k)
        return false;
      k = std::move(next);
    }
    return true;
  }
  }
  return false;
}

bool quotient_is_abelian(Subgroup const &n)
{
  return section_in_class(whole_group(n.ambient()), n,
                          NecklaceClass::abelian);
}

bool quotient_is_span_of_gems(Subgroup const &n)
{
  if (n.is_whole())
    return false;
  return socle_above(n).is_whole();
}

bool quotient_is_necklace(Subgroup const &n, NecklaceClass c)
{
  auto const &g = n.ambient();
  auto lat = normal_subgroups(g);
  // L/N: join of the nonabelian minimal normal subgroups of G/N.
  Subgroup l = n;
  for (std::size_t j : lat.covers(lat.index_of(n))) {
    Subgroup const &m = lat.members[j];
    if (!(commutator_mod(m, m, n) == n))
      l = normal_join(l, m);
  }
  // C/N: centralizer of L/N in G/N.
  auto lgens = l.generators();
  ElementSet cmem = g->empty_set();
  for (ElementIndex x = 0; x < g->order(); ++x) {
    bool central = std::all_of(lgens.begin(), lgens.end(), [&](ElementIndex y) {
      return n.contains(g->comm(x, y));
    });
    if (central)
      cmem.insert(x);
  }
  Subgroup cz(g, std::move(cmem));
  if (!(intersection(l, cz) == n) ||
      l.order() * cz.order() != g->order() * n.order())
    return false;
  return section_in_class(cz, n, c);
}

FactorMultiset quotient_gem_factors(Subgroup const &n)
{
  if (!quotient_is_span_of_gems(n))
    throw PreconditionError("quotient is not a span of gems");
  auto const &g = n.ambient();
  auto lat = normal_subgroups(g);
  FactorMultiset res;
  Subgroup abelian_part = n;
  for (std::size_t j : lat.covers(lat.index_of(n))) {
    Subgroup const &m = lat.members[j];
    if (commutator_mod(m, m, n) == n)
      abelian_part = normal_join(abelian_part, m);
    else
      res.add({m.order() / n.order(), false});
  }
  std::uint64_t rest = abelian_part.order() / n.order();
  for (std::uint64_t p : prime_divisors(rest)) {
    while (rest % p == 0) {
      res.add({p, true});
      rest /= p;
    }
  }
  if (res.group_order() != g->order() / n.order())
    throw AssertionFailure("gem factors do not account for the quotient "
                           "order");
  return res;
}

} // namespace grpcx
