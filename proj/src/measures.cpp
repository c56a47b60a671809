#include "grpcx/measures.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>

#include "grpcx/builders.hpp"
#include "grpcx/error.hpp"

namespace grpcx
{

namespace
{

// Memo keyed by (measure tag, group key). Values are recomputed if two
// threads race on the same entry; both results agree.
class Memo
{
public:
  std::optional<std::uint64_t> get(std::string const &tag, GroupKey const &k)
  {
    std::lock_guard lock(mutex_);
    auto it = table_.find({tag, k});
    if (it == table_.end())
      return std::nullopt;
    return it->second;
  }

  void put(std::string const &tag, GroupKey const &k, std::uint64_t v)
  {
    std::lock_guard lock(mutex_);
    table_.emplace(std::make_pair(tag, k), v);
  }

  void clear()
  {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

private:
  std::mutex mutex_;
  std::map<std::pair<std::string, GroupKey>, std::uint64_t> table_;
};

Memo &memo()
{
  static Memo m;
  return m;
}

std::uint64_t memoized(std::string const &tag, GroupPtr const &g,
                       std::function<std::uint64_t()> const &compute)
{
  if (auto v = memo().get(tag, g->key()))
    return *v;
  std::uint64_t v = compute();
  memo().put(tag, g->key(), v);
  return v;
}

// 1 + min over proper normal N with the level test on G/N of f(N).
std::uint64_t min_over_levels(GroupPtr const &g,
                              std::function<bool(Subgroup const &)> const &level,
                              std::function<std::uint64_t(Subgroup const &)> const
                                  &cost,
                              bool minimal_only)
{
  auto lat = normal_subgroups(g);
  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::size_t> admissible;
  for (std::size_t i = 0; i + 1 < lat.members.size(); ++i) {
    auto const &n = lat.members[i];
    // cost is monotone on normal subgroups, so only minimal admissible N count
    if (minimal_only &&
        std::any_of(admissible.begin(), admissible.end(), [&](std::size_t j) {
          return lat.members[j].subset_of(n);
        }))
      continue;
    if (!level(n))
      continue;
    admissible.push_back(i);
    best = std::min(best, cost(n));
    if (best == 0)
      break;
  }
  if (best == std::numeric_limits<std::uint64_t>::max())
    throw AssertionFailure("no admissible top level in a nontrivial group");
  return best;
}

Decomposition decomposition_of(std::vector<Subgroup> series)
{
  Decomposition d;
  for (std::size_t i = 0; i + 1 < series.size(); ++i) {
    auto top = as_group(series[i + 1]);
    auto n = transfer(series[i], top);
    d.quotient_info.push_back(
        {top->order() / n.order(), quotient_gem_factors(n)});
  }
  d.series = std::move(series);
  return d;
}

std::vector<Subgroup> cx_chain(GroupPtr const &g)
{
  if (g->is_trivial())
    return {trivial_subgroup(g)};
  std::uint64_t target = cx(g) - 1;
  for (auto const &n : normal_subgroups(g).members) {
    if (n.is_whole() || !quotient_is_span_of_gems(n))
      continue;
    auto h = as_group(n);
    if (cx(h) != target)
      continue;
    std::vector<Subgroup> res;
    for (auto const &s : cx_chain(h))
      res.push_back(transfer(s, g));
    res.push_back(whole_group(g));
    return res;
  }
  throw AssertionFailure("cx witness search found no optimal level");
}

std::vector<std::vector<Subgroup>> all_cx_chains(GroupPtr const &g)
{
  if (g->is_trivial())
    return {{trivial_subgroup(g)}};
  std::uint64_t target = cx(g) - 1;
  std::vector<std::vector<Subgroup>> res;
  for (auto const &n : normal_subgroups(g).members) {
    if (n.is_whole() || !quotient_is_span_of_gems(n))
      continue;
    auto h = as_group(n);
    if (cx(h) != target)
      continue;
    for (auto const &chain : all_cx_chains(h)) {
      std::vector<Subgroup> lifted;
      for (auto const &s : chain)
        lifted.push_back(transfer(s, g));
      lifted.push_back(whole_group(g));
      res.push_back(std::move(lifted));
    }
  }
  return res;
}

char const *tag_of(NecklaceClass c)
{
  switch (c) {
  case NecklaceClass::abelian:
    return "der";
  case NecklaceClass::nilpotent:
    return "fit";
  case NecklaceClass::solvable:
    return "solv";
  }
  return "?";
}

} // namespace

std::vector<std::uint64_t> Decomposition::quotient_orders() const
{
  std::vector<std::uint64_t> res;
  for (auto const &q : quotient_info)
    res.push_back(q.order);
  return res;
}

std::uint64_t cx(GroupPtr const &g)
{
  if (g->is_trivial())
    return 0;
  return memoized("cx", g, [&] {
    return 1 + min_over_levels(
                   g, [](Subgroup const &n) { return quotient_is_span_of_gems(n); },
                   [](Subgroup const &n) { return cx(as_group(n)); }, true);
  });
}

Witnessed cx_with_witness(GroupPtr const &g)
{
  return {cx(g), decomposition_of(cx_chain(g))};
}

std::vector<Decomposition> enumerate_minimal_series(GroupPtr const &g)
{
  auto chains = all_cx_chains(g);
  std::sort(chains.begin(), chains.end(),
            [](auto const &a, auto const &b) {
              return std::lexicographical_compare(a.begin(), a.end(),
                                                  b.begin(), b.end());
            });
  std::vector<Decomposition> res;
  for (auto &c : chains)
    res.push_back(decomposition_of(std::move(c)));
  return res;
}

std::uint64_t sx(GroupPtr const &g)
{
  return sx_with_witness(g).value;
}

Witnessed sx_with_witness(GroupPtr const &g)
{
  std::vector<Subgroup> series{trivial_subgroup(g)};
  while (!series.back().is_whole())
    series.push_back(socle_above(series.back()));
  Witnessed res;
  res.value = series.size() - 1;
  res.witness = decomposition_of(std::move(series));
  return res;
}

std::uint64_t jh_length(GroupPtr const &g) { return jh_factors(g).total(); }

std::uint64_t chief_length(GroupPtr const &g)
{
  auto lat = normal_subgroups(g);
  std::size_t i = 0;
  std::uint64_t len = 0;
  while (i + 1 < lat.members.size()) {
    i = lat.covers(i).front();
    ++len;
  }
  return len;
}

std::uint64_t necklace_length(GroupPtr const &g, NecklaceClass c)
{
  if (g->is_trivial())
    return 0;
  return memoized(tag_of(c), g, [&] {
    return 1 + min_over_levels(
                   g,
                   [c](Subgroup const &n) {
                     return quotient_is_necklace(n, c);
                   },
                   [c](Subgroup const &n) {
                     return necklace_length(as_group(n), c);
                   },
                   true);
  });
}

std::uint64_t der(GroupPtr const &g)
{
  return necklace_length(g, NecklaceClass::abelian);
}

std::uint64_t fit(GroupPtr const &g)
{
  return necklace_length(g, NecklaceClass::nilpotent);
}

std::uint64_t solv(GroupPtr const &g)
{
  return necklace_length(g, NecklaceClass::solvable);
}

std::uint64_t fitting_height(GroupPtr const &g)
{
  if (!is_solvable(g))
    throw PreconditionError("fitting_height needs a solvable group");
  std::uint64_t height = 0;
  GroupPtr cur = g;
  while (!cur->is_trivial()) {
    cur = quotient_group(fitting_subgroup(cur));
    ++height;
  }
  return height;
}

std::uint64_t derived_length(GroupPtr const &g)
{
  auto series = derived_series(g);
  if (!series.back().is_trivial())
    throw PreconditionError("derived_length needs a solvable group");
  return series.size() - 1;
}

std::uint64_t log_p(GroupPtr const &g, std::uint64_t p)
{
  return max_prime_power_order(g, p);
}

SimpleClassSet::SimpleClassSet(std::set<SimpleDescriptor> members)
    : members_(std::move(members))
{}

SimpleClassSet SimpleClassSet::all_snags()
{
  SimpleClassSet s;
  s.kind_ = Kind::all_snags;
  return s;
}

SimpleClassSet SimpleClassSet::all_abelian()
{
  SimpleClassSet s;
  s.kind_ = Kind::all_abelian;
  return s;
}

SimpleClassSet SimpleClassSet::parse(std::string_view text)
{
  if (text == "snag")
    return all_snags();
  if (text == "abelian")
    return all_abelian();
  std::set<SimpleDescriptor> members;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ')
      item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ')
      item.remove_suffix(1);
    if (!item.empty())
      members.insert(SimpleDescriptor::parse(item));
    if (comma == std::string_view::npos)
      break;
    text.remove_prefix(comma + 1);
  }
  return SimpleClassSet(std::move(members));
}

bool SimpleClassSet::contains(SimpleDescriptor const &d) const
{
  switch (kind_) {
  case Kind::finite:
    return members_.count(d) > 0;
  case Kind::all_snags:
    return !d.abelian;
  case Kind::all_abelian:
    return d.abelian;
  }
  return false;
}

bool SimpleClassSet::meets(FactorMultiset const &f) const
{
  return std::any_of(f.entries.begin(), f.entries.end(),
                     [&](auto const &e) { return contains(e.first); });
}

std::string SimpleClassSet::str() const
{
  switch (kind_) {
  case Kind::all_snags:
    return "snag";
  case Kind::all_abelian:
    return "abelian";
  case Kind::finite:
    break;
  }
  std::string res;
  for (auto const &d : members_) {
    if (!res.empty())
      res += ',';
    res += d.str();
  }
  return res;
}

std::uint64_t mu_S(GroupPtr const &g, SimpleClassSet const &s)
{
  if (g->is_trivial())
    return 0;
  return memoized("mu:" + s.str(), g, [&] {
    auto lat = normal_subgroups(g);
    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t i = 0; i + 1 < lat.members.size() && best > 0; ++i) {
      auto const &n = lat.members[i];
      if (!quotient_is_span_of_gems(n))
        continue;
      std::uint64_t level = s.meets(quotient_gem_factors(n)) ? 1 : 0;
      if (level >= best)
        continue;
      best = std::min(best, level + mu_S(as_group(n), s));
    }
    return best;
  });
}

std::uint64_t chi_S(GroupPtr const &g, SimpleClassSet const &s)
{
  return s.meets(jh_factors(g)) ? 1 : 0;
}

std::uint64_t sur_S(GroupPtr const &g, SimpleDescriptor const &s)
{
  for (auto const &m : maximal_normal_subgroups(g)) {
    std::uint64_t index = g->order() / m.order();
    if (SimpleDescriptor{index, is_prime(index)} == s)
      return 1;
  }
  return 0;
}

Variety parse_variety(std::string_view text)
{
  if (text == "nilpotent" || text == "Nil")
    return Variety::nilpotent;
  if (text == "solvable" || text == "Solv")
    return Variety::solvable;
  if (text == "span_of_gems" || text == "gems")
    return Variety::span_of_gems;
  if (text == "abelian" || text == "Ab")
    return Variety::abelian;
  throw InputError("unknown class '" + std::string(text) +
                   "' (nilpotent, solvable, span_of_gems, abelian)");
}

std::string to_string(Variety v)
{
  switch (v) {
  case Variety::nilpotent:
    return "nilpotent";
  case Variety::solvable:
    return "solvable";
  case Variety::span_of_gems:
    return "span_of_gems";
  case Variety::abelian:
    return "abelian";
  }
  return "?";
}

std::uint64_t sub_V(GroupPtr const &g, Variety v)
{
  if (g->is_trivial())
    return 0;
  switch (v) {
  case Variety::nilpotent:
    return is_nilpotent(g);
  case Variety::solvable:
    return is_solvable(g);
  case Variety::span_of_gems:
    return is_span_of_gems(g);
  case Variety::abelian:
    return is_abelian(g);
  }
  return 0;
}

void check_bound_chain(MeasureReport const &r)
{
  std::uint64_t chain[] = {r.solv, r.fit, r.der, r.cx, r.sx, r.chief, r.jh};
  char const *names[] = {"solv", "fit", "der", "cx", "sx", "chief", "jh"};
  for (std::size_t i = 0; i + 1 < std::size(chain); ++i)
    if (chain[i] > chain[i + 1])
      throw AssertionFailure("bound chain violated for " + r.name + ": " +
                             names[i] + " = " + std::to_string(chain[i]) +
                             " > " + names[i + 1] + " = " +
                             std::to_string(chain[i + 1]));
}

MeasureReport measure_report(GroupPtr const &g, std::string name)
{
  MeasureReport r;
  r.name = std::move(name);
  r.order = g->order();
  r.degree = g->degree();
  auto c = cx_with_witness(g);
  auto s = sx_with_witness(g);
  r.cx = c.value;
  r.cx_witness = std::move(c.witness);
  r.sx = s.value;
  r.sx_witness = std::move(s.witness);
  r.jh = jh_length(g);
  r.chief = chief_length(g);
  r.der = der(g);
  r.fit = fit(g);
  r.solv = solv(g);
  if (is_solvable(g)) {
    r.fitting_height = fitting_height(g);
    r.derived_length = derived_length(g);
  }
  for (std::uint64_t p : prime_divisors(g->order()))
    r.log_p[p] = log_p(g, p);
  check_bound_chain(r);
  return r;
}

void clear_measure_cache() { memo().clear(); }

} // namespace grpcx
