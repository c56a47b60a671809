#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "grpcx/classify.hpp"

namespace grpcx
{

/// Per-level record of a series: |V_{i+1}/V_i| and its simple factors.
struct QuotientInfo
{
  std::uint64_t order = 1;
  FactorMultiset factors;
};

/// Subnormal series 1 = V_0 < V_1 < ... < V_l = G, all subgroups of G.
struct Decomposition
{
  std::vector<Subgroup> series;
  std::vector<QuotientInfo> quotient_info;

  std::size_t length() const { return quotient_info.size(); }
  std::vector<std::uint64_t> quotient_orders() const;
};

struct Witnessed
{
  std::uint64_t value = 0;
  Decomposition witness;
};

// Least length of a subnormal series with span-of-gems quotients.
std::uint64_t cx(GroupPtr const &g);
Witnessed cx_with_witness(GroupPtr const &g);
// Every series attaining cx(G), as distinct chains of subgroups of G, sorted.
std::vector<Decomposition> enumerate_minimal_series(GroupPtr const &g);

// Socle length; the witness is the socle series pulled back to G.
std::uint64_t sx(GroupPtr const &g);
Witnessed sx_with_witness(GroupPtr const &g);

std::uint64_t jh_length(GroupPtr const &g);
std::uint64_t chief_length(GroupPtr const &g);

// Least length of a subnormal series whose quotients are necklaces of the
// given class.
std::uint64_t necklace_length(GroupPtr const &g, NecklaceClass c);
std::uint64_t der(GroupPtr const &g);
std::uint64_t fit(GroupPtr const &g);
std::uint64_t solv(GroupPtr const &g);

// Both throw PreconditionError unless g is solvable.
std::uint64_t fitting_height(GroupPtr const &g);
std::uint64_t derived_length(GroupPtr const &g);

std::uint64_t log_p(GroupPtr const &g, std::uint64_t p);

/// A class of simple groups: a finite descriptor set or one of the two
/// infinite classes (all nonabelian simple groups, all abelian simples).
class SimpleClassSet
{
public:
  enum class Kind
  {
    finite,
    all_snags,
    all_abelian
  };

  SimpleClassSet() = default;
  explicit SimpleClassSet(std::set<SimpleDescriptor> members);
  static SimpleClassSet all_snags();
  static SimpleClassSet all_abelian();
  // "snag", "abelian", "" (empty set) or a list like "2a,60n".
  static SimpleClassSet parse(std::string_view text);

  bool contains(SimpleDescriptor const &d) const;
  bool meets(FactorMultiset const &f) const;
  std::string str() const;

private:
  Kind kind_ = Kind::finite;
  std::set<SimpleDescriptor> members_;
};

std::uint64_t mu_S(GroupPtr const &g, SimpleClassSet const &s);
std::uint64_t chi_S(GroupPtr const &g, SimpleClassSet const &s);
std::uint64_t sur_S(GroupPtr const &g, SimpleDescriptor const &s);

enum class Variety
{
  nilpotent,
  solvable,
  span_of_gems,
  abelian
};

Variety parse_variety(std::string_view text);
std::string to_string(Variety v);
std::uint64_t sub_V(GroupPtr const &g, Variety v);

struct MeasureReport
{
  std::string name;
  std::uint64_t order = 1;
  std::size_t degree = 1;
  std::uint64_t cx = 0;
  std::uint64_t sx = 0;
  std::uint64_t jh = 0;
  std::uint64_t chief = 0;
  std::uint64_t der = 0;
  std::uint64_t fit = 0;
  std::uint64_t solv = 0;
  std::optional<std::uint64_t> fitting_height;
  std::optional<std::uint64_t> derived_length;
  std::map<std::uint64_t, std::uint64_t> log_p;
  Decomposition cx_witness;
  Decomposition sx_witness;
};

// Throws AssertionFailure if Solv <= Fit <= Der <= cx <= sx <= chief <= JH
// is violated.
MeasureReport measure_report(GroupPtr const &g, std::string name);
void check_bound_chain(MeasureReport const &r);

// Drops all memoized measure values.
void clear_measure_cache();

} // namespace grpcx
