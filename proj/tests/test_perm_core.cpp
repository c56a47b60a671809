#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "grpcx/error.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace grpcx;

TEST_SUITE("perm_core")
{
  TEST_CASE("composition acts on the right")
  {
    auto p = cyc("(1,2)", 3);
    auto q = cyc("(2,3)", 3);
    CHECK(compose(p, q) == cyc("(1,3,2)", 3));
    CHECK(compose(Permutation::identity(3), p) == p);
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK_THROWS_AS(compose(p, cyc("(1,2)", 4)), Error);
  }

  TEST_CASE("orders from generators")
  {
    CHECK(make_group(4, {"(1,2)", "(3,4)", "(1,3)(2,4)"})->order() == 8);
    CHECK(g64()->order() == 64);
    CHECK(make_group(1, {"()"})->order() == 1);
    CHECK(make_group(3, {"(1,2)", "(1,2,3)"})->elements().size() == 6);
    CHECK(g64()->elements().size() == 64);
    CHECK_THROWS_AS(symmetric(9, Limits{1000, 100, 100, 100}), CapExceeded);
  }

  TEST_CASE("element list agrees with a closure oracle")
  {
    for (auto const *name : {"S4", "D4", "Q8", "Z2wrZ3", "SL2_5", "H32"}) {
      auto g = builtin_group(name);
      auto brute = oracle::elements_of(g);
      CHECK(g->order() == brute.size());
      CHECK(std::equal(g->elements().begin(), g->elements().end(),
                       brute.begin(), brute.end()));
      CHECK(g->element(PermGroup::identity_index()).is_identity());
      for (ElementIndex i = 0; i < g->order(); i += 7)
        for (ElementIndex j = 0; j < g->order(); j += 5) {
          CHECK(g->element(g->mul(i, j)) == g->element(i) * g->element(j));
          CHECK(g->mul(i, g->inv(i)) == PermGroup::identity_index());
        }
    }
  }

  TEST_CASE("conjugacy classes")
  {
    auto sizes = [](GroupPtr const &g) {
      std::vector<std::size_t> res;
      for (auto const &c : g->conjugacy_classes())
        res.push_back(c.size());
      return res;
    };
    auto s3 = sizes(symmetric(3));
    std::sort(s3.begin(), s3.end());
    CHECK(s3 == std::vector<std::size_t>{1, 2, 3});
    CHECK(sizes(cyclic(12)).size() == 12);
    auto s4 = symmetric(4);
    auto ours = sizes(s4);
    auto brute = oracle::class_sizes(oracle::elements_of(s4));
    std::sort(ours.begin(), ours.end());
    std::sort(brute.begin(), brute.end());
    CHECK(ours == brute);
    CHECK(ours == std::vector<std::size_t>{1, 3, 6, 6, 8});
    for (auto const *name : {"S5", "A5xZ2", "Z2wrZ4", "SL2_5", "Q8"}) {
      auto g = builtin_group(name);
      auto cs = sizes(g);
      CHECK(std::accumulate(cs.begin(), cs.end(), std::size_t{0}) ==
            g->order());
      for (auto s : cs)
        CHECK(g->order() % s == 0);
    }
  }

  TEST_CASE("normal closure")
  {
    auto s3 = symmetric(3);
    CHECK(normal_closure(s3, std::vector{cyc("(1,2,3)", 3)}).order() == 3);
    auto a4 = alternating(4);
    auto v = normal_closure(a4, std::vector{cyc("(1,2)(3,4)", 4)});
    CHECK(v.order() == 4);
    CHECK(is_normal(v));
    auto a5 = alternating(5);
    CHECK(normal_closure(a5, std::vector{cyc("(2,4,5)", 5)}).is_whole());
  }

  TEST_CASE("centralizers and centers")
  {
    auto z = cyclic(6);
    CHECK(centralizer(z, whole_group(z)).is_whole());
    auto p = direct_product_parts(alternating(5), cyclic(2));
    auto a5 = subgroup_of(p.group, {"(1,2,3)", "(3,4,5)"});
    auto c = centralizer(p.group, a5);
    CHECK(c.order() == 2);
    CHECK(c.contains(cyc("(6,7)", 7)));
    auto s4 = symmetric(4);
    auto v4 = subgroup_of(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
    auto cv = centralizer(s4, v4);
    CHECK(oracle::to_set(cv) ==
          oracle::centralizer(oracle::to_set(v4), oracle::elements_of(s4)));
    CHECK(cv == v4);
    auto zg = center(g64());
    CHECK(zg.order() == 2);
    CHECK(zg.contains(cyc("(1,2)(3,4)(5,6)(7,8)", 8)));
    CHECK(center(symmetric(3)).is_trivial());
    CHECK(center(cyclic(9)).is_whole());
  }

  TEST_CASE("commutator subgroups and series")
  {
    auto ab = elementary_abelian(2, 3);
    CHECK(commutator_subgroup(ab, whole_group(ab), whole_group(ab)).is_trivial());
    auto s4 = symmetric(4);
    auto d = commutator_subgroup(s4, whole_group(s4), whole_group(s4));
    auto brute = oracle::commutator(oracle::elements_of(s4),
                                    oracle::elements_of(s4));
    CHECK(oracle::to_set(d) == brute);
    CHECK(d.order() == 12);
    auto a5 = alternating(5);
    CHECK(commutator_subgroup(a5, whole_group(a5), whole_group(a5)).is_whole());

    auto ds = derived_series(s4);
    REQUIRE(ds.size() == 4);
    CHECK(ds[1].order() == 12);
    CHECK(ds[2].order() == 4);
    CHECK(ds[3].is_trivial());
    CHECK(derived_series(cyclic(5)).size() == 2);
    CHECK(derived_series(a5).size() == 1);

    CHECK(lower_central_series(cyclic(4)).size() == 2);
    auto d4 = lower_central_series(dihedral(4));
    CHECK(d4.back().is_trivial());
    CHECK(d4.size() == 3);
    auto s3 = lower_central_series(symmetric(3));
    CHECK(s3.back().order() == 3);
  }

  TEST_CASE("series terms are descending and normal")
  {
    for (auto const *name : {"S4", "Z2wrZ4", "H32", "SL2_5", "Z3wrZ2"}) {
      auto g = builtin_group(name);
      for (auto const &series : {derived_series(g), lower_central_series(g)})
        for (std::size_t i = 0; i < series.size(); ++i) {
          CHECK(is_normal(series[i]));
          if (i > 0)
            CHECK(series[i].subset_of(series[i - 1]));
        }
    }
  }

  TEST_CASE("element orders and log_p")
  {
    CHECK(element_order(cyc("(1,2,3)(4,5)", 5)) == 6);
    CHECK(max_prime_power_order(cyclic(8), 2) == 3);
    CHECK(max_prime_power_order(symmetric(4), 3) == 1);
    CHECK(max_prime_power_order(symmetric(4), 2) == 2);
    CHECK(max_prime_power_order(symmetric(4), 5) == 0);
    auto g = g64();
    unsigned brute = 0;
    for (auto const &p : oracle::elements_of(g)) {
      unsigned e = 0;
      for (auto k = p.order(); k % 2 == 0; k /= 2)
        ++e;
      brute = std::max(brute, e);
    }
    CHECK(brute == 3);
    CHECK(max_prime_power_order(g, 2) == brute);
    CHECK_THROWS_AS(max_prime_power_order(g, 4), InputError);
  }

  TEST_CASE("Lagrange over lattices")
  {
    for (auto const *name : {"S4", "Z2^4", "Z2wrZ4", "SL2_5"}) {
      auto g = builtin_group(name);
      auto cs = g->conjugacy_classes();
      for (auto const &c : cs) {
        auto n = normal_closure(g, std::span<ElementIndex const>(c));
        CHECK(g->order() % n.order() == 0);
      }
    }
  }

  TEST_CASE("canonical keys follow element sets")
  {
    auto a = make_group(4, {"(1,2)", "(1,2,3,4)"});
    auto b = make_group(4, {"(1,2,3,4)", "(2,4)", "(1,2)"});
    CHECK(a->key() == b->key());
    CHECK(a->key() != alternating(4)->key());
    auto s4 = symmetric(4);
    auto v1 = subgroup_of(s4, {"(1,2)(3,4)", "(1,3)(2,4)"});
    auto v2 = subgroup_of(s4, {"(1,4)(2,3)", "(1,2)(3,4)"});
    CHECK(v1 == v2);
    CHECK(v1.key() == v2.key());
    CHECK(as_group(v1) == as_group(v2));
  }
}
