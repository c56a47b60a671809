#include "grpcx/builders.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "grpcx/error.hpp"

namespace grpcx
{

Permutation parse_cycles(std::string_view text, std::size_t degree)
{
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };

  skip_space();
  if (i == text.size())
    throw InputError("empty cycle string; use \"()\" for the identity");

  while (i < text.size()) {
    if (text[i] != '(')
      throw InputError("expected '(' at offset " + std::to_string(i) +
                       " in \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    bool need_point = false;
    for (;;) {
      skip_space();
      if (i == text.size())
        throw InputError("unterminated cycle in \"" + std::string(text) + "\"");
      char c = text[i];
      if (c == ')') {
        if (need_point)
          throw InputError("dangling ',' in \"" + std::string(text) + "\"");
        ++i;
        break;
      }
      if (c == ',') {
        if (cycle.empty() || need_point)
          throw InputError("misplaced ',' in \"" + std::string(text) + "\"");
        need_point = true;
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c)))
        throw InputError(std::string("unexpected character '") + c +
                         "' in \"" + std::string(text) + "\"");
      std::size_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::size_t>(text[i] - '0');
        if (value > degree)
          break;
        ++i;
      }
      if (value == 0 || value > degree)
        throw InputError("point outside 1.." + std::to_string(degree) +
                         " in \"" + std::string(text) + "\"");
      cycle.push_back(static_cast<Point>(value));
      need_point = false;
    }
    if (!cycle.empty())
      cycles.push_back(std::move(cycle));
    skip_space();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::string format_cycles(Permutation const &p)
{
  auto cycles = p.cycles();
  if (cycles.empty())
    return "()";
  std::string res;
  for (auto const &c : cycles) {
    res += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        res += ',';
      res += std::to_string(c[k] + 1);
    }
    res += ')';
  }
  return res;
}

namespace
{

Permutation cycle_on(std::size_t degree, Point first, std::size_t len)
{
  std::vector<Point> imgs(degree);
  for (Point i = 0; i < degree; ++i)
    imgs[i] = i;
  for (std::size_t k = 0; k < len; ++k)
    imgs[first + k] = static_cast<Point>(first + (k + 1) % len);
  return Permutation(std::move(imgs));
}

Permutation shifted(Permutation const &p, std::size_t degree, Point offset)
{
  std::vector<Point> imgs(degree);
  for (Point i = 0; i < degree; ++i)
    imgs[i] = i;
  for (Point i = 0; i < p.degree(); ++i)
    imgs[offset + i] = offset + p[i];
  return Permutation(std::move(imgs));
}

} // namespace

GroupPtr cyclic(std::size_t n, Limits const &limits)
{
  if (n < 1)
    throw InputError("cyclic group needs n >= 1");
  return group_from_generators(n, {cycle_on(n, 0, n)}, limits);
}

GroupPtr dihedral(std::size_t n, Limits const &limits)
{
  if (n < 2)
    throw InputError("dihedral group needs n >= 2");
  if (n == 2)
    return group_from_generators(
      4, {parse_cycles("(1,2)", 4), parse_cycles("(3,4)", 4)}, limits);
  std::vector<Point> refl(n);
  for (Point i = 0; i < n; ++i)
    refl[i] = static_cast<Point>(n - 1 - i);
  return group_from_generators(
    n, {cycle_on(n, 0, n), Permutation(std::move(refl))}, limits);
}

GroupPtr symmetric(std::size_t n, Limits const &limits)
{
  if (n < 1)
    throw InputError("symmetric group needs n >= 1");
  if (n == 1)
    return group_from_generators(1, {}, limits);
  return group_from_generators(n, {cycle_on(n, 0, 2), cycle_on(n, 0, n)},
                               limits);
}

GroupPtr alternating(std::size_t n, Limits const &limits)
{
  if (n < 3)
    throw InputError("alternating group needs n >= 3");
  std::vector<Permutation> gens;
  for (Point k = 2; k < n; ++k)
    gens.push_back(Permutation::from_cycles(n, {{1, 2, k + 1}}));
  return group_from_generators(n, std::move(gens), limits);
}

GroupPtr elementary_abelian(std::size_t p, std::size_t k, Limits const &limits)
{
  if (!is_prime(p) || k < 1)
    throw InputError("elementary abelian group needs p prime and k >= 1");
  std::vector<Permutation> gens;
  for (std::size_t b = 0; b < k; ++b)
    gens.push_back(cycle_on(p * k, static_cast<Point>(b * p), p));
  return group_from_generators(p * k, std::move(gens), limits);
}

DirectProduct direct_product_parts(GroupPtr const &g, GroupPtr const &h)
{
  std::size_t degree = g->degree() + h->degree();
  Limits limits = g->limits();
  if (g->order() > limits.max_order / h->order())
    throw CapExceeded("direct product exceeds order cap");
  std::vector<Permutation> gens;
  for (auto const &x : g->generators())
    gens.push_back(shifted(x, degree, 0));
  for (auto const &y : h->generators())
    gens.push_back(shifted(y, degree, static_cast<Point>(g->degree())));
  auto group = group_from_generators(degree, std::move(gens), limits);
  return {group,
          {0, g->degree()},
          {static_cast<Point>(g->degree()), h->degree()}};
}

GroupPtr direct_product(GroupPtr const &g, GroupPtr const &h)
{
  return direct_product_parts(g, h).group;
}

GroupPtr project(GroupPtr const &product, PointRange range)
{
  std::set<Permutation> images;
  for (auto const &x : product->elements())
    images.insert(x.restricted(range.first, range.count));
  std::vector<Permutation> gens;
  for (auto const &x : product->generators())
    gens.push_back(x.restricted(range.first, range.count));
  return intern(PermGroup::from_elements(
    range.count, std::move(gens),
    std::vector<Permutation>(images.begin(), images.end()),
    product->limits()));
}

WreathProduct wreath_product_parts(GroupPtr const &n, GroupPtr const &q)
{
  Limits limits = n->limits();
  std::size_t m = n->degree();
  std::size_t k = q->degree();
  std::uint64_t order = q->order();
  for (std::size_t b = 0; b < k; ++b) {
    if (order > limits.max_order / n->order())
      throw CapExceeded("wreath product exceeds order cap");
    order *= n->order();
  }
  if (order > limits.max_order)
    throw CapExceeded("wreath product exceeds order cap");

  std::size_t degree = m * k;
  WreathProduct res;
  for (std::size_t b = 0; b < k; ++b)
    for (auto const &x : n->generators())
      if (!x.is_identity())
        res.base_generators.push_back(
          shifted(x, degree, static_cast<Point>(b * m)));
  for (auto const &y : q->generators()) {
    if (y.is_identity())
      continue;
    std::vector<Point> imgs(degree);
    for (std::size_t b = 0; b < k; ++b)
      for (std::size_t i = 0; i < m; ++i)
        imgs[b * m + i] = static_cast<Point>(y[static_cast<Point>(b)] * m + i);
    res.top_generators.emplace_back(std::move(imgs));
  }
  std::vector<Permutation> gens = res.base_generators;
  gens.insert(gens.end(), res.top_generators.begin(), res.top_generators.end());
  res.group = group_from_generators(degree, std::move(gens), limits);
  return res;
}

GroupPtr wreath_product(GroupPtr const &n, GroupPtr const &q)
{
  return wreath_product_parts(n, q).group;
}

Subgroup Quotient::preimage(Subgroup const &s) const
{
  auto const &g = kernel.ambient();
  ElementSet res = g->empty_set();
  for (ElementIndex i = 0; i < g->order(); ++i)
    if (s.contains(image[i]))
      res.insert(i);
  return Subgroup(g, std::move(res));
}

Subgroup Quotient::image_of(Subgroup const &s) const
{
  ElementSet res = group->empty_set();
  s.members().for_each([&](ElementIndex i) { res.insert(image[i]); });
  return Subgroup(group, std::move(res));
}

Quotient quotient(Subgroup const &n)
{
  auto const &g = n.ambient();
  if (!is_normal(n))
    throw PreconditionError("quotient by a subgroup that is not normal");
  std::size_t index = g->order() / n.order();
  if (index > g->limits().max_degree)
    throw CapExceeded("quotient degree " + std::to_string(index) +
                      " exceeds degree cap");

  constexpr ElementIndex unset = ~ElementIndex{0};
  std::vector<ElementIndex> coset_of(g->order(), unset);
  std::vector<ElementIndex> reps;
  auto kernel = n.members().indices();
  for (ElementIndex x = 0; x < g->order(); ++x) {
    if (coset_of[x] != unset)
      continue;
    auto c = static_cast<ElementIndex>(reps.size());
    reps.push_back(x);
    for (ElementIndex k : kernel)
      coset_of[g->mul(k, x)] = c;
  }

  auto action = [&](ElementIndex x) {
    std::vector<Point> imgs(index);
    for (std::size_t c = 0; c < index; ++c)
      imgs[c] = coset_of[g->mul(reps[c], x)];
    return Permutation(std::move(imgs));
  };

  std::vector<Permutation> perms;
  perms.reserve(index);
  for (ElementIndex r : reps)
    perms.push_back(action(r));
  std::vector<Permutation> sorted = perms;
  std::sort(sorted.begin(), sorted.end());

  std::vector<Permutation> gens;
  for (ElementIndex x : g->generator_indices()) {
    auto p = perms[coset_of[x]];
    if (!p.is_identity() && std::find(gens.begin(), gens.end(), p) == gens.end())
      gens.push_back(std::move(p));
  }

  Quotient res;
  res.group = intern(PermGroup::from_elements(index, std::move(gens),
                                              std::move(sorted), g->limits()));
  res.kernel = n;
  std::vector<ElementIndex> coset_image(index);
  for (std::size_t c = 0; c < index; ++c)
    coset_image[c] = res.group->index_of(perms[c]);
  res.image.resize(g->order());
  for (ElementIndex x = 0; x < g->order(); ++x)
    res.image[x] = coset_image[coset_of[x]];
  return res;
}

GroupPtr quotient_group(Subgroup const &n) { return quotient(n).group; }

GroupPtr special_linear_2(std::size_t p, Limits const &limits)
{
  if (!is_prime(p))
    throw InputError("SL(2, p) needs p prime");
  std::size_t degree = p * p - 1;
  if (degree > limits.max_degree)
    throw CapExceeded("SL(2, p) degree exceeds cap");

  // Nonzero vector (a, b) is point a*p + b - 1.
  auto act = [&](std::size_t m00, std::size_t m01, std::size_t m10,
                 std::size_t m11) {
    std::vector<Point> imgs(degree);
    for (std::size_t a = 0; a < p; ++a) {
      for (std::size_t b = 0; b < p; ++b) {
        if (a == 0 && b == 0)
          continue;
        std::size_t x = (a * m00 + b * m10) % p;
        std::size_t y = (a * m01 + b * m11) % p;
        imgs[a * p + b - 1] = static_cast<Point>(x * p + y - 1);
      }
    }
    return Permutation(std::move(imgs));
  };
  return group_from_generators(degree, {act(1, 1, 0, 1), act(1, 0, 1, 1)},
                               limits);
}

GroupPtr embed_in_alternating(GroupPtr const &g)
{
  std::size_t n = g->order();
  Limits limits = g->limits();
  if (2 * n > limits.max_degree)
    throw CapExceeded("embedding degree exceeds cap");
  std::size_t degree = std::max<std::size_t>(2 * n, 5);
  std::vector<Permutation> gens;
  for (ElementIndex s : g->generator_indices()) {
    std::vector<Point> imgs(degree);
    for (Point i = 0; i < degree; ++i)
      imgs[i] = i;
    for (ElementIndex x = 0; x < n; ++x) {
      Point y = g->mul(x, s);
      imgs[x] = y;
      imgs[n + x] = static_cast<Point>(n + y);
    }
    gens.emplace_back(std::move(imgs));
  }
  return group_from_generators(degree, std::move(gens), limits);
}

} // namespace grpcx
