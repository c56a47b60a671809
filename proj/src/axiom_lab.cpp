#include "grpcx/axiom_lab.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "grpcx/error.hpp"
#include "grpcx/group_spec.hpp"
#include "grpcx/measures.hpp"

namespace grpcx
{

namespace
{

constexpr std::size_t max_witnesses = 5;

std::string subgroup_text(Subgroup const &s)
{
  std::string res = "<";
  for (auto const &p : s.generator_perms()) {
    if (res.size() > 1)
      res += ", ";
    res += format_cycles(p);
  }
  return res + "> of order " + std::to_string(s.order());
}

GroupPtr rebuilt(GroupPtr const &g)
{
  return PermGroup::create(g->degree(), g->generators(), g->limits());
}

struct Tally
{
  AxiomVerdict &v;

  void record(bool ok, AxiomWitness w)
  {
    ++v.cases;
    if (ok)
      return;
    v.holds = false;
    ++v.failures;
    if (v.witnesses.size() < max_witnesses)
      v.witnesses.push_back(std::move(w));
  }
};

std::vector<Subgroup> two_generated_subgroups(GroupPtr const &g)
{
  std::vector<Subgroup> res;
  std::unordered_set<ElementSet, ElementSetHash> seen;
  for (auto const &cls : g->conjugacy_classes()) {
    for (ElementIndex b = 0; b < g->order(); ++b) {
      ElementIndex gens[] = {cls.front(), b};
      auto h = generated_subgroup(g, gens);
      if (seen.insert(h.members()).second)
        res.push_back(std::move(h));
    }
  }
  std::sort(res.begin(), res.end());
  return res;
}

} // namespace

std::string to_string(Axiom a)
{
  switch (a) {
  case Axiom::product:
    return "product";
  case Axiom::extension:
    return "extension";
  case Axiom::initial:
    return "initial";
  case Axiom::quotient:
    return "quotient";
  case Axiom::constructability:
    return "constructability";
  case Axiom::normal:
    return "normal";
  case Axiom::subgroup:
    return "subgroup";
  }
  return "?";
}

Axiom parse_axiom(std::string const &text)
{
  for (Axiom a : {Axiom::product, Axiom::extension, Axiom::initial,
                  Axiom::quotient, Axiom::constructability, Axiom::normal,
                  Axiom::subgroup})
    if (to_string(a) == text)
      return a;
  throw InputError("unknown axiom '" + text + "'");
}

std::vector<Axiom> const &core_axioms()
{
  static std::vector<Axiom> const axioms{
      Axiom::product,  Axiom::extension,        Axiom::initial,
      Axiom::quotient, Axiom::constructability, Axiom::normal};
  return axioms;
}

NamedMeasure measure_by_name(std::string const &name)
{
  auto arg_of = [&](std::string const &prefix) -> std::optional<std::string> {
    if (name.rfind(prefix, 0) == 0)
      return name.substr(prefix.size());
    return std::nullopt;
  };
  if (name == "cx")
    return {name, [](GroupPtr const &g) { return cx(g); }, {}};
  if (name == "sx")
    return {name, [](GroupPtr const &g) { return sx(g); }, {Axiom::extension}};
  if (name == "jh")
    return {name, [](GroupPtr const &g) { return jh_length(g); },
            {Axiom::product}};
  if (name == "chief")
    return {name, [](GroupPtr const &g) { return chief_length(g); }, {}};
  if (name == "der")
    return {name, [](GroupPtr const &g) { return der(g); }, {}};
  if (name == "fit")
    return {name, [](GroupPtr const &g) { return fit(g); }, {}};
  if (name == "solv")
    return {name, [](GroupPtr const &g) { return solv(g); }, {}};
  if (name == "const1")
    return {name, [](GroupPtr const &) -> std::uint64_t { return 1; },
            {Axiom::initial}};
  if (name == "const2")
    return {name,
            [](GroupPtr const &g) -> std::uint64_t {
              return g->is_trivial() ? 0 : 2;
            },
            {Axiom::constructability}};
  if (auto p = arg_of("logp:")) {
    std::uint64_t prime = 0;
    try {
      prime = std::stoull(*p);
    } catch (std::exception const &) {
      throw InputError("bad prime in measure '" + name + "'");
    }
    if (!is_prime(prime))
      throw InputError("logp needs a prime, got " + *p);
    return {name, [prime](GroupPtr const &g) { return log_p(g, prime); }, {}};
  }
  if (auto s = arg_of("mu_S:")) {
    auto set = SimpleClassSet::parse(*s);
    return {name, [set](GroupPtr const &g) { return mu_S(g, set); }, {}};
  }
  if (auto s = arg_of("chi_S:")) {
    auto set = SimpleClassSet::parse(*s);
    return {name, [set](GroupPtr const &g) { return chi_S(g, set); }, {}};
  }
  if (auto s = arg_of("sur_S:")) {
    auto d = SimpleDescriptor::parse(*s);
    return {name, [d](GroupPtr const &g) { return sur_S(g, d); },
            {Axiom::normal}};
  }
  if (auto s = arg_of("sub_V:")) {
    auto v = parse_variety(*s);
    return {name, [v](GroupPtr const &g) { return sub_V(g, v); },
            {Axiom::quotient}};
  }
  throw InputError("unknown measure '" + name + "'");
}

void Corpus::add_group(std::string name, GroupPtr g)
{
  CorpusEntry e{std::move(name), g, {}};
  for (auto const &n : normal_subgroups(g).members) {
    GroupPtr q = n.is_trivial() ? g : quotient_group(n);
    e.sections.push_back({n, as_group(n), q});
  }
  groups.push_back(std::move(e));
}

GroupPtr const &Corpus::get(std::string const &name) const
{
  for (auto const &e : groups)
    if (e.name == name)
      return e.group;
  throw InputError("no corpus group named '" + name + "'");
}

void Corpus::add_product(std::string left, std::string right)
{
  auto l = builtin_group(left);
  auto r = builtin_group(right);
  products.push_back({left + "x" + right, l, r, direct_product(l, r)});
}

Corpus default_corpus()
{
  Corpus c;
  c.add_group("trivial", cyclic(1));
  for (std::size_t n = 2; n <= 16; ++n)
    c.add_group("Z" + std::to_string(n), cyclic(n));
  for (auto const *name :
       {"V4", "Z2xZ3", "Z2^3", "Z2^4", "D4", "Q8", "S3", "S4", "S5", "A4",
        "A5", "A5xZ2", "Z2xS3", "Z2wrZ2", "Z3wrZ2", "Z2wrZ3", "SL2_5", "H32"})
    c.add_group(name, builtin_group(name));
  // The five-generator presentation of Z2 wr Z4 coincides with the wreath
  // builder's output, so one entry serves both names.
  c.add_group("Z2wrZ4", g64());
  for (auto const &[l, r] :
       std::vector<std::pair<char const *, char const *>>{
           {"Z2", "Z2"}, {"Z2", "Z3"}, {"Z2", "Z4"}, {"Z3", "Z3"},
           {"Z2", "S3"}, {"Z3", "S3"}, {"S3", "S3"}, {"Z2", "D4"},
           {"Z2", "Q8"}, {"Z2", "A4"}, {"Z2", "S4"}, {"Z2", "A5"},
           {"Z3", "A5"}})
    c.add_product(l, r);
  return c;
}

Corpus small_corpus(std::uint64_t max_order)
{
  Corpus full = default_corpus();
  Corpus c;
  for (auto &e : full.groups)
    if (e.group->order() <= max_order)
      c.groups.push_back(std::move(e));
  for (auto &p : full.products)
    if (p.product->order() <= max_order)
      c.products.push_back(std::move(p));
  return c;
}

AxiomVerdict check_axiom(NamedMeasure const &m, Axiom a, Corpus const &corpus)
{
  AxiomVerdict v;
  v.measure = m.name;
  v.axiom = a;
  Tally t{v};
  auto const &c = m.fn;

  switch (a) {
  case Axiom::product:
    for (auto const &p : corpus.products) {
      std::uint64_t lhs = c(p.product);
      std::uint64_t rhs = std::max(c(p.left), c(p.right));
      t.record(lhs == rhs, {p.name, "c(HxK) vs max(c(H), c(K))", lhs, rhs,
                            "==", p.product, {}, p.left, p.right});
    }
    break;
  case Axiom::initial:
    for (auto const &e : corpus.groups) {
      if (!e.group->is_trivial())
        continue;
      std::uint64_t lhs = c(e.group);
      t.record(lhs == 0, {e.name, "c(1)", lhs, 0, "==", e.group, {}, {}, {}});
    }
    break;
  case Axiom::constructability:
    for (auto const &e : corpus.groups) {
      if (e.group->is_trivial() || !is_simple(e.group))
        continue;
      std::uint64_t lhs = c(e.group);
      t.record(lhs <= 1,
               {e.name, "c(S) for simple S", lhs, 1, "<=", e.group, {}, {}, {}});
    }
    break;
  case Axiom::extension:
  case Axiom::quotient:
  case Axiom::normal:
    for (auto const &e : corpus.groups) {
      std::uint64_t cg = c(e.group);
      for (auto const &s : e.sections) {
        std::uint64_t lhs = 0, rhs = 0;
        std::string what;
        if (a == Axiom::extension) {
          lhs = cg;
          rhs = c(s.kernel_group) + c(s.quotient_group);
          what = "c(G) vs c(N) + c(G/N)";
        } else if (a == Axiom::quotient) {
          lhs = c(s.quotient_group);
          rhs = cg;
          what = "c(G/N) vs c(G)";
        } else {
          lhs = c(s.kernel_group);
          rhs = cg;
          what = "c(N) vs c(G)";
        }
        t.record(lhs <= rhs, {e.name, what + ", N = " + subgroup_text(s.kernel),
                              lhs, rhs, "<=", e.group,
                              s.kernel.generator_perms(), {}, {}});
      }
    }
    break;
  case Axiom::subgroup:
    for (auto const &e : corpus.groups) {
      std::uint64_t cg = c(e.group);
      for (auto const &h : two_generated_subgroups(e.group)) {
        std::uint64_t lhs = c(as_group(h));
        t.record(lhs <= cg,
                 {e.name, "c(H) vs c(G), H = " + subgroup_text(h), lhs, cg,
                  "<=", e.group, h.generator_perms(), {}, {}});
      }
    }
    break;
  }
  return v;
}

bool replay_witness(NamedMeasure const &m, Axiom a, AxiomWitness const &w)
{
  clear_measure_cache();
  auto const &c = m.fn;
  std::uint64_t lhs = 0, rhs = 0;
  switch (a) {
  case Axiom::product: {
    auto l = rebuilt(w.left);
    auto r = rebuilt(w.right);
    lhs = c(direct_product(l, r));
    rhs = std::max(c(l), c(r));
    break;
  }
  case Axiom::initial:
  case Axiom::constructability:
    lhs = c(rebuilt(w.g));
    rhs = w.rhs;
    break;
  case Axiom::extension:
  case Axiom::quotient:
  case Axiom::normal:
  case Axiom::subgroup: {
    auto g = rebuilt(w.g);
    auto n = generated_subgroup(g, w.kernel_generators);
    if (a == Axiom::subgroup) {
      lhs = c(as_group(n));
      rhs = c(g);
      break;
    }
    GroupPtr q = n.is_trivial() ? g : quotient_group(n);
    if (a == Axiom::extension) {
      lhs = c(g);
      rhs = c(as_group(n)) + c(q);
    } else if (a == Axiom::quotient) {
      lhs = c(q);
      rhs = c(g);
    } else {
      lhs = c(as_group(n));
      rhs = c(g);
    }
    break;
  }
  }
  bool violated = w.relation == "==" ? lhs != rhs : lhs > rhs;
  return lhs == w.lhs && rhs == w.rhs && violated;
}

std::vector<IndependenceRow> independence_table(Corpus const &corpus)
{
  std::vector<std::pair<Axiom, std::string>> const rows{
      {Axiom::product, "jh"},           {Axiom::extension, "sx"},
      {Axiom::initial, "const1"},       {Axiom::quotient, "sub_V:nilpotent"},
      {Axiom::constructability, "const2"}, {Axiom::normal, "sur_S:3a"}};
  std::vector<IndependenceRow> res;
  for (auto const &[axiom, name] : rows) {
    IndependenceRow row;
    row.axiom = axiom;
    row.measure = name;
    auto m = measure_by_name(name);
    row.reproduced = true;
    for (Axiom a : core_axioms()) {
      auto v = check_axiom(m, a, corpus);
      bool want_fail = a == axiom;
      if (v.holds == want_fail)
        row.reproduced = false;
      row.verdicts.push_back(std::move(v));
    }
    res.push_back(std::move(row));
  }
  return res;
}

std::vector<CounterexampleCheck> verify_counterexamples()
{
  std::vector<CounterexampleCheck> res;
  auto check = [&](std::string name, std::string quantity, auto expected,
                   auto actual) {
    std::ostringstream e, a;
    e << expected;
    a << actual;
    res.push_back({std::move(name), std::move(quantity), e.str(), a.str(),
                   expected == actual});
  };
  auto orders_text = [](std::vector<std::uint64_t> const &v) {
    std::string s;
    for (auto x : v)
      s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
  };

  {
    auto g = builtin_group("Z2wrZ2");
    check("D4", "cx", 2u, cx(g));
    bool up = false, down = false;
    for (auto const &d : enumerate_minimal_series(g)) {
      auto q = d.quotient_orders();
      up = up || q == std::vector<std::uint64_t>{2, 4};
      down = down || q == std::vector<std::uint64_t>{4, 2};
    }
    check("D4", "minimal series with quotient orders 2,4 and 4,2", true,
          up && down);
  }
  {
    auto g = g64();
    check("non-unique factors", "cx(Z2wrZ4)", 3u, cx(g));
    check("non-unique factors", "number of minimal series", 15u,
          enumerate_minimal_series(g).size());
    check("non-unique factors", "JH factors", std::string("2a^6"),
          jh_factors(g).str());
  }
  {
    auto g = g64();
    auto n = g64_klein(g);
    auto s = sx_with_witness(g);
    check("2-group sx extension", "order", 64u, g->order());
    check("2-group sx extension", "sx(G)", 4u, s.value);
    check("2-group sx extension", "socle series quotient orders", std::string("2,2,4,4"),
          orders_text(s.witness.quotient_orders()));
    check("2-group sx extension", "|Z(G)| and soc(G) = Z(G)", std::string("2 yes"),
          std::to_string(center(g).order()) +
              (socle(g) == center(g) ? " yes" : " no"));
    check("2-group sx extension", "|G/N|", 16u, g->order() / n.order());
    std::uint64_t sn = sx(as_group(n)), sq = sx(quotient_group(n));
    check("2-group sx extension", "extension witness sx(G) > sx(N) + sx(G/N)",
          std::string("4 > 1+2"),
          std::to_string(s.value) + (s.value > sn + sq ? " > " : " <= ") +
              std::to_string(sn) + "+" + std::to_string(sq));
  }
  {
    auto h = h32();
    check("order-32 H", "order", 32u, h->order());
    check("order-32 H", "sx", 3u, sx(h));
    check("order-32 H", "cx", 2u, cx(h));
  }
  {
    auto a5 = SimpleDescriptor::parse("60n");
    auto z2 = SimpleDescriptor::parse("2a");
    auto z3 = SimpleDescriptor::parse("3a");
    auto sl = special_linear_2(5);
    check("normal property 1", "sur_A5(S5)", 0u, sur_S(symmetric(5), a5));
    check("normal property 1", "sur_A5(A5)", 1u, sur_S(alternating(5), a5));
    check("normal property 2", "|SL(2,5)| and |Z|", std::string("120 2"),
          std::to_string(sl->order()) + " " +
              std::to_string(center(sl).order()));
    check("normal property 2", "sur_Z2(SL(2,5))", 0u, sur_S(sl, z2));
    check("normal property 2", "sur_Z2(Z2)", 1u, sur_S(cyclic(2), z2));
    check("normal property 3", "sur_Z3(S3)", 0u, sur_S(symmetric(3), z3));
    check("normal property 3", "sur_Z3(Z3)", 1u, sur_S(cyclic(3), z3));
  }
  {
    auto s5 = symmetric(5);
    auto a5 = normal_subgroups(s5).members[1];
    check("quotient independence", "sub_span(S5/A5), sub_span(S5)",
          std::string("1 0"),
          std::to_string(sub_V(quotient_group(a5), Variety::span_of_gems)) +
              " " + std::to_string(sub_V(s5, Variety::span_of_gems)));
  }
  {
    // Subgroups of alternating groups with larger cx than the host.
    auto a5 = alternating(5);
    std::vector<Permutation> a4_gens{parse_cycles("(1,2,3)", 5),
                                     parse_cycles("(1,2)(3,4)", 5)};
    auto a4 = as_group(generated_subgroup(a5, a4_gens));
    check("subgroup axiom", "cx(A4) > cx(A5)", std::string("2 > 1"),
          std::to_string(cx(a4)) + (cx(a4) > cx(a5) ? " > " : " <= ") +
              std::to_string(cx(a5)));
    auto a6 = alternating(6);
    std::vector<Permutation> s4_gens{parse_cycles("(1,2)(5,6)", 6),
                                     parse_cycles("(1,2,3,4)(5,6)", 6)};
    auto s4 = as_group(generated_subgroup(a6, s4_gens));
    check("subgroup axiom", "S4 inside A6: cx(S4) > cx(A6)",
          std::string("24: 3 > 1"),
          std::to_string(s4->order()) + ": " + std::to_string(cx(s4)) +
              (cx(s4) > cx(a6) ? " > " : " <= ") + std::to_string(cx(a6)));
  }
  return res;
}

nlohmann::json to_json(AxiomVerdict const &v)
{
  nlohmann::json j;
  j["measure"] = v.measure;
  j["axiom"] = to_string(v.axiom);
  j["status"] = v.holds ? "holds-on-corpus" : "fails";
  j["cases"] = v.cases;
  j["failures"] = v.failures;
  auto ws = nlohmann::json::array();
  for (auto const &w : v.witnesses)
    ws.push_back({{"group", w.group},
                  {"detail", w.detail},
                  {"lhs", w.lhs},
                  {"rhs", w.rhs},
                  {"required", w.relation}});
  j["witnesses"] = ws;
  return j;
}

nlohmann::json to_json(IndependenceRow const &r)
{
  nlohmann::json j;
  j["axiom"] = to_string(r.axiom);
  j["measure"] = r.measure;
  j["reproduced"] = r.reproduced;
  auto vs = nlohmann::json::array();
  for (auto const &v : r.verdicts)
    vs.push_back(to_json(v));
  j["verdicts"] = vs;
  return j;
}

nlohmann::json to_json(CounterexampleCheck const &c)
{
  return {{"name", c.name},
          {"quantity", c.quantity},
          {"expected", c.expected},
          {"actual", c.actual},
          {"pass", c.pass}};
}

std::string to_text(AxiomVerdict const &v)
{
  std::ostringstream out;
  out << v.measure << " " << to_string(v.axiom) << ": "
      << (v.holds ? "holds-on-corpus" : "fails") << " (" << v.failures << "/"
      << v.cases << " cases violated)\n";
  for (auto const &w : v.witnesses)
    out << "    " << w.group << ": " << w.detail << ": " << w.lhs << " vs "
        << w.rhs << " (needs " << w.relation << ")\n";
  return out.str();
}

} // namespace grpcx
