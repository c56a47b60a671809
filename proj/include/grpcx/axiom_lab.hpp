#pragma once

#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "grpcx/builders.hpp"

namespace grpcx
{

enum class Axiom
{
  product,
  extension,
  initial,
  quotient,
  constructability,
  normal,
  subgroup
};

std::string to_string(Axiom a);
Axiom parse_axiom(std::string const &text);
// The five axioms plus the normal subgroup property.
std::vector<Axiom> const &core_axioms();

struct NamedMeasure
{
  std::string name;
  std::function<std::uint64_t(GroupPtr const &)> fn;
  // Axioms this function is known to violate.
  std::set<Axiom> expected_failures;
};

// cx, sx, jh, chief, der, fit, solv, logp:<p>, mu_S:<set>, chi_S:<set>,
// sur_S:<descriptor>, sub_V:<class>, const1, const2.
NamedMeasure measure_by_name(std::string const &name);

/// A normal subgroup of a corpus group together with N and G/N as groups.
struct Section
{
  Subgroup kernel;
  GroupPtr kernel_group;
  GroupPtr quotient_group;
};

struct CorpusEntry
{
  std::string name;
  GroupPtr group;
  std::vector<Section> sections;
};

struct ProductCase
{
  std::string name;
  GroupPtr left;
  GroupPtr right;
  GroupPtr product;
};

struct Corpus
{
  std::vector<CorpusEntry> groups;
  std::vector<ProductCase> products;

  void add_group(std::string name, GroupPtr g);
  void add_product(std::string left, std::string right);
  GroupPtr const &get(std::string const &name) const;
};

// Every group named in the examples plus small abelian padding.
Corpus default_corpus();
// Groups and products of order at most max_order from the default corpus.
Corpus small_corpus(std::uint64_t max_order);

/// One violated instance. The groups are kept so it can be replayed.
struct AxiomWitness
{
  std::string group;
  std::string detail;
  std::uint64_t lhs = 0;
  std::uint64_t rhs = 0;
  // Relation the axiom requires between lhs and rhs: "<=" or "==".
  std::string relation;

  GroupPtr g;
  std::vector<Permutation> kernel_generators;
  GroupPtr left;
  GroupPtr right;
};

struct AxiomVerdict
{
  std::string measure;
  Axiom axiom = Axiom::product;
  bool holds = true;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  // First few failures only.
  std::vector<AxiomWitness> witnesses;
};

AxiomVerdict check_axiom(NamedMeasure const &m, Axiom a, Corpus const &corpus);
// Recomputes a witness from freshly built groups; true when the stored
// values come out again and still violate the axiom.
bool replay_witness(NamedMeasure const &m, Axiom a, AxiomWitness const &w);

struct IndependenceRow
{
  Axiom axiom = Axiom::product;
  std::string measure;
  std::vector<AxiomVerdict> verdicts;
  // The named axiom fails and every other one holds.
  bool reproduced = false;
};

std::vector<IndependenceRow> independence_table(Corpus const &corpus);

struct CounterexampleCheck
{
  std::string name;
  std::string quantity;
  std::string expected;
  std::string actual;
  bool pass = false;
};

std::vector<CounterexampleCheck> verify_counterexamples();

nlohmann::json to_json(AxiomVerdict const &v);
nlohmann::json to_json(IndependenceRow const &r);
nlohmann::json to_json(CounterexampleCheck const &c);
std::string to_text(AxiomVerdict const &v);

} // namespace grpcx
