#include "grpcx/group_spec.hpp"

#include <cctype>
#include <charconv>
#include <fstream>

#include "grpcx/error.hpp"

namespace grpcx
{

namespace
{

GroupPtr from_cycle_strings(std::size_t degree,
                            std::vector<std::string> const &gens,
                            Limits const &limits)
{
  std::vector<Permutation> perms;
  for (auto const &s : gens)
    perms.push_back(parse_cycles(s, degree));
  if (perms.empty())
    perms.push_back(Permutation::identity(degree));
  return group_from_generators(degree, std::move(perms), limits);
}

class BuiltinParser
{
public:
  BuiltinParser(std::string_view text, Limits const &limits)
      : text_(text), limits_(limits)
  {}

  GroupPtr parse()
  {
    auto g = product();
    if (pos_ != text_.size())
      fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return g;
  }

private:
  [[noreturn]] void fail(std::string const &why) const
  {
    throw InputError("bad builtin group name '" + std::string(text_) +
                     "': " + why);
  }

  bool eat(std::string_view token)
  {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  std::size_t number()
  {
    std::size_t value = 0;
    auto begin = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin)
      fail("expected a number at offset " + std::to_string(pos_));
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  GroupPtr product()
  {
    auto g = wreath();
    while (eat("x"))
      g = direct_product(g, wreath());
    return g;
  }

  GroupPtr wreath()
  {
    auto g = atom();
    while (eat("wr"))
      g = wreath_product(g, atom());
    return g;
  }

  GroupPtr atom()
  {
    if (eat("(")) {
      auto g = product();
      if (!eat(")"))
        fail("missing ')'");
      return g;
    }
    if (eat("trivial"))
      return cyclic(1, limits_);
    if (eat("V4"))
      return dihedral(2, limits_);
    if (eat("Q8"))
      return quaternion(limits_);
    if (eat("H32"))
      return h32(limits_);
    if (eat("G64"))
      return g64(limits_);
    if (eat("SL2_")) {
      return special_linear_2(number(), limits_);
    }
    if (eat("Z")) {
      std::size_t n = number();
      if (eat("^"))
        return elementary_abelian(n, number(), limits_);
      return cyclic(n, limits_);
    }
    if (eat("D"))
      return dihedral(number(), limits_);
    if (eat("S"))
      return symmetric(number(), limits_);
    if (eat("A"))
      return alternating(number(), limits_);
    fail("unknown group at offset " + std::to_string(pos_));
  }

  std::string_view text_;
  Limits limits_;
  std::size_t pos_ = 0;
};

GroupPtr construct(nlohmann::json const &c, Limits const &limits);

GroupPtr group_arg(nlohmann::json const &arg, Limits const &limits)
{
  if (arg.is_string())
    return builtin_group(arg.get<std::string>(), limits);
  if (arg.is_object() && arg.contains("op"))
    return construct(arg, limits);
  if (arg.is_object())
    return group_from_json(arg, limits).group;
  throw InputError("expected a group argument, got " + arg.dump());
}

std::size_t int_arg(nlohmann::json const &arg)
{
  if (!arg.is_number_unsigned())
    throw InputError("expected a positive integer argument, got " +
                     arg.dump());
  return arg.get<std::size_t>();
}

GroupPtr construct(nlohmann::json const &c, Limits const &limits)
{
  if (!c.is_object() || !c.contains("op") || !c["op"].is_string())
    throw InputError("construct needs an \"op\" string");
  auto op = c["op"].get<std::string>();
  auto args = c.value("args", nlohmann::json::array());
  if (!args.is_array())
    throw InputError("construct \"args\" must be an array");
  auto need = [&](std::size_t k) {
    if (args.size() != k)
      throw InputError(op + " takes " + std::to_string(k) + " argument(s)");
  };
  if (op == "cyclic" || op == "dihedral" || op == "symmetric" ||
      op == "alternating" || op == "sl2") {
    need(1);
    std::size_t n = int_arg(args[0]);
    if (op == "cyclic")
      return cyclic(n, limits);
    if (op == "dihedral")
      return dihedral(n, limits);
    if (op == "symmetric")
      return symmetric(n, limits);
    if (op == "alternating")
      return alternating(n, limits);
    return special_linear_2(n, limits);
  }
  if (op == "direct_product") {
    need(2);
    return direct_product(group_arg(args[0], limits),
                          group_arg(args[1], limits));
  }
  if (op == "wreath") {
    need(2);
    return wreath_product(group_arg(args[0], limits),
                          group_arg(args[1], limits));
  }
  if (op == "embed_alternating") {
    need(1);
    return embed_in_alternating(group_arg(args[0], limits));
  }
  if (op == "quotient") {
    need(2);
    auto g = group_arg(args[0], limits);
    if (!args[1].is_array())
      throw InputError("quotient kernel must be an array of cycle strings");
    std::vector<Permutation> gens;
    for (auto const &s : args[1]) {
      if (!s.is_string())
        throw InputError("quotient kernel must be an array of cycle strings");
      auto p = parse_cycles(s.get<std::string>(), g->degree());
      if (!g->contains(p))
        throw InputError("kernel generator " + s.get<std::string>() +
                         " is not in the group");
      gens.push_back(std::move(p));
    }
    auto n = generated_subgroup(g, gens);
    if (!is_normal(n))
      throw InputError("quotient kernel is not a normal subgroup");
    return quotient_group(n);
  }
  throw InputError("unknown construct op '" + op + "'");
}

} // namespace

GroupPtr quaternion(Limits const &limits)
{
  return from_cycle_strings(8, {"(1,2,4,7)(3,6,8,5)", "(1,3,4,8)(2,5,7,6)"},
                            limits);
}

GroupPtr h32(Limits const &limits)
{
  return from_cycle_strings(
      8, {"(1,2)(3,5)(4,6)(7,8)", "(2,5,6,8)(3,7)", "(2,6)(5,8)"}, limits);
}

GroupPtr g64(Limits const &limits)
{
  return from_cycle_strings(
      8, {"(1,2)", "(3,4)", "(5,6)", "(7,8)", "(1,3,5,7)(2,4,6,8)"}, limits);
}

Subgroup g64_klein(GroupPtr const &g)
{
  std::vector<Permutation> gens{parse_cycles("(3,4)(7,8)", 8),
                                parse_cycles("(1,2)(5,6)", 8)};
  return generated_subgroup(g, gens);
}

GroupPtr builtin_group(std::string_view name, Limits const &limits)
{
  return BuiltinParser(name, limits).parse();
}

NamedGroup group_from_json(nlohmann::json const &doc, Limits const &limits)
{
  if (!doc.is_object())
    throw InputError("group definition must be a JSON object");
  NamedGroup res;
  res.name = doc.value("name", std::string());
  if (doc.contains("builtin")) {
    if (!doc["builtin"].is_string())
      throw InputError("\"builtin\" must be a string");
    auto b = doc["builtin"].get<std::string>();
    res.group = builtin_group(b, limits);
    if (res.name.empty())
      res.name = b;
  } else if (doc.contains("construct")) {
    res.group = construct(doc["construct"], limits);
  } else if (doc.contains("degree") && doc.contains("generators")) {
    std::size_t degree = int_arg(doc["degree"]);
    if (degree == 0)
      throw InputError("degree must be positive");
    if (!doc["generators"].is_array())
      throw InputError("\"generators\" must be an array of cycle strings");
    std::vector<std::string> gens;
    for (auto const &s : doc["generators"]) {
      if (!s.is_string())
        throw InputError("\"generators\" must be an array of cycle strings");
      gens.push_back(s.get<std::string>());
    }
    res.group = from_cycle_strings(degree, gens, limits);
  } else {
    throw InputError("group definition needs \"builtin\", \"construct\" or "
                     "\"degree\" plus \"generators\"");
  }
  if (res.name.empty())
    res.name = "group";
  return res;
}

NamedGroup load_group_file(std::string const &path, Limits const &limits)
{
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open group file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (nlohmann::json::parse_error const &e) {
    throw InputError("group file " + path + ": " + e.what());
  }
  return group_from_json(doc, limits);
}

} // namespace grpcx
