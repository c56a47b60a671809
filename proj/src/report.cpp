#include "grpcx/report.hpp"

#include <sstream>

#include "grpcx/builders.hpp"

namespace grpcx
{

namespace
{

std::string generator_list(Subgroup const &s)
{
  auto gens = s.generator_perms();
  if (gens.empty())
    return "()";
  std::string res;
  for (auto const &p : gens) {
    if (!res.empty())
      res += ", ";
    res += format_cycles(p);
  }
  return res;
}

nlohmann::json factors_json(FactorMultiset const &f)
{
  auto res = nlohmann::json::object();
  for (auto const &[d, k] : f.entries)
    res[d.str()] = k;
  return res;
}

} // namespace

nlohmann::json to_json(Decomposition const &d)
{
  auto levels = nlohmann::json::array();
  for (std::size_t i = 0; i < d.series.size(); ++i) {
    nlohmann::json level;
    level["order"] = d.series[i].order();
    auto gens = nlohmann::json::array();
    for (auto const &p : d.series[i].generator_perms())
      gens.push_back(format_cycles(p));
    level["generators"] = gens;
    if (i > 0) {
      auto const &q = d.quotient_info[i - 1];
      level["quotient_info"] = {{"order", q.order},
                                {"factors", factors_json(q.factors)}};
    }
    levels.push_back(std::move(level));
  }
  return {{"length", d.length()}, {"series", levels}};
}

nlohmann::json to_json(MeasureReport const &r, bool witnesses)
{
  nlohmann::json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["degree"] = r.degree;
  j["cx"] = r.cx;
  j["sx"] = r.sx;
  j["jh"] = r.jh;
  j["chief"] = r.chief;
  j["der"] = r.der;
  j["fit"] = r.fit;
  j["solv"] = r.solv;
  j["fitting_height"] = r.fitting_height ? nlohmann::json(*r.fitting_height)
                                         : nlohmann::json();
  j["derived_length"] = r.derived_length ? nlohmann::json(*r.derived_length)
                                         : nlohmann::json();
  auto lp = nlohmann::json::object();
  for (auto const &[p, e] : r.log_p)
    lp[std::to_string(p)] = e;
  j["log_p"] = lp;
  if (witnesses) {
    j["cx_witness"] = to_json(r.cx_witness);
    j["sx_witness"] = to_json(r.sx_witness);
  }
  return j;
}

std::string to_table(Decomposition const &d)
{
  std::ostringstream out;
  for (std::size_t i = 0; i < d.series.size(); ++i) {
    out << "  V" << i << "  order " << d.series[i].order();
    if (i > 0) {
      auto const &q = d.quotient_info[i - 1];
      out << "  quotient " << q.order << " [" << q.factors.str() << "]";
    }
    out << "  gens " << generator_list(d.series[i]) << "\n";
  }
  return out.str();
}

std::string to_table(MeasureReport const &r, bool witnesses)
{
  std::ostringstream out;
  auto opt = [](std::optional<std::uint64_t> const &v) {
    return v ? std::to_string(*v) : std::string("-");
  };
  out << "group           " << r.name << "\n"
      << "order           " << r.order << "\n"
      << "degree          " << r.degree << "\n"
      << "cx              " << r.cx << "\n"
      << "sx              " << r.sx << "\n"
      << "jh              " << r.jh << "\n"
      << "chief           " << r.chief << "\n"
      << "der             " << r.der << "\n"
      << "fit             " << r.fit << "\n"
      << "solv            " << r.solv << "\n"
      << "fitting_height  " << opt(r.fitting_height) << "\n"
      << "derived_length  " << opt(r.derived_length) << "\n";
  for (auto const &[p, e] : r.log_p)
    out << "log_" << p << std::string(p < 10 ? 11 : 10, ' ') << e << "\n";
  if (witnesses) {
    out << "cx witness (length " << r.cx_witness.length() << ")\n"
        << to_table(r.cx_witness) << "sx witness (length "
        << r.sx_witness.length() << ")\n"
        << to_table(r.sx_witness);
  }
  return out.str();
}

} // namespace grpcx
