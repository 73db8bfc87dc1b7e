// padic-fixvec: conductor, depth and fixed-vector computations from the command line.

#include <cctype>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "padic_fixvec/bigint.hpp"
#include "padic_fixvec/errors.hpp"
#include "padic_fixvec/finite_ring.hpp"
#include "padic_fixvec/gl2_dims.hpp"
#include "padic_fixvec/global_bounds.hpp"
#include "padic_fixvec/representations.hpp"
#include "padic_fixvec/spec_io.hpp"
#include "padic_fixvec/verify.hpp"

namespace pf = padic_fixvec;
using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitVerify = 2;

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct Common {
  std::string spec_arg;
  bool json = false;
  bool emit_spec = false;
};

std::string read_spec_text(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(arg);
  if (!in) throw pf::InvalidParameter("cannot read spec file '" + arg + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json spec_json(const pf::RepresentationSpec& spec) { return json::parse(pf::emit_spec(spec)); }

// GL_2 types as block data: pi(chi1, chi2) induces two characters, the
// others are essentially square integrable on GL_2.
pf::GenericRepresentation as_generic(const pf::RepresentationSpec& spec) {
  return std::visit(
      overloaded{
          [](const pf::GenericRepresentation& g) { return g; },
          [](const pf::GL2Representation& rep) {
            if (const auto* ps = std::get_if<pf::PrincipalSeries>(&rep)) {
              return pf::GenericRepresentation({{1, ps->c1}, {1, ps->c2}});
            }
            return pf::GenericRepresentation({{2, pf::conductor_gl2(rep)}});
          },
      },
      spec.rep);
}

std::string big(const pf::BigInt& x) { return pf::to_string(x); }

void print(const Common& common, const json& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  if (common.json) {
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) std::cout << k << std::string(width - k.size() + 2, ' ') << v << "\n";
}

void print_warnings(const pf::GenericRepresentation& rep) {
  for (const auto& w : rep.warnings()) std::cerr << "warning: " << w << "\n";
}

std::vector<std::string> split_dims(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

int cmd_dim(const Common& common, const pf::RepresentationSpec& spec, std::uint32_t m,
            const std::optional<std::string>& block_dims_text) {
  const std::uint64_t q = spec.field.q();
  json out;
  out["command"] = "dim";
  out["spec"] = spec_json(spec);
  out["level"] = m;
  std::vector<std::pair<std::string, std::string>> rows{{"type", pf::rep_type_name(spec)},
                                                        {"q", std::to_string(q)},
                                                        {"level", std::to_string(m)}};
  if (const auto* rep = std::get_if<pf::GL2Representation>(&spec.rep)) {
    const auto dim = pf::dim_gl2(*rep, q, m);
    const auto branch = pf::dim_gl2_branch(*rep, m);
    out["dimension"] = big(dim);
    out["branch"] = branch.name;
    out["formula"] = branch.formula;
    rows.insert(rows.end(), {{"dimension", big(dim)}, {"branch", branch.name}, {"formula", branch.formula}});
    print(common, out, rows);
    return kExitOk;
  }

  const auto& generic = std::get<pf::GenericRepresentation>(spec.rep);
  print_warnings(generic);
  pf::Partition partition;
  for (const auto& b : generic.blocks()) partition.push_back(b.n_block);
  std::vector<pf::BigInt> dims;
  std::string source;
  if (block_dims_text) {
    for (const auto& item : split_dims(*block_dims_text)) {
      try {
        dims.emplace_back(item);
      } catch (const std::exception&) {
        throw pf::InvalidParameter("--block-dims: '" + item + "' is not an integer");
      }
    }
    source = "given";
  } else {
    for (const auto& b : generic.blocks()) {
      if (b.n_block != 1) {
        throw pf::InvalidParameter("dim of an induced representation with a block of size >= 2 needs --block-dims");
      }
      dims.emplace_back(pf::delta_leq(b.conductor, m));
    }
    source = "characters: d(c_i <= m)";
  }
  const auto dim = pf::dim_induced_general(partition, q, m, dims);
  const std::string formula = "|P\\GL_n(F)/K(m)| * prod dim tau_i^K(m)";
  out["dimension"] = big(dim);
  out["branch"] = "induced";
  out["formula"] = formula;
  json jd = json::array();
  std::string dims_row;
  for (const auto& d : dims) {
    jd.push_back(big(d));
    dims_row += (dims_row.empty() ? "" : ", ") + big(d);
  }
  out["block_dims"] = jd;
  out["block_dims_source"] = source;
  rows.insert(rows.end(), {{"dimension", big(dim)},
                           {"branch", "induced"},
                           {"formula", formula},
                           {"block dims", dims_row + " (" + source + ")"}});
  print(common, out, rows);
  return kExitOk;
}

int cmd_has_fixed(const Common& common, const pf::RepresentationSpec& spec, std::uint32_t m) {
  const auto rep = as_generic(spec);
  print_warnings(rep);
  const bool fixed = pf::has_fixed_vector(rep, m);
  json out;
  out["command"] = "has-fixed";
  out["spec"] = spec_json(spec);
  out["level"] = m;
  out["has_fixed_vector"] = fixed;
  out["criterion"] = "c(tau_i) <= m n_i for every block";
  print(common, out,
        {{"level", std::to_string(m)},
         {"has fixed vector", fixed ? "true" : "false"},
         {"criterion", "c(tau_i) <= m n_i for every block"}});
  return kExitOk;
}

int cmd_min_level(const Common& common, const pf::RepresentationSpec& spec) {
  const auto rep = as_generic(spec);
  print_warnings(rep);
  const auto m = pf::min_level(rep);
  const bool esi = rep.blocks().size() == 1;
  const auto window = pf::conductor_window(rep.n(), m, esi);
  json out;
  out["command"] = "min-level";
  out["spec"] = spec_json(spec);
  out["min_level"] = m;
  out["conductor_window"] = window.to_string();
  print(common, out, {{"min level", std::to_string(m)}, {"conductor window", window.to_string()}});
  return kExitOk;
}

int cmd_conductor(const Common& common, const pf::RepresentationSpec& spec) {
  std::uint64_t c = 0;
  std::string basis;
  if (const auto* rep = std::get_if<pf::GL2Representation>(&spec.rep)) {
    c = pf::conductor_gl2(*rep);
    basis = std::holds_alternative<pf::Supercuspidal>(*rep) ? "max(s, 2 c(chi))"
            : std::holds_alternative<pf::SteinbergTwist>(*rep) ? "max(1, 2 c(chi))"
                                                               : "c1 + c2 (additive over blocks)";
  } else {
    const auto& g = std::get<pf::GenericRepresentation>(spec.rep);
    print_warnings(g);
    c = pf::conductor(g);
    basis = g.blocks().size() == 1 ? "block conductor" : "sum of block conductors (additive over blocks)";
  }
  json out;
  out["command"] = "conductor";
  out["spec"] = spec_json(spec);
  out["conductor"] = c;
  out["basis"] = basis;
  print(common, out, {{"conductor", std::to_string(c)}, {"basis", basis}});
  return kExitOk;
}

int cmd_depth(const Common& common, const pf::RepresentationSpec& spec) {
  const auto rep = as_generic(spec);
  print_warnings(rep);
  const auto d = pf::depth(rep);
  json out;
  out["command"] = "depth";
  out["spec"] = spec_json(spec);
  out["depth"] = d.to_string();
  out["formula"] = "max over blocks of max((c - n)/n, 0)";
  print(common, out, {{"depth", d.to_string()}, {"formula", "max over blocks of max((c - n)/n, 0)"}});
  return kExitOk;
}

int cmd_global_bounds(const Common& common, std::uint32_t n, std::uint64_t N) {
  if (n == 0) throw pf::InvalidParameter("--n must be >= 1");
  const auto level = pf::factorize(N);
  const auto bounds = pf::conductor_bounds(n, N);
  json out;
  out["command"] = "global-bounds";
  out["n"] = n;
  out["N"] = N;
  json fac = json::array();
  json windows = json::array();
  std::string fac_row, win_row;
  for (const auto& pe : level.factorization) {
    fac.push_back(json::array({pe.p, pe.e}));
    const auto w = pf::local_conductor_window(n, pe.e);
    json jw;
    jw["p"] = pe.p;
    jw["lower"] = w.lower;
    jw["upper"] = w.upper;
    windows.push_back(jw);
    fac_row += (fac_row.empty() ? "" : " * ") + std::to_string(pe.p) + (pe.e > 1 ? "^" + std::to_string(pe.e) : "");
    win_row += (win_row.empty() ? "" : ", ") + std::to_string(pe.p) + ": [" + std::to_string(w.lower) + ", " +
               std::to_string(w.upper) + "]";
  }
  out["factorization"] = fac;
  out["radical"] = level.radical();
  out["lower"] = big(bounds.lower);
  out["upper"] = big(bounds.upper);
  out["local_windows"] = windows;
  print(common, out,
        {{"N", std::to_string(N) + (fac_row.empty() ? "" : " = " + fac_row)},
         {"radical", std::to_string(level.radical())},
         {"lower", big(bounds.lower)},
         {"upper", big(bounds.upper)},
         {"local windows", win_row.empty() ? "none" : win_row}});
  return kExitOk;
}

int cmd_kirillov(const Common& common, const pf::RepresentationSpec& spec, std::int64_t r, std::int64_t c_psi,
                 bool count_only) {
  const auto* rep = std::get_if<pf::GL2Representation>(&spec.rep);
  const auto* sc = rep ? std::get_if<pf::Supercuspidal>(rep) : nullptr;
  if (sc == nullptr) throw pf::SpecError("$.rep.type", "kirillov-basis needs a supercuspidal spec");
  if (sc->c_chi != 0) {
    throw pf::SpecError("$.rep.twist_conductor", "kirillov-basis supports minimal supercuspidals only (twist_conductor 0)");
  }
  const std::uint64_t q = spec.field.q();
  json out;
  out["command"] = "kirillov-basis";
  out["spec"] = spec_json(spec);
  out["level"] = r;
  out["c_psi"] = c_psi;
  std::vector<pf::KirillovBasisElement> basis;
  std::uint64_t count = 0;
  if (count_only) {
    count = pf::for_each_kirillov_basis_element(q, sc->s, c_psi, r, [](const pf::KirillovBasisElement&) {});
  } else {
    basis = pf::kirillov_basis(q, sc->s, c_psi, r);
    count = basis.size();
  }
  out["count"] = count;
  if (!count_only) {
    json elems = json::array();
    for (const auto& e : basis) {
      json je;
      je["conductor"] = e.lambda.conductor;
      je["class_index"] = e.lambda.class_index;
      je["m"] = e.m_support;
      elems.push_back(je);
    }
    out["elements"] = elems;
  }
  if (common.json) {
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }
  std::cout << "count  " << count << "\n";
  if (!count_only) {
    std::cout << "conductor  class  m\n";
    for (const auto& e : basis) {
      std::cout << e.lambda.conductor << "  " << e.lambda.class_index << "  " << e.m_support << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const Common& common, const std::string& suite, const pf::VerifyOptions& options) {
  const auto reports = pf::run_verification(suite, options);
  bool ok = true;
  json out;
  out["command"] = "verify";
  out["suite"] = suite;
  out["budget"] = options.budget;
  json suites = json::array();
  for (const auto& report : reports) {
    ok = ok && report.passed();
    json js;
    js["suite"] = report.suite;
    js["passed"] = report.passed();
    json checks = json::array();
    for (const auto& c : report.checks) {
      json jc;
      jc["name"] = c.name;
      jc["passed"] = c.passed();
      jc["cases"] = c.cases;
      jc["failures"] = c.failures;
      jc["notes"] = c.notes;
      jc["skipped"] = c.skipped;
      checks.push_back(jc);
      if (common.json) continue;
      std::cout << (c.passed() ? "PASS  " : "FAIL  ") << report.suite << "/" << c.name << "  (" << c.cases
                << " cases)\n";
      for (const auto& f : c.failures) std::cout << "  failed: " << f << "\n";
      for (const auto& n : c.notes) std::cout << "  NOTE: " << n << "\n";
      for (const auto& s : c.skipped) std::cout << "  skipped: " << s << "\n";
    }
    js["checks"] = checks;
    suites.push_back(js);
  }
  out["passed"] = ok;
  out["suites"] = suites;
  if (common.json) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (ok ? "all checks passed" : "verification FAILED") << "\n";
  }
  return ok ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conductors, depth and K(m)-fixed vector dimensions for representations of GL_n over a p-adic field",
               "padic-fixvec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "0.1.0");

  Common common;
  std::string budget_text;
  app.add_flag("--json", common.json, "Machine-readable JSON output")->group("Global");
  app.add_option("--budget", budget_text, "Enumeration budget, e.g. 1e8 or 10^9 (default: $PADIC_FIXVEC_BUDGET or 1e8)")
      ->group("Global");

  std::uint32_t level = 0;
  std::int64_t kirillov_level = 0;
  std::int64_t c_psi = 0;
  std::optional<std::string> block_dims;
  bool count_only = false;
  std::uint32_t group_n = 0;
  std::uint64_t level_N = 0;
  std::string suite = "all";

  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("spec", common.spec_arg, "Spec file, inline JSON, or - for stdin")->required();
    sub->add_flag("--emit-spec", common.emit_spec, "Print the canonical spec and exit");
    sub->add_flag("--json", common.json, "Machine-readable JSON output");
  };

  auto* dim = app.add_subcommand("dim", "dim pi^{K(m)}");
  add_spec(dim);
  dim->add_option("--level,-m", level, "Level m >= 0")->required();
  dim->add_option("--block-dims", block_dims, "Comma-separated block dimensions for induced specs");

  auto* has_fixed = app.add_subcommand("has-fixed", "Whether pi has a nonzero K(m)-fixed vector");
  add_spec(has_fixed);
  has_fixed->add_option("--level,-m", level, "Level m >= 0")->required();

  auto* min_level = app.add_subcommand("min-level", "Least m with a K(m)-fixed vector");
  add_spec(min_level);
  auto* conductor = app.add_subcommand("conductor", "Conductor c(pi)");
  add_spec(conductor);
  auto* depth = app.add_subcommand("depth", "Depth as an exact fraction");
  add_spec(depth);

  auto* global = app.add_subcommand("global-bounds", "Conductor bounds from a global level N");
  global->add_option("--n", group_n, "Rank n of GL_n")->required();
  global->add_option("--level-N,-N", level_N, "Level N >= 1")->required();
  global->add_flag("--json", common.json, "Machine-readable JSON output");

  auto* kirillov = app.add_subcommand("kirillov-basis", "Basis of K(r)-fixed Kirillov vectors of a minimal supercuspidal");
  add_spec(kirillov);
  kirillov->add_option("--level,-m", kirillov_level, "Level r")->required();
  kirillov->add_option("--c-psi", c_psi, "Conductor of the additive character (default 0)");
  kirillov->add_flag("--count", count_only, "Only count the basis");

  auto* verify = app.add_subcommand("verify", "Check every closed form against brute-force oracles");
  verify->add_option("--suite", suite, "all, cosets, characters, supercuspidal or windows")
      ->check(CLI::IsMember({"all", "cosets", "characters", "supercuspidal", "windows"}));
  verify->add_option("--budget", budget_text, "Enumeration budget");
  verify->add_flag("--json", common.json, "Machine-readable JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    pf::VerifyOptions options;
    options.budget = budget_text.empty() ? pf::default_budget() : pf::parse_budget(budget_text);

    if (global->parsed()) return cmd_global_bounds(common, group_n, level_N);
    if (verify->parsed()) return cmd_verify(common, suite, options);

    const auto spec = pf::parse_spec(read_spec_text(common.spec_arg));
    if (common.emit_spec) {
      std::cout << pf::emit_spec(spec) << "\n";
      return kExitOk;
    }
    if (dim->parsed()) return cmd_dim(common, spec, level, block_dims);
    if (has_fixed->parsed()) return cmd_has_fixed(common, spec, level);
    if (min_level->parsed()) return cmd_min_level(common, spec);
    if (conductor->parsed()) return cmd_conductor(common, spec);
    if (depth->parsed()) return cmd_depth(common, spec);
    if (kirillov->parsed()) return cmd_kirillov(common, spec, kirillov_level, c_psi, count_only);
  } catch (const pf::SpecError& e) {
    std::cerr << "error: invalid spec: " << e.what() << "\n";
    return kExitInput;
  } catch (const pf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
