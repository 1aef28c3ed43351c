// relcomm: command-line front end.
//
// Exit codes: 0 success, 1 input error, 2 a checked inequality or equality
// condition failed (which means a bug, not a property of the input).

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "relcomm/relcomm.hpp"

namespace {

using namespace relcomm;

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2;

struct Caps {
  std::size_t order_cap = default_order_cap;
  std::size_t lattice_cap = default_lattice_cap;
  std::uint64_t search_budget = default_search_budget;
  std::size_t quotient_cap = default_quotient_cap;
};

struct GroupSource {
  std::string spec;
  std::string table_path;
  std::string perms_path;
};

void add_source(CLI::App* cmd, GroupSource& src, const std::string& prefix = "") {
  auto* g = cmd->add_option("--" + prefix + "group", src.spec, "group spec, e.g. 'Q:8' or 'D:8 x C:3'");
  auto* t = cmd->add_option("--" + prefix + "table", src.table_path, "Cayley table file");
  auto* p = cmd->add_option("--" + prefix + "perms", src.perms_path, "permutation generator file");
  g->excludes(t)->excludes(p);
  t->excludes(p);
}

CatalogEntry load_entry(const GroupSource& src, const Caps& caps) {
  if (!src.spec.empty())
    return build(src.spec, caps.order_cap);
  if (src.table_path.empty() && src.perms_path.empty())
    fail(Errc::invalid_argument, "give one of --group, --table, --perms");
  const bool cayley = !src.table_path.empty();
  const std::string& path = cayley ? src.table_path : src.perms_path;
  auto entry = make_entry(GroupSpec{}, cayley ? load_cayley(path, caps.order_cap)
                                              : load_permutations(path, caps.order_cap));
  entry.set_name(std::filesystem::path(path).filename().string());
  return entry;
}

int emit_error(const Error& e) {
  std::cerr << "error[" << errc_name(e.code()) << "]: " << e.what() << '\n';
  return exit_input;
}

void write_json(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

// ---- subcommands ----------------------------------------------------------

int run_stats(const GroupSource& src, const std::string& selector, const std::string& format,
              std::uint64_t seed, const Caps& caps) {
  auto entry = load_entry(src, caps);
  auto cp = conjugacy_partition(entry.table());
  std::vector<StatsReport> reps;
  for (const auto& s : select_subgroups(entry, selector, seed, caps.lattice_cap))
    reps.push_back(make_stats_report(s.subgroup, cp, entry.name() + " / " + s.name));
  if (format == "json")
    write_json(std::cout, stats_json(reps));
  else if (format == "csv")
    stats_csv(std::cout, reps);
  else
    stats_table(std::cout, reps);
  return exit_ok;
}

int run_bounds(const GroupSource& src, const std::string& selector, const std::string& format,
               std::uint64_t seed, const Caps& caps) {
  auto entry = load_entry(src, caps);
  auto cp = conjugacy_partition(entry.table());
  std::vector<BoundReport> reps;
  std::size_t violations = 0;
  for (const auto& s : select_subgroups(entry, selector, seed, caps.lattice_cap)) {
    reps.push_back(make_bound_report(s.subgroup, cp, entry.name() + " / " + s.name));
    violations += reps.back().violations.size();
  }
  if (format == "json")
    write_json(std::cout, bounds_json(reps));
  else if (format == "csv")
    bounds_csv(std::cout, reps);
  else
    bounds_table(std::cout, reps);
  for (const auto& r : reps)
    for (const auto& v : r.violations)
      std::cerr << "violation: " << v << '\n';
  return violations ? exit_violation : exit_ok;
}

struct IsoclinicArgs {
  GroupSource pair1, pair2;
  std::string h1 = "G", h2 = "G";
  std::string witness_in, witness_out;
};

int run_isoclinic(const IsoclinicArgs& a, const std::string& format, const Caps& caps) {
  auto e1 = load_entry(a.pair1, caps);
  auto e2 = load_entry(a.pair2, caps);
  auto s1 = select_subgroups(e1, a.h1, 1, caps.lattice_cap);
  auto s2 = select_subgroups(e2, a.h2, 1, caps.lattice_cap);
  if (s1.size() != 1 || s2.size() != 1)
    fail(Errc::invalid_argument, "--h1/--h2 must select exactly one subgroup");
  const std::string id1 = "(" + e1.name() + ", " + s1[0].name + ")";
  const std::string id2 = "(" + e2.name() + ", " + s2[0].name + ")";
  auto p1 = make_pair_context(s1[0].subgroup);
  auto p2 = make_pair_context(s2[0].subgroup);

  SearchResult res;
  if (!a.witness_in.empty()) {
    auto in = open_input(a.witness_in);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      fail(Errc::parse_error, a.witness_in + ": " + e.what());
    }
    auto w = witness_from_json(j);
    auto v = verify_pair_isoclinism(p1, p2, w);
    if (!v.ok) {
      std::cerr << "witness rejected: " << v.violation << '\n';
      if (format == "json")
        write_json(std::cout, Json{{"schema", "relcomm.isoclinism/1"}, {"pair1", id1}, {"pair2", id2},
                                   {"status", "rejected"}, {"violation", v.violation}});
      else
        std::cout << id1 << " vs " << id2 << ": witness rejected: " << v.violation << '\n';
      return exit_input;
    }
    res.status = SearchStatus::found;
    res.witness = std::move(w);
  } else {
    res = find_pair_isoclinism(p1, p2, caps.search_budget, caps.quotient_cap);
  }

  const char* status = res.status == SearchStatus::found          ? "found"
                       : res.status == SearchStatus::not_found    ? "not_found"
                                                                  : "budget_exhausted";
  std::optional<InvarianceReport> inv;
  if (res.witness)
    inv = verify_invariance(p1, p2, *res.witness);
  if (res.witness && !a.witness_out.empty()) {
    std::ofstream out(a.witness_out);
    if (!out)
      fail(Errc::file_not_found, "cannot write " + a.witness_out);
    write_json(out, witness_json(*res.witness, id1, id2, p1, p2));
  }

  if (format == "json") {
    Json j{{"schema", "relcomm.isoclinism/1"}, {"pair1", id1}, {"pair2", id2},
           {"status", status}, {"nodes", res.nodes}};
    j["reason"] = res.reason;
    j["witness"] = res.witness ? witness_json(*res.witness, id1, id2, p1, p2) : Json(nullptr);
    j["invariance"] = inv ? invariance_json(*inv, p1.group(), p2.group()) : Json(nullptr);
    write_json(std::cout, j);
  } else {
    std::cout << id1 << " vs " << id2 << ": " << status << " after " << res.nodes << " nodes";
    if (!res.reason.empty())
      std::cout << " (" << res.reason << ")";
    std::cout << '\n';
    if (res.witness) {
      std::cout << "alpha on G1/Z(H1,G1) (" << res.witness->alpha.size() << " cosets):";
      for (std::size_t c = 0; c < res.witness->alpha.size(); ++c)
        std::cout << ' ' << c << "->" << res.witness->alpha[c];
      std::cout << "\nbeta on [H1,G1]:";
      for (std::size_t i = 0; i < res.witness->beta.size(); ++i)
        std::cout << ' ' << element_name(p1.group(), res.witness->beta_domain[i]) << "->"
                  << element_name(p2.group(), res.witness->beta[i]);
      std::cout << '\n';
      invariance_table(std::cout, *inv, p1.group(), p2.group());
    }
  }
  return inv && !inv->all_equal() ? exit_violation : exit_ok;
}

int run_verify(std::size_t max_order, std::uint64_t seed, const std::string& format,
               const Caps& caps, bool verbose) {
  VerifyOptions opt;
  opt.max_order = max_order;
  opt.order_cap = caps.order_cap;
  opt.seed = seed;
  opt.search_budget = caps.search_budget;
  opt.quotient_cap = caps.quotient_cap;
  auto sum = verify_theorems(opt, verbose ? [](const std::string& s) {
    std::cerr << "checking " << s << '\n';
  } : std::function<void(const std::string&)>{});
  if (format == "json") {
    write_json(std::cout, Json{{"schema", verify_schema},
                               {"max_order", max_order},
                               {"groups", sum.groups},
                               {"pairs", sum.pairs},
                               {"checks", sum.checks},
                               {"isoclinisms", sum.isoclinisms},
                               {"violations", sum.violations},
                               {"notes", sum.notes}});
  } else {
    for (const auto& v : sum.violations)
      std::cout << "VIOLATION " << v << '\n';
    for (const auto& n : sum.notes)
      std::cout << "note: " << n << '\n';
    std::cout << sum.groups << " groups, " << sum.pairs << " pairs, " << sum.isoclinisms
              << " isoclinisms, " << sum.checks << " checks, " << sum.violations.size()
              << " violations\n";
  }
  return sum.ok() ? exit_ok : exit_violation;
}

int run_catalog_list(const std::string& format) {
  if (format == "json") {
    Json fams = Json::array();
    for (const auto& f : families())
      fams.push_back(Json{{"name", f.name}, {"syntax", f.syntax}, {"range", f.range},
                          {"description", f.description}});
    write_json(std::cout, Json{{"schema", "relcomm.catalog/1"}, {"families", fams},
                               {"standard", standard_catalog()}});
    return exit_ok;
  }
  std::cout << "families (combine with 'x', group with parentheses):\n";
  for (const auto& f : families())
    std::cout << "  " << std::left << std::setw(8) << f.syntax << std::setw(28) << f.range
              << f.description << std::right << '\n';
  std::cout << "standard catalog:\n ";
  for (const auto& s : standard_catalog())
    std::cout << ' ' << s << ';';
  std::cout << '\n';
  return exit_ok;
}

int run_catalog_show(const GroupSource& src, const std::string& format, const Caps& caps) {
  auto entry = load_entry(src, caps);
  const GroupTable& g = entry.table();
  auto cp = conjugacy_partition(g);
  auto tv = conjugate_type_vector(cp);
  auto cls = nilpotency_class(g);
  if (format == "json") {
    Json lm = Json::array();
    for (const auto& l : entry.landmarks())
      lm.push_back(Json{{"name", l.name}, {"order", l.subgroup.order()},
                        {"members", l.subgroup.members()}});
    write_json(std::cout, Json{{"schema", "relcomm.group/1"},
                               {"group", entry.name()},
                               {"order", g.order()},
                               {"abelian", g.is_abelian()},
                               {"classes", cp.classes.size()},
                               {"conjugate_type_vector", tv},
                               {"nilpotency_class", cls ? Json(*cls) : Json(nullptr)},
                               {"landmarks", lm}});
    return exit_ok;
  }
  std::cout << entry.name() << ": order " << g.order() << ", " << cp.classes.size()
            << " classes, exponent " << exponent(g) << ", "
            << (cls ? "nilpotent of class " + std::to_string(*cls) : std::string("not nilpotent"))
            << "\n  type vector (";
  for (std::size_t i = 0; i < tv.size(); ++i)
    std::cout << (i ? ", " : "") << tv[i];
  std::cout << ")\n  landmarks:\n";
  for (const auto& l : entry.landmarks())
    std::cout << "    " << std::left << std::setw(10) << l.name << std::right << " order "
              << l.subgroup.order() << '\n';
  return exit_ok;
}

template <typename T>
void env_override(const char* name, T& value) {
  const char* v = std::getenv(name);
  if (!v || !*v)
    return;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(v, &end, 10);
  if (*end || parsed == 0)
    fail(Errc::invalid_argument, std::string(name) + " must be a positive integer, got '" + v + "'");
  value = static_cast<T>(parsed);
}

} // namespace

int main(int argc, char** argv) {
  Caps caps;
  try {
    env_override("RELCOMM_ORDER_CAP", caps.order_cap);
    env_override("RELCOMM_LATTICE_CAP", caps.lattice_cap);
    env_override("RELCOMM_SEARCH_BUDGET", caps.search_budget);
    env_override("RELCOMM_QUOTIENT_CAP", caps.quotient_cap);
  } catch (const Error& e) {
    return emit_error(e);
  }

  CLI::App app{"Exact commuting and commutator probabilities of finite group pairs"};
  app.require_subcommand(1);
  std::string format = "table";
  std::uint64_t seed = 1;
  auto positive = CLI::PositiveNumber;
  app.add_option("--order-cap", caps.order_cap, "largest group order built")->check(positive);
  app.add_option("--lattice-cap", caps.lattice_cap, "largest subgroup lattice enumerated")->check(positive);

  auto formats = CLI::IsMember({"table", "json", "csv"});

  GroupSource stats_src;
  std::string stats_sel = "G";
  auto* stats = app.add_subcommand("stats", "Pr(H,G), Pr_g(H,G) and the class-size profile");
  add_source(stats, stats_src);
  stats->add_option("--subgroup", stats_sel,
                    "all | maximal | standard | <landmark> | gen:i,j,... | sample:N");
  stats->add_option("--format", format)->check(formats);
  stats->add_option("--seed", seed, "seed for sample:N");

  GroupSource bounds_src;
  std::string bounds_sel = "G";
  auto* bounds = app.add_subcommand("bounds", "every bound with hypotheses and equality flags");
  add_source(bounds, bounds_src);
  bounds->add_option("--subgroup", bounds_sel,
                     "all | maximal | standard | <landmark> | gen:i,j,... | sample:N");
  bounds->add_option("--format", format)->check(formats);
  bounds->add_option("--seed", seed, "seed for sample:N");

  IsoclinicArgs iso;
  auto* isoc = app.add_subcommand("isoclinic", "search for or verify an isoclinism of two pairs");
  isoc->add_option("--pair1", iso.pair1.spec, "first group spec");
  isoc->add_option("--table1", iso.pair1.table_path, "first group as a Cayley table file");
  isoc->add_option("--pair2", iso.pair2.spec, "second group spec");
  isoc->add_option("--table2", iso.pair2.table_path, "second group as a Cayley table file");
  isoc->add_option("--h1", iso.h1, "subgroup of the first group (default G)");
  isoc->add_option("--h2", iso.h2, "subgroup of the second group (default G)");
  isoc->add_option("--budget", caps.search_budget, "backtracking node budget")->check(positive);
  isoc->add_option("--quotient-cap", caps.quotient_cap, "largest quotient searched")->check(positive);
  isoc->add_option("--witness-in", iso.witness_in, "verify this witness JSON instead of searching");
  isoc->add_option("--witness-out", iso.witness_out, "write the witness JSON here");
  isoc->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  std::size_t max_order = 128;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify-theorems", "run every enforced invariant over the catalog");
  verify->add_option("--max-order", max_order, "skip catalog groups above this order")->check(positive);
  verify->add_option("--seed", seed, "seed for the randomized product checks");
  verify->add_option("--budget", caps.search_budget, "isoclinism search node budget")->check(positive);
  verify->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  verify->add_flag("--verbose", verbose, "report progress on stderr");

  auto* catalog = app.add_subcommand("catalog", "supported families and catalog groups");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "families, parameter ranges, standard catalog");
  list->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));
  GroupSource show_src;
  auto* show = catalog->add_subcommand("show", "one group with its landmark subgroups");
  show->add_option("spec", show_src.spec, "group spec");
  show->add_option("--table", show_src.table_path, "Cayley table file");
  show->add_option("--perms", show_src.perms_path, "permutation generator file");
  show->add_option("--format", format)->check(CLI::IsMember({"table", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (stats->parsed())
      return run_stats(stats_src, stats_sel, format, seed, caps);
    if (bounds->parsed())
      return run_bounds(bounds_src, bounds_sel, format, seed, caps);
    if (isoc->parsed())
      return run_isoclinic(iso, format, caps);
    if (verify->parsed())
      return run_verify(max_order, seed, format, caps, verbose);
    if (list->parsed())
      return run_catalog_list(format);
    if (show->parsed())
      return run_catalog_show(show_src, format, caps);
  } catch (const Error& e) {
    return emit_error(e);
  }
  return exit_input;
}
