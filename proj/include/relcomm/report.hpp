// Report rendering: JSON (versioned by a "schema" field, fractions as
// {"num", "den"}), CSV rows, and plain-text tables. Witness JSON reads back.

#ifndef RELCOMM_REPORT_HPP_
#define RELCOMM_REPORT_HPP_

#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bounds.hpp"
#include "comm_stats.hpp"
#include "error.hpp"
#include "exact_ratio.hpp"
#include "isoclinism.hpp"

namespace relcomm {

using Json = nlohmann::ordered_json;

inline constexpr const char* stats_schema = "relcomm.stats/1";
inline constexpr const char* bounds_schema = "relcomm.bounds/1";
inline constexpr const char* witness_schema = "relcomm.witness/1";
inline constexpr const char* invariance_schema = "relcomm.invariance/1";
inline constexpr const char* verify_schema = "relcomm.verify/1";

namespace detail {

inline Json big_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(v));
  return Json(v.str());
}

inline BigInt big_from_json(const Json& j) {
  if (j.is_number_integer())
    return BigInt(j.get<std::int64_t>());
  if (j.is_string())
    return BigInt(j.get<std::string>());
  fail(Errc::parse_error, "expected an integer, got " + j.dump());
}

} // namespace detail

inline Json fraction_json(const ExactRatio& r) {
  return Json{{"num", detail::big_json(r.num())}, {"den", detail::big_json(r.den())}};
}

inline ExactRatio fraction_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    fail(Errc::parse_error, "fraction must be {\"num\", \"den\"}: " + j.dump());
  return ExactRatio(detail::big_from_json(j.at("num")), detail::big_from_json(j.at("den")));
}

// "5/8 (0.625000)" for human tables.
inline std::string fraction_text(const ExactRatio& r) {
  return r.str() + " (" + r.decimal(6) + ")";
}

// RFC 4180 quoting when the field needs it.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s)
    out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline std::string element_name(const GroupTable& g, Elem x) {
  return g.labels().empty() ? std::to_string(x) : g.label(x);
}

// ---- stats ----------------------------------------------------------------

struct StatsReport {
  std::string pair_id;
  PairProfile profile;
  ExactRatio pr;
  std::vector<std::pair<Elem, ExactRatio>> pr_g;  // every g with Pr_g > 0, by index
  std::vector<std::string> labels;                // display names for pr_g entries
  std::vector<std::uint64_t> type_vector;         // H = G only
};

inline StatsReport make_stats_report(const SubgroupView& h, const ConjugacyPartition& cp,
                                     std::string pair_id) {
  const GroupTable& g = h.parent();
  StatsReport rep;
  rep.pair_id = std::move(pair_id);
  rep.profile = pair_profile(h, cp);
  auto hist = commutator_histogram(h);
  const BigInt total = BigInt(h.order()) * g.order();
  rep.pr = ExactRatio(BigInt(hist[GroupTable::identity]), total);
  for (Elem x = 0; x < g.order(); ++x)
    if (hist[x]) {
      rep.pr_g.emplace_back(x, ExactRatio(BigInt(hist[x]), total));
      rep.labels.push_back(element_name(g, x));
    }
  if (rep.profile.whole())
    rep.type_vector = conjugate_type_vector(cp);
  return rep;
}

inline Json profile_json(const PairProfile& pp) {
  Json j;
  j["z_order"] = pp.z_order();
  j["k_size"] = pp.k_size();
  j["derived_pair_order"] = pp.derived_pair_order();
  j["index_h_z"] = pp.index_h_z;
  j["class_sizes"] = pp.cs;
  j["s_h"] = pp.s_h ? Json(*pp.s_h) : Json(nullptr);
  j["l_h"] = pp.l_h ? Json(*pp.l_h) : Json(nullptr);
  j["smallest_prime"] = pp.smallest_prime ? Json(*pp.smallest_prime) : Json(nullptr);
  j["normal"] = pp.normal;
  return j;
}

inline Json stats_json(const std::vector<StatsReport>& reps) {
  Json pairs = Json::array();
  for (const auto& r : reps) {
    Json j;
    j["pair"] = r.pair_id;
    j["group_order"] = r.profile.group_order;
    j["subgroup_order"] = r.profile.subgroup_order;
    j["pr"] = fraction_json(r.pr);
    j["profile"] = profile_json(r.profile);
    Json pg = Json::array();
    for (std::size_t i = 0; i < r.pr_g.size(); ++i)
      pg.push_back(Json{{"g", r.pr_g[i].first}, {"label", r.labels[i]},
                        {"pr", fraction_json(r.pr_g[i].second)}});
    j["pr_g"] = std::move(pg);
    if (!r.type_vector.empty()) {
      j["conjugate_type_vector"] = r.type_vector;
      j["conjugate_rank"] = r.type_vector.size() - 1;
    }
    pairs.push_back(std::move(j));
  }
  return Json{{"schema", stats_schema}, {"pairs", std::move(pairs)}};
}

inline void stats_csv(std::ostream& out, const std::vector<StatsReport>& reps) {
  out << "pair,group_order,subgroup_order,pr,z_order,k_size,derived_pair_order,index_h_z,s_h,l_h\n";
  for (const auto& r : reps) {
    const auto& pp = r.profile;
    out << csv_field(r.pair_id) << ',' << pp.group_order << ',' << pp.subgroup_order << ',' << r.pr.str()
        << ',' << pp.z_order() << ',' << pp.k_size() << ',' << pp.derived_pair_order() << ','
        << pp.index_h_z << ',' << (pp.s_h ? std::to_string(*pp.s_h) : "") << ','
        << (pp.l_h ? std::to_string(*pp.l_h) : "") << '\n';
  }
}

inline void stats_table(std::ostream& out, const std::vector<StatsReport>& reps) {
  for (const auto& r : reps) {
    const auto& pp = r.profile;
    out << r.pair_id << "  |G| = " << pp.group_order << "  |H| = " << pp.subgroup_order << '\n';
    out << "  Pr(H,G)        " << fraction_text(r.pr) << '\n';
    out << "  |Z(H,G)|       " << pp.z_order() << '\n';
    out << "  |K(G,H)|       " << pp.k_size() << '\n';
    out << "  |[G,H]|        " << pp.derived_pair_order() << '\n';
    out << "  |H:Z(H,G)|     " << pp.index_h_z << '\n';
    out << "  cs(G,H)        {";
    for (std::size_t i = 0; i < pp.cs.size(); ++i)
      out << (i ? ", " : "") << pp.cs[i];
    out << "}\n";
    if (!r.type_vector.empty()) {
      out << "  type vector    (";
      for (std::size_t i = 0; i < r.type_vector.size(); ++i)
        out << (i ? ", " : "") << r.type_vector[i];
      out << ")  crk = " << r.type_vector.size() - 1 << '\n';
    }
    for (std::size_t i = 0; i < r.pr_g.size(); ++i)
      out << "  Pr_g  g = " << std::left << std::setw(12) << r.labels[i] << std::right << ' '
          << fraction_text(r.pr_g[i].second) << '\n';
  }
}

// ---- bounds ---------------------------------------------------------------

inline Json bound_report_json(const BoundReport& r) {
  Json j;
  j["pair"] = r.pair_id;
  j["group_order"] = r.group_order;
  j["subgroup_order"] = r.subgroup_order;
  j["pr"] = fraction_json(r.pr);
  j["profile"] = profile_json(r.profile);
  Json bounds = Json::array();
  for (const auto& b : r.bounds)
    bounds.push_back(Json{{"name", b.name},
                          {"value", b.value ? fraction_json(*b.value) : Json(nullptr)},
                          {"hypothesis", b.hypothesis},
                          {"hypothesis_met", b.hypothesis_met},
                          {"attained", b.attained}});
  j["bounds"] = std::move(bounds);
  if (r.equality)
    j["equality_conditions"] = Json{{"cond_i", r.equality->cond_i},
                                    {"cond_ii", r.equality->cond_ii},
                                    {"cond_iii", r.equality->cond_iii}};
  else
    j["equality_conditions"] = nullptr;
  j["camina"] = Json{{"camina", r.camina.camina}, {"abelian", r.camina.abelian}};
  if (r.verdict)
    j["verdict"] = Json{{"solvable_or_a5", r.verdict->solvable_or_a5},
                        {"a5_branch_possible", r.verdict->a5_branch_possible},
                        {"supersolvable", r.verdict->supersolvable},
                        {"odd_supersolvable", r.verdict->odd_supersolvable},
                        {"conclusions", r.verdict->conclusions}};
  else
    j["verdict"] = nullptr;
  auto closed = [](const std::optional<ClosedFormReport>& c) -> Json {
    if (!c)
      return nullptr;
    Json e = Json::array();
    for (const auto& x : c->entries)
      e.push_back(Json{{"g", x.g}, {"brute", fraction_json(x.brute)},
                       {"closed", fraction_json(x.closed)}, {"match", x.match}});
    return Json{{"p", c->p}, {"index_h_z", c->index_h_z}, {"entries", std::move(e)}};
  };
  j["nilpotent_closed_form"] = closed(r.nilpotent_form);
  j["smallest_prime_closed_form"] = closed(r.smallest_prime_form);
  j["violations"] = r.violations;
  return j;
}

inline Json bounds_json(const std::vector<BoundReport>& reps) {
  Json pairs = Json::array();
  std::size_t violations = 0;
  for (const auto& r : reps) {
    pairs.push_back(bound_report_json(r));
    violations += r.violations.size();
  }
  return Json{{"schema", bounds_schema}, {"pairs", std::move(pairs)}, {"violations", violations}};
}

inline void bounds_csv(std::ostream& out, const std::vector<BoundReport>& reps) {
  out << "pair,group_order,subgroup_order,pr";
  for (const auto& n : bound_names())
    out << ',' << n << ',' << n << "_hypothesis_met";
  out << ",cond_i,cond_ii,cond_iii,violations\n";
  auto flag = [](bool b) { return b ? "true" : "false"; };
  for (const auto& r : reps) {
    out << csv_field(r.pair_id) << ',' << r.group_order << ',' << r.subgroup_order << ',' << r.pr.str();
    for (const auto& n : bound_names()) {
      const auto& b = r.bound(n);
      out << ',' << (b.value ? b.value->str() : "") << ',' << flag(b.hypothesis_met);
    }
    if (r.equality)
      out << ',' << flag(r.equality->cond_i) << ',' << flag(r.equality->cond_ii) << ','
          << flag(r.equality->cond_iii);
    else
      out << ",,,";
    out << ',' << r.violations.size() << '\n';
  }
}

inline void bounds_table(std::ostream& out, const std::vector<BoundReport>& reps) {
  for (const auto& r : reps) {
    out << r.pair_id << "  |G| = " << r.group_order << "  |H| = " << r.subgroup_order
        << "  Pr = " << fraction_text(r.pr) << '\n';
    for (const auto& b : r.bounds) {
      out << "  " << std::left << std::setw(18) << b.name << std::right;
      if (b.value)
        out << std::left << std::setw(28) << fraction_text(*b.value) << std::right;
      else
        out << std::left << std::setw(28) << "-" << std::right;
      out << (b.hypothesis_met ? "applies" : "n/a    ") << (b.attained ? "  attained" : "") << '\n';
    }
    if (r.equality)
      out << "  equality conditions  (i) " << r.equality->cond_i << "  (ii) " << r.equality->cond_ii
          << "  (iii) " << r.equality->cond_iii << '\n';
    if (r.verdict)
      for (const auto& c : r.verdict->conclusions)
        out << "  verdict: " << c << '\n';
    if (r.nilpotent_form)
      out << "  nilpotent closed form (p = " << r.nilpotent_form->p << "): "
          << (r.nilpotent_form->all_match() ? "matches" : "MISMATCH") << '\n';
    if (r.smallest_prime_form)
      out << "  smallest-prime closed form (p = " << r.smallest_prime_form->p << "): "
          << (r.smallest_prime_form->all_match() ? "matches" : "MISMATCH") << '\n';
    for (const auto& v : r.violations)
      out << "  VIOLATION " << v << '\n';
  }
}

// ---- isoclinism -----------------------------------------------------------

inline Json witness_json(const IsoclinismWitness& w, const std::string& pair1,
                         const std::string& pair2, const PairContext& p1, const PairContext& p2) {
  return Json{{"schema", witness_schema},
              {"pair1", pair1},
              {"pair2", pair2},
              {"quotient_order", p1.quotient_order()},
              {"h_image_order", p1.h_bar.size()},
              {"commutator_subgroup_order", p1.derived.order()},
              {"alpha_codomain_order", p2.quotient_order()},
              {"alpha", w.alpha},
              {"beta_domain", w.beta_domain},
              {"beta", w.beta}};
}

inline IsoclinismWitness witness_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != witness_schema)
    fail(Errc::parse_error, std::string("witness JSON must carry schema ") + witness_schema);
  try {
    IsoclinismWitness w;
    w.alpha = j.at("alpha").get<std::vector<Elem>>();
    w.beta_domain = j.at("beta_domain").get<std::vector<Elem>>();
    w.beta = j.at("beta").get<std::vector<Elem>>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::parse_error, std::string("malformed witness: ") + e.what());
  }
}

inline Json invariance_json(const InvarianceReport& rep, const GroupTable& g1, const GroupTable& g2) {
  Json entries = Json::array();
  for (const auto& e : rep.entries)
    entries.push_back(Json{{"g", e.g},
                           {"g_label", element_name(g1, e.g)},
                           {"beta_g", e.beta_g},
                           {"beta_g_label", element_name(g2, e.beta_g)},
                           {"pr1", fraction_json(e.pr1)},
                           {"pr2", fraction_json(e.pr2)},
                           {"equal", e.equal}});
  return Json{{"schema", invariance_schema}, {"all_equal", rep.all_equal()},
              {"entries", std::move(entries)}};
}

inline void invariance_table(std::ostream& out, const InvarianceReport& rep, const GroupTable& g1,
                             const GroupTable& g2) {
  out << std::left << std::setw(14) << "g" << std::setw(14) << "beta(g)" << std::setw(24)
      << "Pr_g(H1,G1)" << std::setw(24) << "Pr_beta(g)(H2,G2)" << "equal" << std::right << '\n';
  for (const auto& e : rep.entries)
    out << std::left << std::setw(14) << element_name(g1, e.g) << std::setw(14)
        << element_name(g2, e.beta_g) << std::setw(24) << fraction_text(e.pr1) << std::setw(24)
        << fraction_text(e.pr2) << (e.equal ? "yes" : "NO") << std::right << '\n';
}

} // namespace relcomm

#endif
