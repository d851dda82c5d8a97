// qpath: command line front end for the path algebra and chromatic tools.

#include "qpath/chromatic.hpp"
#include "qpath/klyachko.hpp"
#include "qpath/pathalg.hpp"
#include "qpath/qhit.hpp"
#include "qpath/series.hpp"
#include "qpath/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

using json = nlohmann::ordered_json;
using namespace qpath;

namespace {

struct Common {
  std::string format = "text";
  std::string q;
};

std::optional<mpq_class> q_value(const Common& c) {
  if (c.q.empty()) return std::nullopt;
  mpq_class x;
  if (x.set_str(c.q, 10) != 0) throw CLI::ValidationError("--q", "not a rational number: " + c.q);
  x.canonicalize();
  return x;
}

std::string eval_string(const QRat& x, const mpq_class& at) {
  try {
    return x.eval(at).get_str();
  } catch (const std::domain_error&) {
    return "undefined";
  }
}

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument("bad integer list: " + s);
    out.push_back(v);
  }
  return out;
}

// Prints a coefficient vector, indexed from 0, with an optional evaluation.
void emit_coeffs(const Common& c, json head, const std::vector<QRat>& coeffs) {
  const auto at = q_value(c);
  if (c.format == "json") {
    json arr = json::array();
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      json e{{"index", k}, {"value", coeffs[k].to_string()}};
      if (at) e["at_q"] = eval_string(coeffs[k], *at);
      arr.push_back(e);
    }
    head["coeffs"] = arr;
    if (at) head["q"] = at->get_str();
    std::cout << head.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : head.items()) std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    std::cout << "[" << k << "] " << coeffs[k].to_string();
    if (at) std::cout << "  (q=" << at->get_str() << ": " << eval_string(coeffs[k], *at) << ")";
    std::cout << "\n";
  }
}

std::vector<QRat> rats(const std::vector<QPoly>& xs) { return {xs.begin(), xs.end()}; }

int cmd_expand(const Common& c, const std::string& basis, const std::string& word, const std::string& method) {
  const Word w(word);
  json head{{"word", w.to_string()}, {"grade", {w.m(), w.n()}}, {"basis", basis}};
  std::vector<QRat> coeffs;
  if (basis == "staircase") {
    coeffs = rats(default_engine().expand(w));
    head["m_w"] = max_staircase_index(w);
  } else if (basis == "rectangular") {
    head["convention"] = method;
    if (method == "gf") {
      coeffs = expand_rectangular(w);
    } else {
      const Word v = w.m() >= w.n() ? w : eta(w);
      const BoxPartition lam = word_to_partition(v);
      const QPoly d = qfalling(v.m(), v.n());
      for (int k = 0; k <= v.n(); ++k) coeffs.emplace_back(qhit_rook_stat(lam, k), d);
    }
  } else {
    coeffs = expand_zigzag_any(w);
  }
  emit_coeffs(c, head, coeffs);
  return 0;
}

int cmd_qhit(const Common& c, const std::string& box, const std::string& shape, std::optional<int> k, const std::string& method,
             bool placements) {
  const BoxPartition lam = BoxPartition::parse(shape, box);
  const int m = lam.rows();
  const int n = lam.width;
  std::vector<QPoly> h;
  if (method == "gf") {
    h = qhit_rect(lam);
  } else {
    for (int j = 0; j <= std::min(m, n); ++j) h.push_back(qhit_rook_stat(lam, j));
  }
  json head{{"box", box}, {"shape", shape}, {"convention", method}};
  if (k) {
    if (*k < 0 || *k >= static_cast<int>(h.size())) throw CLI::ValidationError("--k", "out of range");
    head["k"] = *k;
    h = {h[static_cast<std::size_t>(*k)]};
  }
  if (!placements) {
    emit_coeffs(c, head, rats(h));
    return 0;
  }
  json list = json::array();
  for (int j = 0; j <= std::min(m, n); ++j) {
    if (k && j != *k) continue;
    for (const auto& p : enumerate_placements(lam, j)) {
      json rooks = json::array();
      for (const auto& [r, col] : p.rooks) rooks.push_back({r, col});
      list.push_back({{"k", j}, {"rooks", rooks}, {"stat", rook_stat(lam, p)}});
    }
  }
  if (c.format == "json") {
    json hv = json::array();
    for (const auto& x : h) hv.push_back(x.to_string());
    head["values"] = hv;
    head["placements"] = list;
    std::cout << head.dump(2) << "\n";
  } else {
    for (const auto& p : list) std::cout << "k=" << p["k"].get<int>() << " rooks=" << p["rooks"].dump() << " stat=" << p["stat"].get<int>() << "\n";
  }
  return 0;
}

int cmd_remixed(const Common& c, const std::string& alpha, std::optional<int> m) {
  const auto a = parse_ints(alpha);
  int total = 0;
  for (int x : a) total += x;
  const auto coeffs = remixed_connected(a, m.value_or(total));
  emit_coeffs(c, json{{"alpha", composition_string(a)}, {"m", m.value_or(total)}}, rats(coeffs));
  return 0;
}

int cmd_klyachko(const Common& c, const std::string& shape, const std::string& box) {
  const BoxPartition lam = BoxPartition::parse(shape, box);
  const IntervalExpansion e = expand_u_lambda(lam);
  json head{{"monomial", u_lambda(lam).to_string()}, {"degree", e.degree}};
  json nums = json::array();
  for (const auto& x : e.numerators) nums.push_back(x.to_string());
  head["numerators"] = nums;
  emit_coeffs(c, head, e.coeffs);
  return 0;
}

int cmd_csf(const Common& c, const std::string& word, const std::string& basis, const std::string& weight) {
  const DyckGraph g = DyckGraph::from_word(Word(word));
  const QSymF x = csf(g, weight == "ascents" ? Weight::Ascents : Weight::Descents, std::max(g.n(), kDefaultBound));
  const auto at = q_value(c);
  std::vector<std::pair<std::string, QRat>> rows;
  if (basis == "M") {
    for (const auto& [a, v] : x.terms) rows.emplace_back("M" + composition_string(a), QRat(v));
  } else if (basis == "m") {
    std::pair<Composition, Composition> wit;
    if (!is_symmetric(x, &wit)) throw std::logic_error("not symmetric: M" + composition_string(wit.first) + " vs M" + composition_string(wit.second));
    for (const auto& p : partitions(g.n())) {
      const QPoly v = x.coeff(p);
      if (!v.is_zero()) rows.emplace_back("m" + composition_string(p), QRat(v));
    }
  } else {
    for (const auto& [p, v] : to_e_basis(x).terms) rows.emplace_back("e" + composition_string(p), v);
  }
  if (c.format == "json") {
    json terms = json::array();
    for (const auto& [k, v] : rows) {
      json e{{"basis_element", k}, {"value", v.to_string()}};
      if (at) e["at_q"] = eval_string(v, *at);
      terms.push_back(e);
    }
    std::cout << json{{"graph", g.to_string()}, {"word", g.word().to_string()}, {"basis", basis}, {"weight", weight}, {"terms", terms}}.dump(2)
              << "\n";
  } else {
    std::cout << "graph: " << g.to_string() << "\n";
    for (const auto& [k, v] : rows) {
      std::cout << k << ": " << v.to_string();
      if (at) std::cout << "  (q=" << at->get_str() << ": " << eval_string(v, *at) << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_orient(const Common& c, const std::string& word, bool stats) {
  const DyckGraph g = DyckGraph::from_word(Word(word));
  const auto os = acyclic_orientations(g, std::max(g.n(), kDefaultBound));
  if (stats) {
    std::map<int, QPoly> by_sources;
    std::map<int, QPoly> by_initial;
    for (const auto& o : os) {
      by_sources[o.sources] += QPoly::monomial(1, o.ascents);
      by_initial[o.initial] += QPoly::monomial(1, o.ascents);
    }
    if (c.format == "json") {
      json s = json::object();
      json i = json::object();
      for (const auto& [k, v] : by_sources) s[std::to_string(k)] = v.to_string();
      for (const auto& [k, v] : by_initial) i[std::to_string(k)] = v.to_string();
      std::cout << json{{"graph", g.to_string()}, {"count", os.size()}, {"by_sources", s}, {"by_initial", i}}.dump(2) << "\n";
    } else {
      std::cout << "graph: " << g.to_string() << "\norientations: " << os.size() << "\n";
      for (const auto& [k, v] : by_sources) std::cout << "sources=" << k << ": " << v.to_string() << "\n";
      for (const auto& [k, v] : by_initial) std::cout << "initial=" << k << ": " << v.to_string() << "\n";
    }
    return 0;
  }
  json list = json::array();
  for (const auto& o : os) {
    json arcs = json::array();
    for (std::size_t e = 0; e < g.edges().size(); ++e) {
      auto [i, j] = g.edges()[e];
      if ((o.reversed >> e) & 1U) std::swap(i, j);
      arcs.push_back({i, j});
    }
    list.push_back({{"arcs", arcs}, {"ascents", o.ascents}, {"sources", o.sources}, {"source_sequence", o.source_sequence}, {"initial", o.initial}});
  }
  if (c.format == "json") {
    std::cout << json{{"graph", g.to_string()}, {"orientations", list}}.dump(2) << "\n";
  } else {
    std::cout << "graph: " << g.to_string() << "\n";
    for (const auto& o : list)
      std::cout << "arcs=" << o["arcs"].dump() << " asc=" << o["ascents"].get<int>() << " src=" << o["sources"].get<int>()
                << " seq=" << o["source_sequence"].dump() << " initial=" << o["initial"].get<int>() << "\n";
  }
  return 0;
}

json report_json(const VerifyReport& r) {
  return {{"identity", r.identity}, {"instance", r.instance}, {"status", r.pass ? "pass" : "fail"}, {"left", r.left}, {"right", r.right}};
}

void print_failure(const VerifyReport& r) {
  std::cout << "FAIL " << r.identity << " " << r.instance << "\n  left:  " << r.left << "\n  right: " << r.right << "\n";
}

int cmd_verify(const Common& c, const std::string& identity, bool all, int max) {
  std::vector<std::string> names;
  if (all) {
    names = suite_names();
  } else if (!identity.empty()) {
    names = {identity};
  } else {
    throw CLI::ValidationError("verify", "name an identity or pass --all");
  }
  std::vector<SuiteResult> results;
  for (const auto& name : names) results.push_back(run_suite(name, max));
  const VerifyReport* first = nullptr;
  for (const auto& r : results)
    if (!first) first = r.first_failure();

  if (c.format == "json") {
    json suites = json::array();
    for (const auto& r : results) {
      json reports = json::array();
      for (const auto& rep : r.reports) reports.push_back(report_json(rep));
      json s{{"identity", r.identity}, {"bound", r.bound}, {"convention", "gf"}, {"instances", r.reports.size()}, {"failures", r.failures()},
             {"skipped", r.skipped}, {"reports", reports}};
      if (r.identity == "abelian-triple") s["ascent_sequence"] = "a_i = #{j > i : {i,j} in E}";
      suites.push_back(s);
    }
    json out{{"suites", suites}, {"ok", first == nullptr}};
    if (first) out["first_failure"] = report_json(*first);
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.ok() ? "PASS " : "FAIL ") << r.identity << " bound=" << r.bound << " instances=" << r.reports.size()
                << " failures=" << r.failures() << " skipped=" << r.skipped.size() << "\n";
      if (r.identity == "abelian-triple") std::cout << "  ascent sequence: a_i = #{j > i : {i,j} in E}\n";
    }
    std::cout << "convention: gf\n";
    if (first) print_failure(*first);
  }
  return first ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-path algebra, q-hit numbers and chromatic quasisymmetric functions"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--q", common.q, "Also evaluate at this rational q");
  };

  std::string basis = "staircase";
  std::string word;
  std::string method = "gf";
  auto* expand = app.add_subcommand("expand", "Expand a word in the staircase, rectangular or zigzag basis");
  expand->add_option("--basis", basis)->check(CLI::IsMember({"staircase", "rectangular", "zigzag"}));
  expand->add_option("--word", word)->required();
  expand->add_option("--method", method, "q-hit convention for the rectangular basis")->check(CLI::IsMember({"gf", "stat"}));
  add_common(expand);

  std::string box;
  std::string shape;
  std::optional<int> k;
  bool placements = false;
  auto* qhit = app.add_subcommand("qhit", "q-hit numbers of a Ferrers board in a box");
  qhit->add_option("--box", box)->required();
  qhit->add_option("--shape", shape)->required();
  qhit->add_option("--k", k);
  qhit->add_option("--method", method)->check(CLI::IsMember({"gf", "stat"}));
  qhit->add_flag("--placements", placements, "List placements with their statistic");
  add_common(qhit);

  std::string alpha;
  std::optional<int> m;
  auto* remixed = app.add_subcommand("remixed", "Connected remixed Eulerian numbers");
  remixed->add_option("--alpha", alpha)->required();
  remixed->add_option("--m", m);
  add_common(remixed);

  auto* kly = app.add_subcommand("klyachko-expand", "Interval expansion of u(lambda)");
  kly->add_option("--shape", shape)->required();
  kly->add_option("--box", box)->required();
  add_common(kly);

  std::string sym_basis = "M";
  std::string weight = "ascents";
  auto* csf_cmd = app.add_subcommand("csf", "Chromatic quasisymmetric function of a Dyck graph");
  csf_cmd->add_option("--word", word)->required();
  csf_cmd->add_option("--basis", sym_basis)->check(CLI::IsMember({"M", "m", "e"}));
  csf_cmd->add_option("--weight", weight)->check(CLI::IsMember({"ascents", "descents"}));
  add_common(csf_cmd);

  bool stats = false;
  auto* orient = app.add_subcommand("orient", "Acyclic orientations of a Dyck graph");
  orient->add_option("--word", word)->required();
  orient->add_flag("--stats", stats);
  add_common(orient);

  std::string identity;
  bool all = false;
  int max = 0;
  auto* verify = app.add_subcommand("verify", "Run identity suites");
  std::string names;
  for (const auto& n : suite_names()) names += (names.empty() ? "" : ", ") + n;
  verify->add_option("identity", identity, "One of: " + names)->check(CLI::IsMember(suite_names()));
  verify->add_flag("--all", all);
  verify->add_option("--max", max, "Enumeration bound (default per suite)")->check(CLI::NonNegativeNumber);
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*expand) return cmd_expand(common, basis, word, method);
    if (*qhit) return cmd_qhit(common, box, shape, k, method, placements);
    if (*remixed) return cmd_remixed(common, alpha, m);
    if (*kly) return cmd_klyachko(common, shape, box);
    if (*csf_cmd) return cmd_csf(common, word, sym_basis, weight);
    if (*orient) return cmd_orient(common, word, stats);
    if (*verify) return cmd_verify(common, identity, all, max);
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
