#pragma once

#include <atomic>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cdgor/cdgor.hpp"

namespace cdgor::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kFalse = 1, kError = 2 };

namespace detail {

inline std::vector<BigInt> parse_list(const std::string& text, std::size_t count, const std::string& what) {
  std::vector<BigInt> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t"), e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw Error(ErrorCode::ParseError, what + ": empty entry");
    item = item.substr(b, e - b + 1);
    if (item.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::ParseError, what + ": '" + item + "' is not a nonnegative integer");
    out.emplace_back(item);
  }
  if (out.size() != count)
    throw Error(ErrorCode::ParseError, what + " expects " + std::to_string(count) + " comma-separated integers");
  return out;
}

/// Parses "1,X,Y" and returns (X, Y).
inline std::pair<BigInt, BigInt> parse_one_x_y(const std::string& text, const std::string& what) {
  auto v = parse_list(text, 3, what);
  if (v[0] != 1) throw Error(ErrorCode::ParseError, what + " must start with 1");
  return {v[1], v[2]};
}

inline std::string join_big(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].str();
  return s + ")";
}

inline Json big_array(const std::vector<BigInt>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.str());
  return a;
}

inline std::string face_string(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + "}";
}

inline std::string mask_string(std::uint32_t mask, int n) {
  std::string s = "{";
  bool first = true;
  for (int i = 0; i < n; ++i)
    if (mask >> i & 1) {
      s += (first ? "" : ",") + std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

/// Ordered key/value report printed as "key: value" lines or as one JSON object.
struct Report {
  Json body = Json::object();
  void print(std::ostream& os, bool as_json) const {
    if (as_json) {
      os << body.dump(2) << "\n";
      return;
    }
    for (const auto& [k, v] : body.items()) {
      if (v.is_string()) os << k << ": " << v.get<std::string>() << "\n";
      else if (v.is_array() && !v.empty() && v.front().is_string() && k == "trace") {
        os << k << ":\n";
        for (const auto& line : v) os << "  " << line.get<std::string>() << "\n";
      } else os << k << ": " << v.dump() << "\n";
    }
  }
};

inline std::string homology_summary(const SphereReport& rep) {
  std::string s;
  for (int d = -1; d <= rep.whole.dim; ++d) {
    const auto& t = rep.whole.torsion[static_cast<std::size_t>(d + 1)];
    s += (d > -1 ? " " : "") + std::string("H") + std::to_string(d) + "=" + rep.whole.betti_at(d).str();
    for (const auto& v : t) s += "+Z/" + v.str();
  }
  return s;
}

/// Adds homology lines; returns false on a failed certification. Over-budget inputs are "skipped".
inline bool add_homology(Report& r, const SimplicialComplex& d, std::size_t budget) {
  if (!d.is_pure()) {
    r.body["homology"] = "fail (complex is not pure)";
    return false;
  }
  if (d.face_count() > budget) {
    r.body["homology"] = "skipped (" + std::to_string(d.face_count()) + " faces exceed budget " +
                         std::to_string(budget) + ")";
    return true;
  }
  const SphereReport rep = sphere_report(d, budget);
  r.body["reduced homology"] = homology_summary(rep);
  r.body["links checked"] = std::to_string(rep.links_checked);
  if (rep.ok()) {
    r.body["homology"] = "pass (homology sphere)";
    return true;
  }
  Json bad = Json::array();
  for (const auto& f : rep.failures) bad.push_back(face_string(f));
  r.body["homology"] = "fail";
  r.body["failing links"] = bad;
  return false;
}

inline std::size_t resolve_budget(std::optional<std::size_t> flag) { return flag ? *flag : default_face_budget(); }

/// Emits a document to --out or stdout; when it goes to stdout the report moves to stderr.
struct Emitter {
  std::string out_path;
  std::string trace_path;
  std::ostream& out;
  std::ostream& err;

  std::ostream& report_stream() const { return out_path.empty() ? err : out; }

  void emit(const std::string& document, const std::vector<std::string>& trace, Report& r) const {
    if (out_path.empty()) out << document;
    else io::write_file(out_path, document);
    if (!trace_path.empty()) {
      std::string text;
      for (const auto& line : trace) text += line + "\n";
      io::write_file(trace_path, text);
    } else {
      r.body["trace"] = trace;
    }
  }
};

// ---- grid -----------------------------------------------------------------------

struct GridRow {
  std::string target;
  std::string verdict;
  std::string check;     // pass / fail / -
  std::string homology;  // pass / fail / skipped / -
  std::string note;
};

/// Runs `tasks` over `jobs` worker threads; results keep the task order.
inline std::vector<GridRow> run_pool(const std::vector<std::function<GridRow()>>& tasks, unsigned jobs) {
  std::vector<GridRow> rows(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        rows[i] = tasks[i]();
      } catch (const std::exception& e) {
        rows[i].check = "fail";
        rows[i].note = e.what();
      }
    }
  };
  jobs = std::max(1u, jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

inline std::string homology_cell(const SimplicialComplex& d, std::size_t budget, bool enabled) {
  if (!enabled || d.face_count() > budget) return "skipped";
  return is_homology_sphere(d, budget) ? "pass" : "fail";
}

inline std::vector<std::function<GridRow()>> grid_tasks(const std::string& suite, int max, std::size_t budget,
                                                       bool homology) {
  std::vector<std::function<GridRow()>> tasks;
  if (suite == "rank5-cd") {
    for (int a1 = 0; a1 <= max; ++a1)
      for (int a2 = 0; a2 <= max; ++a2)
        for (int a3 = 0; a3 <= max; ++a3)
          for (int a13 = 0; a13 <= a1 * a3 + 2; ++a13)
            tasks.emplace_back([=] {
              const Rank5Coeffs t{a1, a2, a3, a13};
              GridRow row{"(" + std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(a3) + "," +
                              std::to_string(a13) + ")",
                          "", "-", "-", ""};
              const Feasibility f = feasible_rank5_cd(t);
              row.verdict = to_string(f.verdict);
              if (!f.feasible()) return row;
              const GradedPoset p = realize_rank5_cd(t);
              const FlagVector fv = flag_f(p);
              const bool eq1 = fv.at(rank_mask({2, 3})) == t.a13 + 2 * (t.a1 + t.a2 + t.a3) + 4;
              row.check = cd_index(p) == from_rank5(t) && eq1 && is_thin(p) ? "pass" : "fail";
              row.homology = homology_cell(order_complex(p), budget, homology);
              return row;
            });
  } else if (suite == "rank5-d" || suite == "rank6-d") {
    const bool six = suite == "rank6-d";
    for (int x = 0; x <= max; ++x)
      for (int y = 0; 4 * y <= x * x + 4; ++y)
        tasks.emplace_back([=] {
          GridRow row{"(1," + std::to_string(x) + "," + std::to_string(y) + ")", "", "-", "-", ""};
          const bool ok = six ? feasible_rank6_d(x, y) : feasible_rank5_d(x, y).feasible;
          row.verdict = ok ? "feasible" : "infeasible";
          if (!ok) return row;
          const GradedPoset p = six ? realize_rank6_d(x, y) : realize_rank5_d(x, y);
          const DVector dv = d_vector(cd_index(p));
          row.check = dv == DVector{{1, x, y}} ? "pass" : "fail";
          row.homology = homology_cell(order_complex(p), budget, homology);
          return row;
        });
  } else if (suite == "gamma4") {
    for (int x = 0; x <= max; ++x)
      for (int y = 0; 4 * y <= x * x + 4; ++y)
        tasks.emplace_back([=] {
          GridRow row{"(1," + std::to_string(x) + "," + std::to_string(y) + ")", "", "-", "-", ""};
          const bool ok = feasible_gamma4(x, y);
          row.verdict = ok ? "feasible" : "infeasible";
          if (!ok) return row;
          const SimplicialComplex k = build_flag_gamma4(x, y);
          row.check = is_flag(k) && gamma_vector(k) == GammaVector{{1, x, y}} ? "pass" : "fail";
          row.homology = homology_cell(k, budget, homology);
          return row;
        });
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown suite " + suite);
  }
  return tasks;
}

}  // namespace detail

/// Runs the command line; returns 0 on success/feasible/true, 1 on infeasible/false, 2 on error.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using namespace detail;
  CLI::App app{"Flag vectors, cd-indices and constructions for Gorenstein* posets and flag spheres", "cdgor"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));

  // realize-cd
  auto* rcd = app.add_subcommand("realize-cd", "Realize a rank-5 cd-index c^4+a1 dc^2+a2 cdc+a3 c^2d+a13 d^2");
  std::string alpha, out_path, trace_path;
  bool verify = false;
  std::optional<std::size_t> budget;
  rcd->add_option("--alpha", alpha, "A1,A2,A3,A13")->required();
  // realize-d
  auto* rd = app.add_subcommand("realize-d", "Realize a rank-5 or rank-6 d-vector");
  int rank = 5;
  std::string dvec;
  rd->add_option("--rank", rank, "Poset rank")->required()->check(CLI::IsMember({5, 6}));
  rd->add_option("--d", dvec, "1,X,Y")->required();
  // flag-sphere
  auto* fs = app.add_subcommand("flag-sphere", "Build a flag homology 4-sphere with gamma-vector (1,X,Y)");
  std::string gamma;
  fs->add_option("--gamma", gamma, "1,X,Y")->required();
  for (auto* sc : {rcd, rd, fs}) {
    sc->add_option("--out", out_path, "Write the result here instead of stdout");
    sc->add_flag("--verify", verify, "Re-read the emitted document and certify it");
    sc->add_option("--trace", trace_path, "Write the construction trace to this file");
    sc->add_option("--budget", budget, "Face budget for homology");
  }
  // invariants
  auto* inv = app.add_subcommand("invariants", "Flag f/h, ab-index, cd-index, d-vector; or f/h/gamma of a complex");
  std::string file;
  inv->add_option("FILE", file, "Poset or complex document")->required();
  // verify
  auto* ver = app.add_subcommand("verify", "Validate a document and optionally certify homology");
  bool homology = false;
  ver->add_option("FILE", file, "Poset or complex document")->required();
  ver->add_flag("--homology", homology, "Run the full-link homology-sphere test");
  ver->add_option("--budget", budget, "Face budget for homology");
  // feasible
  auto* fe = app.add_subcommand("feasible", "Feasibility predicates with witnesses");
  std::string f_r5cd, f_r5d, f_r6d, f_g4;
  int compare = 0, compare_max = 8;
  auto* o1 = fe->add_option("--rank5-cd", f_r5cd, "A1,A2,A3,A13");
  auto* o2 = fe->add_option("--rank5-d", f_r5d, "X,Y");
  auto* o3 = fe->add_option("--rank6-d", f_r6d, "X,Y");
  auto* o4 = fe->add_option("--gamma4", f_g4, "X,Y");
  auto* o5 = fe->add_option("--compare", compare, "Tabulate the d-vector and gamma predicates for k = 3 or 4")
                 ->check(CLI::IsMember({3, 4}));
  auto* omax = fe->add_option("--max", compare_max, "Largest x in --compare");
  for (auto* a : {o1, o2, o3, o4, o5})
    for (auto* b : {o1, o2, o3, o4, o5})
      if (a != b) a->excludes(b);
  omax->needs(o5);
  fe->callback([=] {
    std::size_t given = 0;
    for (auto* o : {o1, o2, o3, o4, o5}) given += o->count() > 0;
    if (given != 1)
      throw CLI::RequiredError("exactly one of --rank5-cd, --rank5-d, --rank6-d, --gamma4, --compare");
  });
  // grid
  auto* gr = app.add_subcommand("grid", "Run an acceptance grid and print a pass/fail table");
  std::string suite;
  int max = 2;
  unsigned jobs = 1;
  bool no_homology = false;
  gr->add_option("--suite", suite, "Grid")->required()->check(CLI::IsMember({"rank5-cd", "rank5-d", "rank6-d", "gamma4"}));
  gr->add_option("--max", max, "Largest coordinate")->required()->check(CLI::Range(0, 64));
  gr->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  gr->add_option("--budget", budget, "Face budget for homology");
  gr->add_flag("--no-homology", no_homology, "Mark homology as skipped");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  const bool as_json = format == "json";

  try {
    const std::size_t face_budget = resolve_budget(budget);
    Report r;
    bool ok = true;

    if (rcd->parsed()) {
      const auto v = parse_list(alpha, 4, "--alpha");
      const Rank5Coeffs t{v[0], v[1], v[2], v[3]};
      const Feasibility f = feasible_rank5_cd(t);
      r.body["target"] = to_string(from_rank5(t));
      r.body["verdict"] = to_string(f.verdict);
      if (!f.feasible()) {
        r.print(out, as_json);
        return kFalse;
      }
      const Construction c = realize_rank5_cd_traced(t);
      const std::string doc = io::poset_to_json(c.poset);
      const Emitter em{out_path, trace_path, out, err};
      em.emit(doc, c.trace, r);
      r.body["elements"] = std::to_string(c.poset.size());
      if (verify) {
        const GradedPoset back = io::poset_from_json(out_path.empty() ? doc : io::read_file(out_path));
        const CdPolynomial phi = cd_index(back);
        r.body["cd-index"] = to_string(phi);
        const bool match = phi == from_rank5(t);
        r.body["cd check"] = match ? "pass" : "fail";
        r.body["thin"] = is_thin(back) ? "yes" : "no";
        ok = match && is_thin(back) && add_homology(r, order_complex(back), face_budget);
      }
      r.print(em.report_stream(), as_json);
      return ok ? kOk : kFalse;
    }

    if (rd->parsed()) {
      const auto [x, y] = parse_one_x_y(dvec, "--d");
      const bool feasible = rank == 5 ? feasible_rank5_d(x, y).feasible : feasible_rank6_d(x, y);
      r.body["target"] = "(1," + x.str() + "," + y.str() + ")";
      r.body["rank"] = std::to_string(rank);
      r.body["verdict"] = feasible ? "feasible" : "infeasible";
      if (!feasible) {
        r.print(out, as_json);
        return kFalse;
      }
      const Construction c = rank == 5 ? realize_rank5_d_traced(x, y) : realize_rank6_d_traced(x, y);
      const std::string doc = io::poset_to_json(c.poset);
      const Emitter em{out_path, trace_path, out, err};
      em.emit(doc, c.trace, r);
      r.body["elements"] = std::to_string(c.poset.size());
      if (verify) {
        const GradedPoset back = io::poset_from_json(out_path.empty() ? doc : io::read_file(out_path));
        const CdPolynomial phi = cd_index(back);
        const DVector dv = d_vector(phi);
        r.body["cd-index"] = to_string(phi);
        r.body["d-vector"] = join_big(dv.entries);
        const bool match = back.rank() == rank && dv == DVector{{1, x, y}};
        r.body["d check"] = match ? "pass" : "fail";
        ok = match && add_homology(r, order_complex(back), face_budget);
      }
      r.print(em.report_stream(), as_json);
      return ok ? kOk : kFalse;
    }

    if (fs->parsed()) {
      const auto [x, y] = parse_one_x_y(gamma, "--gamma");
      r.body["target"] = "(1," + x.str() + "," + y.str() + ")";
      r.body["verdict"] = feasible_gamma4(x, y) ? "feasible" : "infeasible";
      if (!feasible_gamma4(x, y)) {
        r.print(out, as_json);
        return kFalse;
      }
      const ComplexConstruction c = build_flag_gamma4_traced(x, y);
      const std::string doc = io::complex_to_json(c.complex);
      const Emitter em{out_path, trace_path, out, err};
      em.emit(doc, c.trace, r);
      r.body["vertices"] = std::to_string(c.complex.vertices().size());
      r.body["facets"] = std::to_string(c.complex.facets().size());
      if (verify) {
        const SimplicialComplex back = io::complex_from_json(out_path.empty() ? doc : io::read_file(out_path));
        const GammaVector g = gamma_vector(back);
        r.body["gamma-vector"] = join_big(g.entries);
        r.body["flag"] = is_flag(back) ? "yes" : "no";
        const bool match = back.dimension() == 4 && g == GammaVector{{1, x, y}} && is_flag(back);
        r.body["gamma check"] = match ? "pass" : "fail";
        ok = match && add_homology(r, back, face_budget);
      }
      r.print(em.report_stream(), as_json);
      return ok ? kOk : kFalse;
    }

    if (inv->parsed()) {
      const io::Document doc = io::document_from_json(io::read_file(file));
      if (const auto* p = std::get_if<GradedPoset>(&doc)) {
        r.body["kind"] = "poset";
        r.body["rank"] = std::to_string(p->rank());
        r.body["elements"] = std::to_string(p->size());
        const FlagVector f = flag_f(*p), h = flag_h(f);
        Json fj = Json::object(), hj = Json::object();
        for (std::uint32_t m = 0; m < f.values.size(); ++m) {
          fj[mask_string(m, f.n)] = f.values[m].str();
          hj[mask_string(m, f.n)] = h.values[m].str();
        }
        r.body["flag f"] = fj;
        r.body["flag h"] = hj;
        const AbPolynomial psi = ab_index(h);
        std::string ab;
        for (const auto& [w, k] : psi.coeffs) ab += (ab.empty() ? "" : " + ") + k.str() + "*" + (w.empty() ? "1" : w);
        r.body["ab-index"] = ab.empty() ? "0" : ab;
        try {
          const CdPolynomial phi = cd_rewrite(psi);
          r.body["cd-index"] = to_string(phi);
          r.body["d-vector"] = join_big(d_vector(phi).entries);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotCdExpressible) throw;
          r.body["cd-index"] = "not cd-expressible";
          ok = false;
        }
      } else {
        const auto& d = std::get<SimplicialComplex>(doc);
        r.body["kind"] = "complex";
        r.body["dimension"] = std::to_string(d.dimension());
        const FVector f = f_vector(d);
        const HVector h = h_from_f(f);
        r.body["f-vector"] = join_big(f.entries);
        r.body["h-vector"] = join_big(h.entries);
        if (is_symmetric(h)) {
          r.body["gamma-vector"] = join_big(gamma_from_h(h).entries);
        } else {
          r.body["gamma-vector"] = "undefined (h not symmetric)";
          ok = false;
        }
        r.body["flag"] = is_flag(d) ? "yes" : "no";
      }
      r.print(out, as_json);
      return ok ? kOk : kFalse;
    }

    if (ver->parsed()) {
      const std::string text = io::read_file(file);
      std::optional<io::Document> parsed;
      try {
        parsed = io::document_from_json(text);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        // A well-formed document describing an invalid object fails verification.
        r.body["valid"] = "no (" + std::string(e.what()) + ")";
        r.body["result"] = "fail";
        r.print(out, as_json);
        return kFalse;
      }
      const io::Document& doc = *parsed;
      r.body["valid"] = "yes";
      if (const auto* p = std::get_if<GradedPoset>(&doc)) {
        r.body["kind"] = "poset";
        const bool thin = is_thin(*p);
        r.body["thin"] = thin ? "yes" : "no";
        bool expressible = true;
        try {
          r.body["cd-index"] = to_string(cd_index(*p));
        } catch (const Error& e) {
          if (e.code() != ErrorCode::NotCdExpressible) throw;
          r.body["cd-index"] = "not cd-expressible";
          expressible = false;
        }
        ok = thin && expressible;
        if (homology) ok = add_homology(r, order_complex(*p), face_budget) && ok;
      } else {
        const auto& d = std::get<SimplicialComplex>(doc);
        r.body["kind"] = "complex";
        r.body["pure"] = d.is_pure() ? "yes" : "no";
        r.body["flag"] = is_flag(d) ? "yes" : "no";
        ok = d.is_pure();
        if (homology) ok = add_homology(r, d, face_budget) && ok;
      }
      r.body["result"] = ok ? "pass" : "fail";
      r.print(out, as_json);
      return ok ? kOk : kFalse;
    }

    if (fe->parsed()) {
      if (!f_r5cd.empty()) {
        const auto v = parse_list(f_r5cd, 4, "--rank5-cd");
        const Feasibility f = feasible_rank5_cd({v[0], v[1], v[2], v[3]});
        r.body["verdict"] = to_string(f.verdict);
        if (f.witness) {
          const auto& w = *f.witness;
          r.body["witness b"] = join_big({w.b1, w.b2, w.b3});
          r.body["witness c"] = join_big({w.c1, w.c2, w.c3});
        }
        ok = f.feasible();
      } else if (!f_r5d.empty()) {
        const auto v = parse_list(f_r5d, 2, "--rank5-d");
        const DFeasibility f = feasible_rank5_d(v[0], v[1]);
        r.body["verdict"] = f.feasible ? "feasible" : "infeasible";
        if (f.product) r.body["witness (a,b)"] = join_big({f.product->first, f.product->second});
        ok = f.feasible;
      } else if (!f_r6d.empty()) {
        const auto v = parse_list(f_r6d, 2, "--rank6-d");
        ok = feasible_rank6_d(v[0], v[1]);
        r.body["verdict"] = ok ? "feasible" : "infeasible";
      } else if (!f_g4.empty()) {
        const auto v = parse_list(f_g4, 2, "--gamma4");
        ok = feasible_gamma4(v[0], v[1]);
        r.body["verdict"] = ok ? "feasible" : "infeasible";
      } else {
        // k = 3: rank-5 d-vectors against the known subset of gamma-vectors of flag 3-spheres.
        // k = 4: rank-6 d-vectors against gamma-vectors of flag 4-spheres.
        Json rows = Json::array();
        std::size_t differ = 0;
        for (int x = 0; x <= compare_max; ++x)
          for (int y = 0; 4 * y <= x * x; ++y) {
            const bool in_d = compare == 3 ? feasible_rank5_d(x, y).feasible : feasible_rank6_d(x, y);
            const bool in_l = compare == 3 ? feasible_rank5_d(x, y).feasible : feasible_gamma4(x, y);
            differ += in_d != in_l;
            rows.push_back("(1," + std::to_string(x) + "," + std::to_string(y) + ") D=" + (in_d ? "yes" : "no") +
                           " Lambda=" + (in_l ? "yes" : "no"));
          }
        r.body["k"] = std::to_string(compare);
        r.body["Lambda predicate"] = compare == 3 ? "known lower bound: y <= (x-1)^2/4 or (x,y)=(a+b,ab)"
                                                  : "4y <= x^2";
        r.body["D predicate"] = compare == 3 ? "y <= (x-1)^2/4 or (x,y)=(a+b,ab)" : "4y <= x^2";
        r.body["rows"] = rows;
        r.body["disagreements"] = std::to_string(differ);
        ok = differ == 0;
      }
      r.print(out, as_json);
      return ok ? kOk : kFalse;
    }

    if (gr->parsed()) {
      const auto rows = run_pool(grid_tasks(suite, max, face_budget, !no_homology), jobs);
      std::size_t failures = 0, skipped = 0;
      for (const auto& row : rows) {
        failures += row.check == "fail" || row.homology == "fail";
        skipped += row.homology == "skipped";
      }
      if (as_json) {
        Json j = Json::object();
        j["suite"] = suite;
        j["max"] = max;
        Json arr = Json::array();
        for (const auto& row : rows)
          arr.push_back({{"target", row.target}, {"verdict", row.verdict}, {"check", row.check},
                         {"homology", row.homology}, {"note", row.note}});
        j["rows"] = arr;
        j["failures"] = failures;
        j["homology skipped"] = skipped;
        out << j.dump(2) << "\n";
      } else {
        out << "suite " << suite << " max " << max << "\n";
        out << "target\tverdict\tcheck\thomology\n";
        for (const auto& row : rows)
          out << row.target << "\t" << row.verdict << "\t" << row.check << "\t" << row.homology
              << (row.note.empty() ? "" : "\t" + row.note) << "\n";
        out << "rows " << rows.size() << " failures " << failures << " homology-skipped " << skipped << "\n";
      }
      return failures == 0 ? kOk : kFalse;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace cdgor::cli
