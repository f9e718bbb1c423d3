// grecip: command-line front end for Golomb ruler counting, the Golomb
// arrangement, and mixed-graph colorings.
//
// Exit codes: 0 success, 1 usage or input error, 2 node budget exhausted,
// 3 verification mismatch.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grecip/arrangement.hpp"
#include "grecip/errors.hpp"
#include "grecip/fixtures.hpp"
#include "grecip/golomb.hpp"
#include "grecip/golomb_graph.hpp"
#include "grecip/json_io.hpp"
#include "grecip/mixed_graph.hpp"
#include "grecip/quasipoly.hpp"

using namespace grecip;

namespace {

enum class Format { kDefault, kText, kJson, kCsv };

constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitMismatch = 3;

struct RunConfig {
  std::uint64_t budget = kDefaultNodeBudget;
  unsigned threads = 1;
  Format format = Format::kDefault;
  std::string output;

  SearchOptions search() const {
    SearchOptions o;
    o.node_budget = budget;
    o.threads = threads;
    return o;
  }
  Format pick(Format fallback) const { return format == Format::kDefault ? fallback : format; }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inclusive t range from --t or --t-min/--t-max.
struct TRange {
  std::optional<std::int64_t> t, t_min, t_max;

  void add(CLI::App* cmd) {
    auto* single = cmd->add_option("--t", t, "single value of t");
    cmd->add_option("--t-min", t_min, "first t of a range")->excludes(single);
    cmd->add_option("--t-max", t_max, "last t of a range")->excludes(single);
  }
  bool given() const { return t || t_min || t_max; }
  std::pair<std::int64_t, std::int64_t> resolve(std::int64_t lo_default, std::int64_t hi_default) const {
    if (t) return {*t, *t};
    std::int64_t lo = t_min.value_or(lo_default), hi = t_max.value_or(hi_default);
    if (lo > hi) throw UsageError("--t-min must not exceed --t-max");
    return {lo, hi};
  }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

MixedGraph load_graph(const std::string& input, const std::string& fixture) {
  if (!fixture.empty()) {
    if (fixture != "triangle") throw UsageError("unknown fixture '" + fixture + "' (known: triangle)");
    return fixtures::triangle();
  }
  if (input.empty()) throw UsageError("give --input FILE or --fixture triangle");
  return read_mixed_graph(input);
}

void add_graph_source(CLI::App* cmd, std::string& input, std::string& fixture) {
  auto* in = cmd->add_option("--input", input, "mixed graph JSON file");
  cmd->add_option("--fixture", fixture, "built-in graph (triangle)")->excludes(in);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Golomb rulers, inside-out polytopes and mixed-graph reciprocity"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "grecip 0.1.0");

  RunConfig cfg;
  std::map<std::string, Format> formats{{"text", Format::kText}, {"json", Format::kJson}, {"csv", Format::kCsv}};
  app.add_option("--budget", cfg.budget, "maximum search nodes")
      ->envname("GRECIP_BUDGET")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--format", cfg.format, "output format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--output,-o", cfg.output, "write results to this file instead of stdout");

  std::ostringstream out;
  std::function<int()> run;

  // golomb-count
  int gc_m = 0;
  bool gc_table = false;
  TRange gc_t;
  auto* gc = app.add_subcommand("golomb-count", "count Golomb rulers with m gaps and length t");
  gc->add_option("--m", gc_m, "number of gaps")->check(CLI::PositiveNumber);
  gc_t.add(gc);
  gc->add_flag("--check-table1", gc_table, "compare g_3(t), t = 6..35, with the reference values");
  gc->callback([&] {
    run = [&] {
      if (gc_table) {
        if (gc_m != 0 && gc_m != 3) throw UsageError("--check-table1 applies to m = 3");
        if (gc_t.given()) throw UsageError("--check-table1 fixes the range t = 6..35");
        gc_m = 3;
      }
      if (gc_m == 0) throw UsageError("--m is required");
      if (!gc_t.given() && !gc_table) throw UsageError("give --t or --t-min/--t-max");
      auto [lo, hi] = gc_table ? std::pair<std::int64_t, std::int64_t>{6, 35} : gc_t.resolve(1, 1);
      if (lo < 0) throw UsageError("t must be non-negative");
      const auto& table = fixtures::g3_table();
      struct Row { std::int64_t t; BigInt count; std::optional<std::int64_t> expected; };
      std::vector<Row> rows;
      int mismatches = 0;
      for (std::int64_t t = lo; t <= hi; ++t) {
        Row r{t, count_golomb_rulers(gc_m, t, cfg.search()), {}};
        if (gc_table) {
          r.expected = table.at(t);
          mismatches += r.count != *r.expected;
        }
        rows.push_back(r);
      }
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json j{{"m", gc_m}, {"values", Json::array()}};
          for (const auto& r : rows) {
            Json row{{"t", r.t}, {"count", to_string(r.count)}};
            if (r.expected) row["expected"] = std::to_string(*r.expected);
            j["values"].push_back(row);
          }
          if (gc_table) j["table_matches"] = mismatches == 0;
          out << dump(j);
          break;
        }
        case Format::kCsv:
          out << (gc_table ? "t,count,expected\n" : "t,count\n");
          for (const auto& r : rows) {
            out << r.t << ',' << to_string(r.count);
            if (r.expected) out << ',' << *r.expected;
            out << '\n';
          }
          break;
        default:
          if (rows.size() == 1 && !gc_table) {
            out << to_string(rows[0].count) << '\n';
            break;
          }
          for (const auto& r : rows) {
            out << r.t << ' ' << to_string(r.count);
            if (r.expected && r.count != *r.expected) out << "  MISMATCH (expected " << *r.expected << ")";
            out << '\n';
          }
          if (gc_table) out << "table: " << rows.size() - mismatches << "/" << rows.size() << " match\n";
      }
      return mismatches ? kExitMismatch : 0;
    };
  });

  // quasipoly
  int qp_m = 0;
  std::optional<int> qp_period;
  auto* qp = app.add_subcommand("quasipoly", "interpolate the Golomb counting quasipolynomial g_m");
  qp->add_option("--m", qp_m, "number of gaps")->required()->check(CLI::Range(1, 5));
  qp->add_option("--period", qp_period, "period to interpolate with (default: the vertex bound)")
      ->check(CLI::PositiveNumber);
  qp->callback([&] {
    run = [&] {
      auto bound = period_bound(qp_m);
      auto q = golomb_quasipolynomial(qp_m, qp_period, cfg.search());
      Rational lead = make_rational(BigInt(1), factorial(static_cast<unsigned>(qp_m - 1)));
      Rational at_zero = evaluate(q, 0);
      switch (cfg.pick(Format::kJson)) {
        case Format::kText:
          out << "g_" << qp_m << "(t), period " << q.period() << '\n';
          for (int r = 0; r < q.period(); ++r) out << "  t = " << r << " mod " << q.period() << ": " << q.constituent(r).to_string("t") << '\n';
          out << "period bound " << bound << ", minimal period " << q.minimal_period() << '\n';
          out << "leading coefficient " << to_string(lead) << " in every constituent\n";
          out << "g_" << qp_m << "(0) = " << to_string(at_zero) << '\n';
          break;
        case Format::kCsv:
          throw UsageError("quasipoly has no CSV form");
        default: {
          Json j{{"m", qp_m},
                 {"quasipolynomial", to_json(q)},
                 {"diagnostics",
                  {{"period_bound", bound},
                   {"period_used", q.period()},
                   {"minimal_period", q.minimal_period()},
                   {"leading_coefficient", to_string(lead)},
                   {"leading_coefficient_ok", true},
                   {"value_at_zero", to_string(at_zero)}}}};
          out << dump(j);
        }
      }
      return 0;
    };
  });

  // regions
  int rg_m = 0;
  bool rg_list = false, rg_shift_only = false;
  auto* rg = app.add_subcommand("regions", "count the regions of the Golomb inside-out polytope");
  rg->add_option("--m", rg_m, "number of gaps")->required()->check(CLI::Range(1, 6));
  rg->add_flag("--list", rg_list, "print every region as an order of intervals");
  rg->add_flag("--combinatorial", rg_shift_only, "use only inclusion and the shift condition (overcounts from m = 4)");
  rg->callback([&] {
    run = [&] {
      OrientationSearchOptions opts;
      opts.node_budget = cfg.budget;
      opts.threads = cfg.threads;
      if (rg_shift_only) opts.check = RegionCheck::kShiftConditionOnly;
      auto os = enumerate_constrained_orientations(rg_m, opts);
      switch (cfg.pick(Format::kText)) {
        case Format::kJson:
          if (rg_list) out << dump(orientations_to_json(rg_m, os));
          else out << dump(Json{{"m", rg_m}, {"count", os.size()}});
          break;
        case Format::kCsv:
          if (rg_list) {
            out << "order\n";
            for (const auto& o : os) out << join(o.labels(), " ") << '\n';
          } else {
            out << "m,count\n" << rg_m << ',' << os.size() << '\n';
          }
          break;
        default:
          out << os.size() << '\n';
          if (rg_list)
            for (const auto& o : os) out << o.to_string() << '\n';
      }
      return 0;
    };
  });

  // reciprocity golomb|mixed
  auto* rc = app.add_subcommand("reciprocity", "check a reciprocity theorem numerically");
  rc->require_subcommand(1);
  int rcg_m = 0;
  TRange rcg_t;
  auto* rcg = rc->add_subcommand("golomb", "(-1)^(m-1) g_m(-t) against multiplicity-weighted ruler counts");
  rcg->add_option("--m", rcg_m, "number of gaps")->required()->check(CLI::Range(1, 5));
  rcg_t.add(rcg);
  rcg->callback([&] {
    run = [&] {
      auto [lo, hi] = rcg_t.resolve(0, 8);
      if (lo < 0) throw UsageError("t must be non-negative");
      auto r = reciprocity_check_golomb(rcg_m, lo, hi, cfg.search());
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json rows = Json::array();
          for (const auto& row : r.rows)
            rows.push_back({{"t", row.t}, {"lhs", to_string(row.lhs)}, {"rhs", to_string(row.rhs)}, {"ok", row.ok}});
          out << dump(Json{{"m", rcg_m},
                           {"rows", rows},
                           {"value_at_zero", to_string(r.value_at_zero)},
                           {"orientation_count", r.orientation_count},
                           {"ok", r.ok()}});
          break;
        }
        case Format::kCsv:
          out << "t,lhs,rhs,ok\n";
          for (const auto& row : r.rows)
            out << row.t << ',' << to_string(row.lhs) << ',' << to_string(row.rhs) << ',' << (row.ok ? "true" : "false") << '\n';
          break;
        default:
          for (const auto& row : r.rows)
            out << "t=" << row.t << ": " << to_string(row.lhs) << (row.ok ? " = " : " != ") << to_string(row.rhs)
                << (row.ok ? "  ok" : "  FAIL") << '\n';
          out << "regions: " << r.orientation_count << (r.zero_ok ? " = " : " != ") << "(-1)^(m-1) g_m(0) = "
              << to_string(r.value_at_zero) << '\n';
      }
      return r.ok() ? 0 : kExitMismatch;
    };
  });

  std::string rcm_input, rcm_fixture;
  TRange rcm_t;
  auto* rcm = rc->add_subcommand("mixed", "(-1)^n chi_G(-t) against compatible-orientation counts");
  add_graph_source(rcm, rcm_input, rcm_fixture);
  rcm_t.add(rcm);
  rcm->callback([&] {
    run = [&] {
      auto g = load_graph(rcm_input, rcm_fixture);
      auto [lo, hi] = rcm_t.resolve(1, 3);
      if (lo < 1) throw UsageError("t must be at least 1");
      std::vector<MixedReciprocityReport> reports;
      bool ok = true;
      for (std::int64_t t = lo; t <= hi; ++t) {
        reports.push_back(reciprocity_check_mixed(g, t, cfg.search()));
        ok = ok && reports.back().ok;
      }
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json rows = Json::array();
          for (const auto& r : reports)
            rows.push_back({{"t", r.t},
                            {"lhs", to_string(r.lhs)},
                            {"rhs", to_string(r.rhs)},
                            {"rhs_dilate_t", to_string(r.rhs_dilate_t)},
                            {"ok", r.ok}});
          out << dump(Json{{"graph", to_json(g)},
                           {"chromatic_polynomial", to_json(reports.front().chromatic)},
                           {"rows", rows},
                           {"ok", ok}});
          break;
        }
        case Format::kCsv:
          out << "t,lhs,rhs,rhs_dilate_t,ok\n";
          for (const auto& r : reports)
            out << r.t << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ',' << to_string(r.rhs_dilate_t) << ','
                << (r.ok ? "true" : "false") << '\n';
          break;
        default:
          out << "chi(t) = " << reports.front().chromatic.to_string("t") << '\n';
          for (const auto& r : reports) {
            out << "t=" << r.t << ": " << to_string(r.lhs) << (r.ok ? " = " : " != ") << to_string(r.rhs)
                << (r.ok ? "  ok" : "  FAIL");
            if (r.rhs_dilate_t != r.rhs) out << "  (colors 0..t: " << to_string(r.rhs_dilate_t) << ")";
            out << '\n';
          }
      }
      return ok ? 0 : kExitMismatch;
    };
  });

  // mixed chroma|orientations|chromatic-number
  auto* mx = app.add_subcommand("mixed", "mixed-graph colorings and orientations");
  mx->require_subcommand(1);
  std::string mx_input, mx_fixture;
  std::optional<std::int64_t> mx_t;
  bool mx_list = false;

  auto* chroma = mx->add_subcommand("chroma", "chromatic polynomial, or the number of proper t-colorings with --t");
  add_graph_source(chroma, mx_input, mx_fixture);
  chroma->add_option("--t", mx_t, "number of colors")->check(CLI::NonNegativeNumber);
  chroma->callback([&] {
    run = [&] {
      auto g = load_graph(mx_input, mx_fixture);
      auto chi = chromatic_polynomial(g, cfg.search());
      std::optional<BigInt> count;
      if (mx_t) count = count_proper_colorings(g, *mx_t, cfg.search());
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json j{{"chromatic_polynomial", to_json(chi)}};
          if (count) j["t"] = *mx_t, j["count"] = to_string(*count);
          out << dump(j);
          break;
        }
        case Format::kCsv:
          if (!count) throw UsageError("CSV output needs --t");
          out << "t,count\n" << *mx_t << ',' << to_string(*count) << '\n';
          break;
        default:
          if (count) out << to_string(*count) << '\n';
          else out << chi.to_string("t") << '\n';
      }
      return 0;
    };
  });

  auto* orient = mx->add_subcommand("orientations", "count acyclic orientations");
  add_graph_source(orient, mx_input, mx_fixture);
  orient->add_flag("--list", mx_list, "print the vertex order of each orientation");
  orient->callback([&] {
    run = [&] {
      auto g = load_graph(mx_input, mx_fixture);
      auto os = enumerate_acyclic_orientations(g, cfg.search());
      std::vector<std::string> orders;
      for (const auto& o : os) {
        std::vector<std::string> vs;
        for (int v : topological_order(g, o)) vs.push_back(std::to_string(v));
        orders.push_back(join(vs, " < "));
      }
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json j{{"count", os.size()}};
          if (mx_list) j["orders"] = orders;
          out << dump(j);
          break;
        }
        case Format::kCsv:
          if (mx_list) {
            out << "order\n";
            for (const auto& s : orders) out << s << '\n';
          } else {
            out << "count\n" << os.size() << '\n';
          }
          break;
        default:
          out << os.size() << '\n';
          if (mx_list)
            for (const auto& s : orders) out << s << '\n';
      }
      return 0;
    };
  });

  auto* cnum = mx->add_subcommand("chromatic-number", "least number of colors admitting a proper coloring");
  add_graph_source(cnum, mx_input, mx_fixture);
  cnum->callback([&] {
    run = [&] {
      auto g = load_graph(mx_input, mx_fixture);
      auto k = chromatic_number(g, cfg.search());
      switch (cfg.pick(Format::kText)) {
        case Format::kJson:
          out << dump(Json{{"chromatic_number", k ? Json(*k) : Json(nullptr)}});
          break;
        case Format::kCsv:
          out << "chromatic_number\n" << (k ? std::to_string(*k) : "") << '\n';
          break;
        default:
          out << (k ? std::to_string(*k) : "none") << '\n';
      }
      return 0;
    };
  });

  // vertices, hyperplanes
  int vx_m = 0;
  auto* vx = app.add_subcommand("vertices", "vertices of the Golomb inside-out polytope");
  vx->add_option("--m", vx_m, "number of gaps")->required()->check(CLI::Range(1, 6));
  vx->callback([&] {
    run = [&] {
      auto vs = iop_vertices(vx_m);
      switch (cfg.pick(Format::kText)) {
        case Format::kJson:
          out << dump(vertices_to_json(vx_m, vs));
          break;
        case Format::kCsv:
          out << vertices_to_csv(vs);
          break;
        default:
          for (const auto& p : vs) {
            std::vector<std::string> cs;
            for (const auto& c : p) cs.push_back(to_string(c));
            out << '(' << join(cs, ", ") << ")\n";
          }
          out << vs.size() << " vertices, period bound " << period_bound(vx_m) << '\n';
      }
      return 0;
    };
  });

  int hp_m = 0;
  auto* hp = app.add_subcommand("hyperplanes", "hyperplanes of the Golomb arrangement");
  hp->add_option("--m", hp_m, "number of gaps")->required()->check(CLI::Range(1, 12));
  hp->callback([&] {
    run = [&] {
      auto hs = golomb_hyperplanes(hp_m);
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json normals = Json::array();
          for (const auto& h : hs) normals.push_back(h.normal);
          out << dump(Json{{"m", hp_m}, {"count", hs.size()}, {"normals", normals}});
          break;
        }
        case Format::kCsv:
          for (int j = 1; j <= hp_m; ++j) out << (j > 1 ? "," : "") << 'a' << j;
          out << '\n';
          for (const auto& h : hs) {
            for (std::size_t j = 0; j < h.normal.size(); ++j) out << (j ? "," : "") << h.normal[j];
            out << '\n';
          }
          break;
        default:
          for (const auto& h : hs) out << h.to_string() << '\n';
      }
      return 0;
    };
  });

  // optimal
  int op_m = 0;
  bool op_list = false;
  auto* op = app.add_subcommand("optimal", "shortest length of a Golomb ruler with m gaps");
  op->add_option("--m", op_m, "number of gaps")->required()->check(CLI::PositiveNumber);
  op->add_flag("--list", op_list, "also print every optimal ruler");
  op->callback([&] {
    run = [&] {
      auto len = optimal_length(op_m, 10'000, cfg.search());
      std::vector<Ruler> rulers;
      if (op_list) rulers = enumerate_golomb_rulers(op_m, len, cfg.search());
      switch (cfg.pick(Format::kText)) {
        case Format::kJson: {
          Json j{{"m", op_m}, {"length", len}};
          if (op_list) {
            j["rulers"] = Json::array();
            for (const auto& r : rulers) j["rulers"].push_back(r.gaps());
          }
          out << dump(j);
          break;
        }
        case Format::kCsv:
          out << "m,length\n" << op_m << ',' << len << '\n';
          break;
        default:
          out << len << '\n';
          for (const auto& r : rulers) out << r.to_string() << '\n';
      }
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  int code = 0;
  try {
    code = run();
  } catch (const UsageError& e) {
    std::cerr << "grecip: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::cerr << "grecip: " << e.what() << '\n';
    return kExitBudget;
  } catch (const LeadingCoefficientMismatch& e) {
    std::cerr << "grecip: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const std::exception& e) {
    std::cerr << "grecip: " << e.what() << '\n';
    return kExitUsage;
  }

  if (cfg.output.empty()) {
    std::cout << out.str();
  } else {
    std::ofstream file(cfg.output);
    if (!(file << out.str())) {
      std::cerr << "grecip: cannot write " << cfg.output << '\n';
      return kExitUsage;
    }
  }
  return code;
}
