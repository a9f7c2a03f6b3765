#include "mekr/cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mekr/bijection.hpp"
#include "mekr/bounds.hpp"
#include "mekr/budget.hpp"
#include "mekr/compression.hpp"
#include "mekr/json_io.hpp"
#include "mekr/search.hpp"

namespace mekr {
namespace {

// Run `emit` against stdout or the --out path.
int with_output(const std::string& path, const std::function<void(std::ostream&)>& emit) {
  if (path.empty()) {
    emit(std::cout);
    return 0;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot open output path: " << path << "\n";
    return 2;
  }
  emit(out);
  return 0;
}

std::string yesno(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------- bound ----

struct BoundArgs {
  int m = 0, k = 0, t = 1;
  long long n = -1;
  std::string format = "csv", out;
  bool m_given = false, n_given = false;
};

int cmd_bound(const BoundArgs& a) {
  int m = a.m;
  long long n = a.n;
  if (!a.m_given && !a.n_given) {
    std::cerr << "error: pass --m (multiset ground size) or --n (set ground size)\n";
    return 2;
  }
  if (a.m_given && a.n_given && n != static_cast<long long>(m) + a.k - 1) {
    std::cerr << "error: inconsistent sizes: --n must equal m+k-1\n";
    return 2;
  }
  if (!a.m_given) m = static_cast<int>(n - a.k + 1);
  if (!a.n_given) n = static_cast<long long>(m) + a.k - 1;
  if (m < 1) {
    std::cerr << "error: ground size m = n-k+1 must be >= 1\n";
    return 2;
  }

  struct Row {
    const char* formula;
    BoundValue value;
  };
  std::vector<Row> rows;
  rows.push_back({"star", star_bound(m, a.k)});
  rows.push_back({"t_intersecting", t_intersecting_bound(m, a.k, a.t)});
  rows.push_back({"cross_sum", cross_sum_bound(m, a.k, a.t)});
  rows.push_back({"set_cross_sum", set_cross_sum_bound(n, a.k, a.t)});

  return with_output(a.out, [&](std::ostream& os) {
    if (a.format == "csv") {
      os << "m,k,t,formula,value,hypothesis_ok\n";
      for (const Row& r : rows)
        os << m << "," << a.k << "," << a.t << "," << r.formula << ","
           << r.value.value.str() << "," << yesno(r.value.hypothesis_ok) << "\n";
    } else if (a.format == "json") {
      Json doc = Json::array();
      for (const Row& r : rows) {
        Json j;
        j["m"] = m;
        j["k"] = a.k;
        j["t"] = a.t;
        j["formula"] = r.formula;
        j["value"] = bigint_to_json(r.value.value);
        j["hypothesis_ok"] = r.value.hypothesis_ok;
        doc.push_back(std::move(j));
      }
      os << doc.dump(2) << "\n";
    } else {
      os << "bounds at m=" << m << " k=" << a.k << " t=" << a.t << " (n=" << n << ")\n";
      for (const Row& r : rows)
        os << "  " << r.formula << " = " << r.value.value.str() << "  [hypothesis "
           << r.value.hypothesis << ": " << (r.value.hypothesis_ok ? "holds" : "fails")
           << "]\n";
    }
  });
}

// --------------------------------------------------------------- search ----

struct SearchArgs {
  int m = 0, k = 0, t = 1, threads = 0;
  std::string engine = "both", format = "json", out;
  std::uint64_t seed = 0;
  bool intersecting = false, raw = false;
};

void emit_report(std::ostream& os, const SearchReport& rep, const std::string& format) {
  if (format == "json") {
    os << report_to_json(rep).dump(2) << "\n";
  } else if (format == "csv") {
    os << "m,k,t,engine,optimum,bound,bound_applicable,class_count,verdict\n"
       << rep.m << "," << rep.k << "," << rep.t << "," << rep.engine << ","
       << rep.optimum << "," << rep.bound.str() << "," << yesno(rep.bound_applicable)
       << "," << rep.classes.size() << "," << csv_escape(rep.verdict.str()) << "\n";
  } else {
    os << "search m=" << rep.m << " k=" << rep.k << " t=" << rep.t
       << " engine=" << rep.engine << "\n";
    os << "  optimum = " << rep.optimum << "\n";
    os << "  bound   = " << rep.bound.str() << " (" << rep.bound_hypothesis << ": "
       << (rep.bound_applicable ? "holds" : "fails") << ")\n";
    os << "  classes = " << rep.classes.size() << "\n";
    int idx = 0;
    for (const PairCanonicalForm& form : rep.classes) {
      auto [f, g] = realize_pair(form);
      os << "    [" << ++idx << "] F=" << family_to_json(f).dump()
         << " G=" << family_to_json(g).dump() << "\n";
    }
    os << "  verdict = " << rep.verdict.str() << "\n";
  }
}

int cmd_search(const SearchArgs& a) {
  SearchOptions opts;
  opts.engine = a.engine;
  opts.threads = a.threads;
  opts.collect_raw = a.raw;
  opts.seed = a.seed;
  const SearchReport rep = a.intersecting ? max_t_intersecting_search(a.m, a.k, a.t, opts)
                                          : max_sum_search(a.m, a.k, a.t, opts);
  const int rc = with_output(a.out, [&](std::ostream& os) { emit_report(os, rep, a.format); });
  if (rc != 0) return rc;
  return rep.verdict.status == "discrepancy" ? 3 : 0;
}

// -------------------------------------------------------------- compress ----

struct CompressArgs {
  std::string f_path, g_path, out;
  int m = 0, k = 0, t = 1;
};

int cmd_compress(const CompressArgs& a) {
  Json jf, jg;
  try {
    std::ifstream fin(a.f_path), gin(a.g_path);
    if (!fin) {
      std::cerr << "error: cannot read " << a.f_path << "\n";
      return 2;
    }
    if (!gin) {
      std::cerr << "error: cannot read " << a.g_path << "\n";
      return 2;
    }
    jf = Json::parse(fin);
    jg = Json::parse(gin);
  } catch (const Json::parse_error& e) {
    std::cerr << "error: family file is not valid JSON: " << e.what() << "\n";
    return 2;
  }

  int k = a.k;
  if (k == 0) {
    if (jf.is_array() && !jf.empty() && jf[0].is_array())
      k = static_cast<int>(jf[0].size());
    else if (jg.is_array() && !jg.empty() && jg[0].is_array())
      k = static_cast<int>(jg[0].size());
    else {
      std::cerr << "error: cannot infer cardinality from empty families; pass --k\n";
      return 2;
    }
  }

  Universe u(a.m, k);
  const Family f = family_from_json(jf, u);
  const Family g = family_from_json(jg, u);
  if (!is_cross_t_intersecting(f, g, a.t)) {
    std::cerr << "error: input families are not cross-" << a.t << "-intersecting\n";
    return 4;
  }

  const ReduceResult red = kernel_reduce(f, g, a.t);
  return with_output(a.out, [&](std::ostream& os) {
    Json doc;
    doc["m"] = a.m;
    doc["k"] = k;
    doc["t"] = a.t;
    doc["f"] = family_to_json(red.f);
    doc["g"] = family_to_json(red.g);
    doc["initial_kernel"] = red.trace.initial_kernel;
    doc["final_kernel"] = red.trace.final_kernel;
    doc["trace"] = trace_to_json(red.trace);
    os << doc.dump(2) << "\n";
  });
}

// ------------------------------------------------------------- bijection ----

struct BijectionArgs {
  int m = 0, k = 0;
  std::string format = "csv", out;
};

std::string brace_list(const std::vector<int>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(xs[i]);
  }
  return s + "}";
}

int cmd_bijection(const BijectionArgs& a, const Budgets& budgets) {
  if (a.m < 1 || a.k < 1) {
    std::cerr << "error: bijection needs --m >= 1 and --k >= 1\n";
    return 2;
  }
  const BigInt rows = multichoose(a.m, a.k);
  if (rows > BigInt(budgets.table_rows)) {
    std::cerr << "error: table of " << rows.str() << " rows exceeds budget "
              << budgets.table_rows << " (set MEKR_BUDGET to raise)\n";
    return 2;
  }
  const auto table = BijectionTable::get(a.m, a.k);
  return with_output(a.out, [&](std::ostream& os) {
    const std::uint64_t n = table->set_universe().size();
    if (a.format == "csv") {
      os << "subset,multiset\n";
      for (std::uint64_t s = 0; s < n; ++s) {
        const Multiset f = table->multiset_universe().unrank(table->forward(s));
        os << csv_escape(brace_list(table->set_universe().unrank(s))) << ","
           << csv_escape(f.str()) << "\n";
      }
    } else if (a.format == "json") {
      Json doc = Json::array();
      for (std::uint64_t s = 0; s < n; ++s) {
        Json j;
        j["subset"] = table->set_universe().unrank(s);
        j["multiset"] =
            multiset_to_json(table->multiset_universe().unrank(table->forward(s)));
        doc.push_back(std::move(j));
      }
      os << doc.dump(2) << "\n";
    } else {
      os << "bijection m=" << a.m << " k=" << a.k << " (n=" << table->n() << ")\n";
      for (std::uint64_t s = 0; s < n; ++s) {
        const Multiset f = table->multiset_universe().unrank(table->forward(s));
        os << "  " << brace_list(table->set_universe().unrank(s)) << " -> " << f.str()
           << "\n";
      }
    }
  });
}

// ---------------------------------------------------------- verify-kernel ----

struct VerifyArgs {
  int m = 0, k = 0, t = 1, samples = 100;
  std::uint64_t seed = 0;
  std::string format = "json", out;
};

int cmd_verify_kernel(const VerifyArgs& a) {
  const PipelineReport rep = verify_kernel_pipeline(a.m, a.k, a.t, a.samples, a.seed);
  const int rc = with_output(a.out, [&](std::ostream& os) {
    if (a.format == "json") {
      os << pipeline_to_json(rep).dump(2) << "\n";
    } else {
      os << "verify-kernel m=" << rep.m << " k=" << rep.k << " t=" << rep.t
         << " samples=" << rep.samples << " seed=" << rep.seed << "\n";
      os << "  passed = " << rep.passed << "/" << rep.samples << "\n";
      for (const PipelineFailure& f : rep.failures)
        os << "  FAIL sample " << f.sample << " (seed " << f.sample_seed
           << "): " << f.reason << "\n";
    }
  });
  if (rc != 0) return rc;
  return rep.failures.empty() ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact search, bounds, and compression for cross-t-intersecting "
               "multiset families"};
  app.require_subcommand(1);

  const Budgets budgets = Budgets::from_env();

  BoundArgs bound_args;
  CLI::App* bound = app.add_subcommand("bound", "closed-form extremal bounds");
  CLI::Option* bound_m =
      bound->add_option("--m", bound_args.m, "multiset ground set size");
  bound->add_option("--k", bound_args.k, "member cardinality")->required();
  bound->add_option("--t", bound_args.t, "intersection threshold (default 1)");
  CLI::Option* bound_n =
      bound->add_option("--n", bound_args.n, "set-system ground size (= m+k-1)");
  bound->add_option("--format", bound_args.format, "csv|json|table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  bound->add_option("--out", bound_args.out, "output path (default stdout)");

  SearchArgs search_args;
  CLI::App* search = app.add_subcommand("search", "exhaustive optimum search");
  search->add_option("--m", search_args.m, "multiset ground set size")->required();
  search->add_option("--k", search_args.k, "member cardinality")->required();
  search->add_option("--t", search_args.t, "intersection threshold (default 1)");
  search->add_option("--engine", search_args.engine, "brute|closure|both")
      ->check(CLI::IsMember({"brute", "closure", "both"}));
  search->add_flag("--intersecting", search_args.intersecting,
                   "maximise one t-intersecting family instead of a pair sum");
  search->add_flag("--raw", search_args.raw, "include raw optimal witnesses");
  search->add_option("--threads", search_args.threads, "worker threads (0 = all)");
  search->add_option("--seed", search_args.seed, "seed echoed into the report");
  search->add_option("--format", search_args.format, "json|csv|table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  search->add_option("--out", search_args.out, "output path (default stdout)");

  CompressArgs compress_args;
  CLI::App* compress =
      app.add_subcommand("compress", "kernel-reduce a cross-t-intersecting pair");
  compress->add_option("f", compress_args.f_path, "first family (JSON file)")->required();
  compress->add_option("g", compress_args.g_path, "second family (JSON file)")->required();
  compress->add_option("--m", compress_args.m, "multiset ground set size")->required();
  compress->add_option("--k", compress_args.k, "member cardinality (default: inferred)");
  compress->add_option("--t", compress_args.t, "intersection threshold (default 1)");
  compress->add_option("--out", compress_args.out, "output path (default stdout)");

  BijectionArgs bijection_args;
  CLI::App* bijection =
      app.add_subcommand("bijection", "dump the subset <-> multiset table");
  bijection->add_option("--m", bijection_args.m, "multiset ground set size")->required();
  bijection->add_option("--k", bijection_args.k, "member cardinality")->required();
  bijection->add_option("--format", bijection_args.format, "csv|json|table")
      ->check(CLI::IsMember({"csv", "json", "table"}));
  bijection->add_option("--out", bijection_args.out, "output path (default stdout)");

  VerifyArgs verify_args;
  CLI::App* verify =
      app.add_subcommand("verify-kernel", "property-check the kernel reduction");
  verify->add_option("--m", verify_args.m, "multiset ground set size")->required();
  verify->add_option("--k", verify_args.k, "member cardinality")->required();
  verify->add_option("--t", verify_args.t, "intersection threshold (default 1)");
  verify->add_option("--samples", verify_args.samples, "sample count (default 100)");
  verify->add_option("--seed", verify_args.seed, "generator seed (default 0)");
  verify->add_option("--format", verify_args.format, "json|table")
      ->check(CLI::IsMember({"json", "table"}));
  verify->add_option("--out", verify_args.out, "output path (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  bound_args.m_given = bound_m->count() > 0;
  bound_args.n_given = bound_n->count() > 0;

  try {
    if (bound->parsed()) return cmd_bound(bound_args);
    if (search->parsed()) return cmd_search(search_args);
    if (compress->parsed()) return cmd_compress(compress_args);
    if (bijection->parsed()) return cmd_bijection(bijection_args, budgets);
    if (verify->parsed()) return cmd_verify_kernel(verify_args);
  } catch (const BudgetError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace mekr
