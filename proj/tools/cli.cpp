#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "avgorder/analysis.hpp"
#include "avgorder/catalog.hpp"
#include "avgorder/census.hpp"
#include "avgorder/recipe.hpp"
#include "avgorder/report.hpp"

namespace avgorder::cli {

namespace {

struct Options {
  std::string catalog_path;
  bool records = false;

  std::string recipe;
  std::uint64_t max_n = kSmallCatalogMaxOrder;
  std::string suite = "all";
  std::string output;
  std::uint64_t max_order = 5000;
  std::vector<std::string> families;
  std::uint64_t limit_n = 0;
  unsigned m_max = 40;
  std::string epsilon = "1/24";
  std::uint64_t order_filter = 0;
};

std::string rational_cell(const Rational& r) { return r.str() + " (" + r.decimal() + ")"; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

class Runner {
 public:
  Runner(const Options& opt, std::ostream& out, std::ostream& err)
      : opt_(opt), out_(out), err_(err) {}

  const Catalog& catalog() {
    if (opt_.catalog_path.empty())
      return default_catalog();
    if (!loaded_)
      loaded_ = std::make_unique<Catalog>(Catalog::load(opt_.catalog_path));
    return *loaded_;
  }

  int compute() {
    const GroupRecipe recipe = parse_recipe(opt_.recipe);
    const AnalysisReport r = psi_ratios(realize(recipe));
    const std::string text = to_string(recipe);
    if (opt_.records) {
      out_ << report_json(r, text).dump() << '\n';
      return kOk;
    }
    const auto& f = r.flags;
    out_ << "group   " << text << '\n'
         << "order   " << r.group_order << '\n'
         << "psi     " << to_string(r.psi) << '\n'
         << "o       " << rational_cell(r.avg_order) << '\n'
         << "psi'    " << rational_cell(r.psi_prime) << '\n'
         << "psi''   " << rational_cell(r.psi_double_prime) << '\n'
         << "census  " << r.census.str() << '\n'
         << "flags   elementary-abelian-2=" << yes_no(f.elementary_abelian_2)
         << " cyclic=" << yes_no(f.cyclic) << " abelian=" << yes_no(f.abelian)
         << " nilpotent=" << yes_no(f.nilpotent) << " solvable=" << yes_no(f.solvable) << '\n'
         << "criteria\n";
    for (const auto& v : r.verdicts) {
      out_ << "  " << std::left << std::setw(34) << v.id << " fires=" << std::setw(4)
           << yes_no(v.fires) << " conclusion="
           << (v.conclusion_holds ? yes_no(*v.conclusion_holds) : std::string("n/a")) << '\n';
    }
    return kOk;
  }

  int table() {
    if (opt_.max_n < 1 || opt_.max_n > kSmallCatalogMaxOrder) {
      err_ << "error: --max-n must be in 1.." << kSmallCatalogMaxOrder << '\n';
      return kUsage;
    }
    if (!opt_.records)
      out_ << std::left << std::setw(4) << "n" << std::setw(26) << "a_n" << "attained by\n";
    for (std::uint64_t n = 1; n <= opt_.max_n; ++n) {
      const MinAverageOrder row = min_average_order(n, catalog());
      if (opt_.records) {
        out_ << table_row_json(n, row).dump() << '\n';
        continue;
      }
      std::string by;
      for (const auto& id : row.attained_by)
        by += (by.empty() ? "" : ", ") + id;
      out_ << std::left << std::setw(4) << n << std::setw(26) << rational_cell(row.value) << by
           << '\n';
    }
    return kOk;
  }

  int verify() {
    const VerifyReport rep = avgorder::verify(opt_.suite, catalog());
    std::ofstream file;
    std::ostream* sink = &out_;
    if (!opt_.output.empty()) {
      file.open(opt_.output);
      if (!file) {
        err_ << "error: cannot write '" << opt_.output << "'\n";
        return kUsage;
      }
      sink = &file;
    }
    std::size_t vacuous = 0;
    for (const auto& r : rep.records) {
      vacuous += r.vacuous ? 1 : 0;
      if (opt_.records) {
        *sink << check_json(r).dump() << '\n';
      } else if (!r.passed) {
        *sink << "FAIL  " << r.id;
        for (const auto& [k, v] : r.witness)
          *sink << "  " << k << "=" << v;
        *sink << '\n';
      }
    }
    const std::size_t bad = rep.violations();
    if (!opt_.records)
      *sink << "suite " << opt_.suite << ": " << rep.records.size() << " checks, "
            << rep.records.size() - bad << " passed (" << vacuous << " vacuous), " << bad
            << " failed\n";
    if (bad) {
      for (const auto& r : rep.records)
        if (!r.passed)
          err_ << "violation: " << r.id << '\n';
      return kVerificationFailed;
    }
    return kOk;
  }

  int search() {
    unsigned families = 0;
    if (opt_.families.empty())
      families = kAllFamilies;
    for (const auto& f : opt_.families) {
      if (f == "cyclic")
        families |= kFamilyCyclic;
      else if (f == "frobenius")
        families |= kFamilyFrobenius;
      else if (f == "abelian")
        families |= kFamilyAbelian;
      else if (f == "all")
        families |= kAllFamilies;
      else {
        err_ << "error: unknown family '" << f << "'\n";
        return kUsage;
      }
    }
    const IntegerSearchResult res = integer_search(opt_.max_order, families);
    if (opt_.records) {
      out_ << nlohmann::json{{"record", "search_scope"}, {"scope", res.scope}}.dump() << '\n';
      for (const auto& h : res.hits)
        out_ << integer_hit_json(h).dump() << '\n';
      return kOk;
    }
    out_ << "scope: " << res.scope << '\n';
    out_ << std::left << std::setw(8) << "order" << std::setw(8) << "o" << std::setw(12)
         << "family" << "group\n";
    for (const auto& h : res.hits)
      out_ << std::left << std::setw(8) << h.order << std::setw(8) << to_string(h.avg_order)
           << std::setw(12) << h.family << to_string(h.recipe) << '\n';
    return kOk;
  }

  int limit() {
    if (opt_.limit_n < 2 || opt_.m_max < 1) {
      err_ << "error: need --n >= 2 and --m-max >= 1\n";
      return kUsage;
    }
    const LimitTrace t = limit_sequence(opt_.limit_n, opt_.m_max);
    if (opt_.records) {
      for (const auto& term : t.terms)
        out_ << limit_term_json(t.n, term).dump() << '\n';
      return kOk;
    }
    out_ << "G_m = " << to_string(limit_group_recipe(t.n, 1)) << " with every factor raised to m\n";
    out_ << std::left << std::setw(5) << "m" << std::setw(22) << "o(G_m)" << "|o(G_m) - n|\n";
    for (const auto& term : t.terms)
      out_ << std::left << std::setw(5) << term.m << std::setw(22) << term.value.decimal()
           << term.gap.decimal() << '\n';
    return kOk;
  }

  int density() {
    const Rational eps = Rational::parse(opt_.epsilon);
    const DensityScan s = density_scan(eps, catalog());
    if (opt_.records) {
      out_ << nlohmann::json{{"record", "density_scan"},
                             {"epsilon", s.epsilon.str()},
                             {"interval", {s.lower.str(), s.upper.str()}},
                             {"n0", to_string(s.n0)},
                             {"groups_scanned", s.groups_scanned},
                             {"all_below_n0", s.all_below_n0},
                             {"note", s.note}}
                  .dump()
           << '\n';
      for (const auto& h : s.hits)
        out_ << density_hit_json(s, h).dump() << '\n';
      return kOk;
    }
    out_ << "interval [" << s.lower.str() << ", " << s.upper.str() << "), n0 = "
         << to_string(s.n0) << ", " << s.groups_scanned << " groups scanned\n";
    for (const auto& h : s.hits)
      out_ << "  " << std::left << std::setw(12) << h.label << std::setw(8) << h.order
           << rational_cell(h.avg_order) << '\n';
    out_ << "all occupants below n0: " << yes_no(s.all_below_n0) << '\n';
    out_ << "note: " << s.note << '\n';
    return kOk;
  }

  int list() {
    for (const auto& e : catalog().entries()) {
      if (opt_.order_filter && e.order != opt_.order_filter)
        continue;
      if (opt_.records) {
        out_ << nlohmann::json{{"record", "catalog_entry"},
                               {"id", e.id},
                               {"kind", e.kind == EntryKind::kSmall ? "small" : "named"},
                               {"order", e.order},
                               {"recipe", to_string(e.recipe)}}
                    .dump()
             << '\n';
      } else {
        out_ << std::left << std::setw(10) << e.id << std::setw(6) << e.order
             << to_string(e.recipe) << '\n';
      }
    }
    return kOk;
  }

 private:
  const Options& opt_;
  std::ostream& out_;
  std::ostream& err_;
  std::unique_ptr<Catalog> loaded_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact average orders of finite groups"};
  app.name("avgorder");
  app.require_subcommand(1);

  Options opt;
  app.add_option("--catalog", opt.catalog_path, "Catalog data file (default: embedded copy)");

  auto* compute = app.add_subcommand("compute", "Census, psi, o, psi', psi'' and flags of a group");
  compute->add_option("recipe", opt.recipe, "Recipe expression, e.g. \"C(5) x SD(7,3)\"")
      ->required();
  compute->add_flag("--records", opt.records, "Machine-readable output");

  auto* table = app.add_subcommand("table", "Minimum average order for each order n");
  table->add_option("--max-n", opt.max_n, "Largest order (1..23)");
  table->add_flag("--records", opt.records, "Machine-readable output");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  std::string suites = "all";
  for (const auto& s : verify_suites())
    suites += "|" + s;
  verify->add_option("suite", opt.suite, suites);
  verify->add_option("-o,--output", opt.output, "Write the report to a file");
  verify->add_flag("--records", opt.records, "One record per check");

  auto* search = app.add_subcommand("search", "Integer average orders in restricted families");
  search->add_option("--max-order", opt.max_order, "Largest group order")
      ->check(CLI::PositiveNumber);
  search->add_option("--families", opt.families, "cyclic, frobenius, abelian or all")
      ->delimiter(',');
  search->add_flag("--records", opt.records, "Machine-readable output");

  auto* limit = app.add_subcommand("limit", "Average orders of G_m approaching n");
  limit->add_option("--n", opt.limit_n, "Target integer (>= 2)")->required();
  limit->add_option("--m-max", opt.m_max, "Number of terms");
  limit->add_flag("--records", opt.records, "Machine-readable output");

  auto* density = app.add_subcommand("density", "Groups with o in [13/6, 9/4 - epsilon)");
  density->add_option("--epsilon", opt.epsilon, "Exact rational in (0, 1/12), e.g. 1/24");
  density->add_flag("--records", opt.records, "Machine-readable output");

  auto* list = app.add_subcommand("catalog", "List catalog entries");
  list->add_option("--order", opt.order_filter, "Only entries of this order");
  list->add_flag("--records", opt.records, "Machine-readable output");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    // A subcommand's help request surfaces here too.
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  Runner runner(opt, out, err);
  try {
    if (*compute)
      return runner.compute();
    if (*table)
      return runner.table();
    if (*verify)
      return runner.verify();
    if (*search)
      return runner.search();
    if (*limit)
      return runner.limit();
    if (*density)
      return runner.density();
    if (*list)
      return runner.list();
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kResourceCap;
  } catch (const RecipeParseError& e) {
    err << "error: " << e.what() << '\n';
    if (!opt.recipe.empty())
      err << "  " << opt.recipe << '\n' << "  " << std::string(e.position(), ' ') << "^\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const CatalogError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace avgorder::cli
