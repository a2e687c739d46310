#include "fuzzsg/cli.hpp"

#include <algorithm>
#include <optional>

#include "CLI11.hpp"

#include "fuzzsg/decomposition.hpp"
#include "fuzzsg/enumeration.hpp"
#include "fuzzsg/io.hpp"

namespace fuzzsg::cli {

  Semigroup parse_semigroup_file(std::filesystem::path const& path) {
    auto const doc = read_json_file(path);
    try {
      return semigroup_from_json(doc);
    } catch (AssociativityError const& e) {
      throw AssociativityError(path.string() + ": " + e.what(), e.x(), e.y(), e.z());
    } catch (SchemaError const& e) {
      throw SchemaError(path.string() + ": " + e.what());
    }
  }

  int exit_code(VerificationReport const& report) {
    return report.passed ? exit_pass : exit_counterexample;
  }

  namespace {

    struct Options {
      std::string              file;
      std::string              f_path;
      std::string              g_path;
      std::string              base;
      std::string              json_path;
      std::string              theorem;
      std::size_t              chain     = 1;
      std::size_t              samples   = 0;
      std::uint64_t            seed      = 1;
      std::size_t              all_orders = 0;
      std::size_t              order     = 0;
      bool                     count_only = false;
      std::string              family;
      std::vector<std::size_t> params;
      std::string              out_path;
    };

    void write_json(std::string const& path, json const& j) {
      if (!path.empty())
        write_text_file(path, j.dump(2) + "\n");
    }

    int analyze(Options const& o, std::ostream& out) {
      auto const s    = parse_semigroup_file(o.file);
      auto const zero = zero_element(s);
      auto const k    = kernel(s);
      auto const c    = core(s);
      out << "order:  " << s.order() << "\n"
          << "S^2:    " << format_set(s, square_set(s)) << "\n"
          << "zero:   " << (zero ? s.name(*zero) : "none") << "\n"
          << "kernel: " << format_set(s, k) << "\n"
          << "core:   " << (c ? format_set(s, *c) : "none") << "\n";
      json divisors = json::array();
      for (auto a : s.elements()) {
        auto const part  = divisor_partition(s, a);
        bool const ideal = !part.non_divisors.empty() && is_ideal(s, part.non_divisors);
        out << "D_" << s.name(a) << " = " << format_set(s, part.divisors) << "  N_"
            << s.name(a) << " = " << format_set(s, part.non_divisors) << "  ("
            << (part.non_divisors.empty() ? "empty" : ideal ? "ideal" : "NOT an ideal")
            << ")\n";
        json d = json::array(), n = json::array();
        for (auto x : part.divisors.members())
          d.push_back(s.name(x));
        for (auto x : part.non_divisors.members())
          n.push_back(s.name(x));
        divisors.push_back(json{{"element", s.name(a)},
                                {"D", d},
                                {"N", n},
                                {"N_is_empty_or_ideal", part.non_divisors.empty() || ideal}});
      }
      auto names = [&](ElementSet const& set) {
        json arr = json::array();
        for (auto x : set.members())
          arr.push_back(s.name(x));
        return arr;
      };
      write_json(o.json_path,
                 json{{"order", s.order()},
                      {"square", names(square_set(s))},
                      {"zero", zero ? json(s.name(*zero)) : json(nullptr)},
                      {"kernel", names(k)},
                      {"core", c ? names(*c) : json(nullptr)},
                      {"divisors", divisors}});
      return exit_pass;
    }

    int convolve_cmd(Options const& o, std::ostream& out) {
      auto const s = parse_semigroup_file(o.file);
      auto const f = fuzzy_set_from_json(s, read_json_file(o.f_path));
      auto const g = fuzzy_set_from_json(s, read_json_file(o.g_path));
      out << to_json(convolve(s, f, g)).dump() << "\n";
      return exit_pass;
    }

    int star_cmd(Options const& o, std::ostream& out) {
      auto const s = parse_semigroup_file(o.file);
      auto const a = s.at(o.base);
      auto const f = restricted_fuzzy_set_from_json(s, read_json_file(o.f_path));
      auto const g = restricted_fuzzy_set_from_json(s, read_json_file(o.g_path));
      if (f.base() != a || g.base() != a)
        throw Error("both restricted fuzzy sets must be based at \"" + o.base + "\"");
      out << to_json(star_convolve(s, a, f, g)).dump() << "\n";
      return exit_pass;
    }

    int decompose_cmd(Options const& o, std::ostream& out) {
      auto const s = parse_semigroup_file(o.file);
      auto const f = fuzzy_set_from_json(s, read_json_file(o.f_path));
      out << to_json(subdirect_embed(s, f)).dump() << "\n";
      return exit_pass;
    }

    Strategy make_strategy(Options const& o) {
      auto chain = make_chain(o.chain);
      if (o.samples > 0)
        return Strategy::sampled(std::move(chain), o.samples, o.seed);
      return Strategy::exhaustive(std::move(chain));
    }

    int verify_cmd(Options const& o, std::ostream& out) {
      auto const theorem  = parse_theorem(o.theorem);
      auto const strategy = make_strategy(o);
      auto const id       = std::string(to_string(theorem));

      if (o.all_orders == 0) {
        if (o.file.empty())
          throw CLI::ValidationError("verify", "either FILE or --all-orders is required");
        auto const s      = parse_semigroup_file(o.file);
        auto const report = verify_theorem(s, theorem, strategy);
        out << id << " on " << o.file << ": " << (report.passed ? "PASS" : "FAIL") << " ("
            << report.cases_checked << " cases)\n";
        if (!report.passed)
          out << to_json(report).dump(2) << "\n";
        write_json(o.json_path, to_json(report));
        return exit_code(report);
      }

      json          reports = json::array();
      std::uint64_t total_cases = 0, total_semigroups = 0;
      int           code = exit_pass;
      for (std::size_t n = 1; n <= o.all_orders && code == exit_pass; ++n) {
        std::uint64_t cases = 0, count = 0;
        auto          stream = enumerate_semigroups(n);
        while (auto s = stream.next()) {
          auto report = verify_theorem(*s, theorem, strategy);
          ++count;
          cases += report.cases_checked;
          reports.push_back(to_json(report));
          if (!report.passed) {
            out << to_json(report).dump(2) << "\n";
            code = exit_counterexample;
            break;
          }
        }
        total_cases += cases;
        total_semigroups += count;
        out << id << " order " << n << ": " << count << " semigroups, " << cases << " cases, "
            << (code == exit_pass ? "PASS" : "FAIL") << "\n";
      }
      write_json(o.json_path,
                 json{{"theorem", id},
                      {"max_order", o.all_orders},
                      {"semigroups", total_semigroups},
                      {"cases_checked", total_cases},
                      {"verdict", code == exit_pass ? "pass" : "fail"},
                      {"reports", reports}});
      return code;
    }

    int enumerate_cmd(Options const& o, std::ostream& out, std::ostream& err) {
      if (o.order > 3)
        err << "warning: exhaustive enumeration of order " << o.order
            << " scans " << o.order << "^" << o.order * o.order << " tables\n";
      auto          stream = enumerate_semigroups(o.order);
      std::uint64_t count  = 0;
      while (auto s = stream.next()) {
        ++count;
        if (!o.count_only)
          out << to_json(*s).dump() << "\n";
      }
      if (o.count_only)
        out << count << "\n";
      return exit_pass;
    }

    int catalog_cmd(Options const& o, std::ostream& out) {
      auto const text = to_json(catalog(o.family, o.params)).dump(2) + "\n";
      if (o.out_path.empty())
        out << text;
      else
        write_text_file(o.out_path, text);
      return exit_pass;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Finite semigroups, fuzzy-set convolution and subdirect decomposition",
                 "fuzzsg"};
    app.require_subcommand(1);

    auto* analyze_cmd = app.add_subcommand("analyze", "Ideal structure and divisor sets");
    analyze_cmd->add_option("FILE", o.file, "Semigroup JSON file")->required();
    analyze_cmd->add_option("--json", o.json_path, "Also write a JSON summary here");

    auto* conv = app.add_subcommand("convolve", "Print the sup-min product f o g");
    conv->add_option("FILE", o.file, "Semigroup JSON file")->required();
    conv->add_option("F", o.f_path, "Fuzzy set JSON")->required();
    conv->add_option("G", o.g_path, "Fuzzy set JSON")->required();

    auto* star = app.add_subcommand("star", "Print f* star g* on the divisors of a base");
    star->add_option("FILE", o.file, "Semigroup JSON file")->required();
    star->add_option("-a,--base", o.base, "Base element")->required();
    star->add_option("F", o.f_path, "Restricted fuzzy set JSON")->required();
    star->add_option("G", o.g_path, "Restricted fuzzy set JSON")->required();

    auto* decompose = app.add_subcommand("decompose", "Print the subdirect components of f");
    decompose->add_option("FILE", o.file, "Semigroup JSON file")->required();
    decompose->add_option("F", o.f_path, "Fuzzy set JSON")->required();

    auto* verify = app.add_subcommand("verify", "Check a theorem on a semigroup");
    auto* file_opt = verify->add_option("FILE", o.file, "Semigroup JSON file");
    verify->add_option("--theorem", o.theorem, "Theorem identifier")->required();
    verify->add_option("--chain", o.chain, "Use the chain {0, 1/K, ..., 1}")
        ->check(CLI::PositiveNumber);
    auto* sampled = verify->add_option("--sampled", o.samples, "Random cases instead of all")
                        ->check(CLI::PositiveNumber);
    verify->add_option("--seed", o.seed, "Seed for --sampled")->needs(sampled);
    verify->add_option("--json", o.json_path, "Write the JSON report here");
    verify->add_option("--all-orders", o.all_orders, "Sweep every semigroup of order 1..N")
        ->check(CLI::PositiveNumber)
        ->excludes(file_opt);

    auto* enumerate = app.add_subcommand("enumerate", "List all semigroups of an order");
    enumerate->add_option("--order", o.order, "Order")->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--count-only", o.count_only, "Print the count only");

    auto* cat = app.add_subcommand("catalog", "Write a catalog semigroup");
    cat->add_option("NAME", o.family, "Family name")
        ->required()
        ->check(CLI::IsMember(catalog_names()));
    cat->add_option("PARAMS", o.params, "Family parameters");
    cat->add_option("--out", o.out_path, "Output path (default: standard output)");

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return exit_usage;
    }

    try {
      if (analyze_cmd->parsed())
        return analyze(o, out);
      if (conv->parsed())
        return convolve_cmd(o, out);
      if (star->parsed())
        return star_cmd(o, out);
      if (decompose->parsed())
        return decompose_cmd(o, out);
      if (verify->parsed())
        return verify_cmd(o, out);
      if (enumerate->parsed())
        return enumerate_cmd(o, out, err);
      if (cat->parsed())
        return catalog_cmd(o, out);
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    } catch (InternalError const& e) {
      err << "internal error: " << e.what() << "\n";
      return exit_internal;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return exit_usage;
    }
    return exit_usage;
  }

}  // namespace fuzzsg::cli
