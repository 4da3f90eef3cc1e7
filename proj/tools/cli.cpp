#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "cpmonoid/audit.hpp"
#include "cpmonoid/error.hpp"
#include "cpmonoid/explorer.hpp"
#include "cpmonoid/external.hpp"
#include "cpmonoid/morphism.hpp"
#include "cpmonoid/oracle.hpp"
#include "cpmonoid/report.hpp"

namespace cpmonoid::cli {

  namespace {

    struct OracleOptions {
      std::string spec;
      std::string alphabet = "abc";
      std::size_t arity    = 1;
    };

    void add_oracle_options(CLI::App& app, OracleOptions& o) {
      app.add_option("--oracle", o.spec,
                     "template:FILE | builtin:NAME | table:FILE | exec:COMMAND")
          ->required();
      app.add_option("--alphabet", o.alphabet,
                     "Alphabet for builtin, table and exec oracles")
          ->capture_default_str();
      app.add_option("--arity", o.arity, "Arity of exec oracles")
          ->capture_default_str();
    }

    WordFunctionPtr make_oracle(OracleOptions const& o) {
      auto colon = o.spec.find(':');
      if (colon == std::string::npos) {
        throw FormatError("oracle spec '" + o.spec + "' has no scheme");
      }
      std::string scheme = o.spec.substr(0, colon);
      std::string rest   = o.spec.substr(colon + 1);
      if (scheme == "template") {
        return from_template(read_template_file(rest));
      }
      Alphabet alphabet(o.alphabet);
      if (scheme == "builtin") {
        return builtin(rest, alphabet);
      }
      if (scheme == "table") {
        return read_table_file(rest, alphabet);
      }
      if (scheme == "exec") {
        return external(rest, o.arity, alphabet);
      }
      throw FormatError("unknown oracle scheme '" + scheme + "'");
    }

    WordTuple to_words(std::vector<std::string> const& args) {
      WordTuple t;
      for (auto const& a : args) {
        t.emplace_back(a);
      }
      return t;
    }

    std::uint64_t seed_from_env(std::uint64_t seed) {
      if (char const* s = std::getenv("CPMONOID_SEED"); s != nullptr) {
        try {
          return std::stoull(s);
        } catch (std::exception const&) {
          throw FormatError(std::string("CPMONOID_SEED is not a number: ") + s);
        }
      }
      return seed;
    }

  }  // namespace

  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Congruence preservation toolkit for free monoids", "cpmonoid"};
    app.require_subcommand(1);

    // eval
    auto*                    eval = app.add_subcommand("eval", "Evaluate a template");
    std::string              eval_file;
    std::vector<std::string> eval_args;
    eval->add_option("-t,--template", eval_file, "Template file")->required();
    eval->add_option("args", eval_args, "Arguments (\"\" is ε)");

    // morphism apply
    auto* morphism = app.add_subcommand("morphism", "Morphism operations");
    morphism->require_subcommand(1);
    auto*       apply = morphism->add_subcommand("apply", "Apply a morphism to a word");
    std::string morphism_file;
    std::string apply_word;
    apply->add_option("-m,--morphism", morphism_file, "Morphism file")->required();
    apply->add_option("word", apply_word, "Word (\"\" is ε)")->required();

    // profile, classify
    OracleOptions profile_o;
    auto* profile = app.add_subcommand("profile", "Length coefficients of an oracle");
    add_oracle_options(*profile, profile_o);
    OracleOptions classify_o;
    auto* classify = app.add_subcommand("classify", "Head case of an oracle");
    add_oracle_options(*classify, classify_o);

    // extract
    OracleOptions              extract_o;
    bool                       fresh = false;
    bool                       stats = false;
    std::optional<std::size_t> validate_len;
    auto* extract_cmd = app.add_subcommand("extract", "Extract a template from an oracle");
    add_oracle_options(*extract_cmd, extract_o);
    extract_cmd->add_flag("--fresh", fresh, "Use fresh-letter extraction");
    extract_cmd->add_option("--validate-len", validate_len, "Validation length bound");
    extract_cmd->add_flag("--stats", stats, "Print query counts after the template");

    // audit
    OracleOptions audit_o;
    std::string   family_name = "standard";
    std::size_t   bound       = 2;
    std::size_t   budget      = 2'000'000;
    std::uint64_t seed        = 1;
    std::size_t   count       = 64;
    std::size_t   image_len   = 2;
    auto* audit_cmd = app.add_subcommand("audit", "Search for a congruence violation");
    add_oracle_options(*audit_cmd, audit_o);
    audit_cmd->add_option("--family", family_name, "standard | finite_monoids | random")
        ->check(CLI::IsMember({"standard", "finite_monoids", "random"}))
        ->capture_default_str();
    audit_cmd->add_option("--bound", bound, "Word length bound")->capture_default_str();
    audit_cmd->add_option("--budget", budget, "Maximum comparisons")->capture_default_str();
    audit_cmd->add_option("--seed", seed, "Seed of the random family")->capture_default_str();
    audit_cmd->add_option("--count", count, "Size of the random family")
        ->capture_default_str();
    audit_cmd->add_option("--image-len", image_len, "Image length bound of the random family")
        ->capture_default_str();

    // check
    OracleOptions check_o;
    CheckBudgets  budgets;
    auto*         check = app.add_subcommand("check", "Certify or refute congruence preservation");
    add_oracle_options(*check, check_o);
    check->add_option("--bound", budgets.length_bound, "Audit word length bound")
        ->capture_default_str();
    check->add_option("--budget", budgets.audit_budget, "Comparisons per audited family")
        ->capture_default_str();
    check->add_option("--seed", budgets.seed, "Seed of the random families")
        ->capture_default_str();

    // explore
    SearchConfig config;
    std::string  explore_alphabet = "ab";
    std::string  coeff            = "1,0";
    std::string  explore_family   = "endomorphisms";
    auto* explore_cmd = app.add_subcommand("explore", "Bounded search for non-template tables");
    explore_cmd->add_option("--alphabet", explore_alphabet, "Alphabet")->capture_default_str();
    explore_cmd->add_option("--maxlen", config.domain_len, "Domain word length bound")
        ->required();
    explore_cmd->add_option("--coeff", coeff, "P,E")->capture_default_str();
    explore_cmd->add_option("--image-len", config.image_len, "Morphism image length bound")
        ->capture_default_str();
    explore_cmd->add_option("--family", explore_family, "endomorphisms | standard")
        ->check(CLI::IsMember({"endomorphisms", "standard"}))
        ->capture_default_str();
    explore_cmd->add_option("--node-budget", config.node_budget, "Search node budget")
        ->capture_default_str();
    explore_cmd->add_option("--time-budget", config.time_budget_seconds, "Seconds")
        ->capture_default_str();

    try {
      std::vector<std::string> reversed(args.rbegin(), args.rend());
      app.parse(reversed);
    } catch (CLI::CallForHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::CallForAllHelp const& e) {
      return app.exit(e, out, err);
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage;
    }

    try {
      if (eval->parsed()) {
        auto t = read_template_file(eval_file);
        out << t.eval(to_words(eval_args)).str() << "\n";
        return ok;
      }

      if (apply->parsed()) {
        auto phi = read_morphism_file(morphism_file);
        out << phi.apply(Word(apply_word)).str() << "\n";
        return ok;
      }

      if (profile->parsed()) {
        auto f  = make_oracle(profile_o);
        auto lc = length_profile(*f);
        if (auto const* d = std::get_if<Diagnosis>(&lc)) {
          out << to_string(*d);
          return found;
        }
        out << to_string(std::get<LengthCoefficients>(lc), f->alphabet());
        return ok;
      }

      if (classify->parsed()) {
        auto f    = make_oracle(classify_o);
        auto head = classify_head(*f);
        if (auto const* d = std::get_if<Diagnosis>(&head)) {
          out << to_string(*d);
          return found;
        }
        out << "head " << to_string(std::get<HeadCase>(head)) << "\n";
        return ok;
      }

      if (extract_cmd->parsed()) {
        auto           f = make_oracle(extract_o);
        ExtractOptions options;
        options.validation_len = validate_len;
        auto outcome = fresh ? extract_fresh(f, options) : extract(f, options);
        out << to_string(outcome);
        if (auto const* e = std::get_if<Extracted>(&outcome)) {
          if (stats) {
            out << "queries " << e->queries << "\nvalidation_queries "
                << e->validation_queries << "\nvalidation_len " << e->validation_len
                << "\n";
          }
          return ok;
        }
        return found;
      }

      if (audit_cmd->parsed()) {
        auto   f = make_oracle(audit_o);
        Family family;
        if (family_name == "finite_monoids") {
          family = Family::finite_monoids();
        } else if (family_name == "random") {
          family = Family::random(seed_from_env(seed), count, image_len);
        }
        auto r = audit(*f, family, bound, budget);
        out << to_string(r, family, bound);
        if (r.witness) {
          return found;
        }
        return r.budget_exhausted ? exhausted : ok;
      }

      if (check->parsed()) {
        auto f       = make_oracle(check_o);
        budgets.seed = seed_from_env(budgets.seed);
        auto v       = theorem_check(f, budgets);
        out << to_string(v);
        if (std::holds_alternative<CertifiedCP>(v)) {
          return ok;
        }
        return std::holds_alternative<RefutedCP>(v) ? found : exhausted;
      }

      if (explore_cmd->parsed()) {
        config.alphabet = Alphabet(explore_alphabet);
        auto comma      = coeff.find(',');
        if (comma == std::string::npos) {
          throw FormatError("--coeff expects P,E");
        }
        try {
          config.p = std::stoul(coeff.substr(0, comma));
          config.e = std::stoul(coeff.substr(comma + 1));
        } catch (std::exception const&) {
          throw FormatError("--coeff expects P,E, got '" + coeff + "'");
        }
        config.family = explore_family == "standard" ? SearchConfig::FamilyKind::standard
                                                     : SearchConfig::FamilyKind::endomorphisms;
        auto report = explore(config);
        out << to_string(report);
        return report.exit_status();
      }
    } catch (OracleError const& e) {
      err << "error: " << e.what() << "\n";
      return protocol;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return usage;
    }
    return usage;
  }

}  // namespace cpmonoid::cli
