#include "glp/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "glp/analysis.hpp"
#include "glp/derivations.hpp"
#include "glp/error.hpp"
#include "glp/formula.hpp"
#include "glp/proof.hpp"
#include "glp/reduction.hpp"
#include "glp/worm_order.hpp"

namespace glp::cli {

namespace {

constexpr int kOk = 0;
constexpr int kReject = 1;
constexpr int kInputError = 2;

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ModalIndex index_arg(const std::string& text) { return ModalIndex(parse_ordinal(text)); }

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-fragment GLP: worms, ordinals, proofs and descent certificates", "glp"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  std::function<int()> action;
  std::string s1, s2, s3, file, out_file;
  std::uint64_t k = 0, depth = kDefaultSearchDepth, K = kDefaultK;
  bool normalized = false, dia = false;

  auto* parse = app.add_subcommand("parse", "Print a formula in canonical form");
  parse->add_option("formula", s1)->required();
  parse->callback([&] {
    action = [&] {
      out << print_formula(parse_formula(s1)) << "\n";
      return kOk;
    };
  });

  auto* cmp = app.add_subcommand("cmp", "Compare two worms under <_0 (LT, EQ or GT)");
  cmp->add_option("a", s1)->required();
  cmp->add_option("b", s2)->required();
  cmp->callback([&] {
    action = [&] {
      out << to_string(worm_cmp(parse_worm(s1), parse_worm(s2))) << "\n";
      return kOk;
    };
  });

  auto* ord = app.add_subcommand("ord", "Print the ordinal o(worm)");
  ord->add_option("worm", s1)->required();
  ord->callback([&] {
    action = [&] {
      out << print_ordinal(worm_ordinal(parse_worm(s1))) << "\n";
      return kOk;
    };
  });

  auto* worm_of = app.add_subcommand("worm-of", "Print the canonical worm of an ordinal");
  worm_of->add_option("ordinal", s1)->required();
  worm_of->callback([&] {
    action = [&] {
      out << print_worm(worm_of_ordinal(parse_ordinal(s1))) << "\n";
      return kOk;
    };
  });

  auto* q = app.add_subcommand("q", "Print Q^k_n(phi)");
  q->add_option("n", s1)->required();
  q->add_option("k", k)->required();
  q->add_option("formula", s2)->required();
  q->add_flag("--normalized", normalized, "Remove T-conjuncts");
  q->callback([&] {
    action = [&] {
      const Formula f = normalized ? q_formula_normalized(index_arg(s1), k, parse_formula(s2))
                                   : q_formula(index_arg(s1), k, parse_formula(s2));
      out << print_formula(f) << "\n";
      return kOk;
    };
  });

  auto* incl = app.add_subcommand("prove-inclusion", "Prove <alpha+1>phi -> Q^k_alpha(phi)");
  incl->add_option("alpha", s1)->required();
  incl->add_option("k", k)->required();
  incl->add_option("formula", s2)->required();
  incl->add_flag("--dia", dia, "Prove <alpha+1>phi -> <alpha>Q^k_alpha(phi) instead");
  incl->callback([&] {
    action = [&] {
      const ModalIndex alpha = index_arg(s1);
      const Formula phi = parse_formula(s2);
      out << print_proof(dia ? derive_inclusion_dia(alpha, k, phi) : derive_inclusion(alpha, k, phi));
      return kOk;
    };
  });

  auto* check = app.add_subcommand("check", "Check a proof file");
  check->add_option("prooffile", file)->required();
  check->callback([&] {
    action = [&] {
      const CheckResult r = check_proof(parse_proof(read_file(file)));
      if (r.ok()) {
        out << "OK\n";
        return kOk;
      }
      out << "ERROR line " << r.error->line << ": " << r.error->reason << "\n";
      return kReject;
    };
  });

  auto* less = app.add_subcommand("certify-less", "Search for a proof of b -> <0>a");
  less->add_option("a", s1)->required();
  less->add_option("b", s2)->required();
  less->add_option("--depth", depth, "Search depth")->capture_default_str();
  less->callback([&] {
    action = [&] {
      auto p = certify_less(parse_worm(s1), parse_worm(s2), depth);
      if (!p) {
        out << "NOT FOUND\n";
        return kReject;
      }
      out << print_proof(*p);
      return kOk;
    };
  });

  auto* elim = app.add_subcommand("eliminate", "Replace reflection-rule steps by a Q^k axiom");
  elim->add_option("derivationfile", file)->required();
  elim->callback([&] {
    action = [&] {
      const RuleDerivation d = parse_rule_derivation(read_file(file));
      try {
        const Elimination e = eliminate_rule(d);
        out << "k " << e.k << "\n" << print_proof(e.proof);
        return kOk;
      } catch (const DerivationError& e) {
        out << "ERROR step " << e.step() << ": " << e.what() << "\n";
        return kReject;
      }
    };
  });

  auto* certify = app.add_subcommand("certify", "Build a descent certificate for a worm");
  certify->add_option("worm", s1)->required();
  certify->add_option("--k", K, "Children per reduction step, minus one")->capture_default_str();
  certify->add_option("--out", out_file, "Write the certificate here instead of standard output");
  certify->callback([&] {
    action = [&] {
      const std::string text = serialize_certificate(build_certificate(parse_worm(s1), K, SymbolicGlpProvider{}));
      if (out_file.empty()) {
        out << text;
        return kOk;
      }
      std::ofstream f(out_file, std::ios::binary);
      if (!(f << text)) throw InputError("cannot write " + out_file);
      return kOk;
    };
  });

  auto* verify = app.add_subcommand("verify", "Verify a certificate file");
  verify->add_option("certfile", file)->required();
  verify->callback([&] {
    action = [&] {
      auto e = verify_certificate(parse_certificate(read_file(file)));
      if (!e) {
        out << "OK\n";
        return kOk;
      }
      out << "ERROR " << e->path << ": " << e->reason << "\n";
      return kReject;
    };
  });

  auto* theory = app.add_subcommand("theory-ord", "Print the Pi^0_1 ordinal of a theory spec");
  theory->add_option("specfile", file)->required();
  theory->callback([&] {
    action = [&] {
      out << print_bound(pi1_ordinal(parse_theory_spec(read_file(file)))) << "\n";
      return kOk;
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    return action();
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kInputError;
}

}  // namespace glp::cli
