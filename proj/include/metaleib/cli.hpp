#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "metaleib/element.hpp"
#include "metaleib/error.hpp"
#include "metaleib/invariants.hpp"
#include "metaleib/maps.hpp"
#include "metaleib/parse.hpp"
#include "metaleib/render.hpp"
#include "metaleib/verify.hpp"

namespace metaleib {

/// Process exit codes of the command-line tool.
enum ExitCode : int { kExitTrue = 0, kExitFalse = 1, kExitUsage = 2 };

struct CommandResult {
  int code = kExitTrue;
  std::string out;
  std::string err;
};

namespace detail {

struct CommandArgs {
  std::size_t n = 0;
  std::string format = "text";
  std::string expr;
  std::string u;
  std::string v;
  std::string data;
  int degree = 1;
  std::string suite = "all";
  VerifyOptions verify;
};

inline void add_rank(CLI::App* cmd, CommandArgs& a) {
  cmd->add_option("-n,--rank", a.n, "rank n of L_n")->required()->check(CLI::Range(std::size_t{1}, std::size_t{64}));
}
inline void add_format(CLI::App* cmd, CommandArgs& a) {
  cmd->add_option("--format", a.format, "output format")->check(CLI::IsMember({"text", "json"}));
}
inline CLI::App* query(CLI::App& parent, const std::string& name, const std::string& help, CommandArgs& a) {
  auto* cmd = parent.add_subcommand(name, help);
  add_rank(cmd, a);
  add_format(cmd, a);
  return cmd;
}

inline std::string element_out(const LeibnizElement& e, const std::string& format) {
  return format == "json" ? to_json(e).dump(2) + "\n" : to_text(e) + "\n";
}

inline CommandResult boolean_out(bool value, const char* key, const std::string& format) {
  CommandResult r;
  r.code = value ? kExitTrue : kExitFalse;
  r.out = format == "json" ? Json{{key, value}}.dump(2) + "\n" : std::string(value ? "true" : "false") + "\n";
  return r;
}

inline LeibnizElement commutator_arg(const std::string& text, std::size_t n) {
  auto u = parse_element(text, n);
  if (!u.in_commutator()) throw DomainError("u = " + to_text(u) + " is not in L_n' (it has a linear part)");
  return u;
}

}  // namespace detail

/// Runs one command line (without the program name) and captures its output.
/// `in` supplies SymmetricData when `--data -` is given.
inline CommandResult run_command(const std::vector<std::string>& argv, std::istream& in = std::cin) {
  using detail::CommandArgs;
  CommandArgs a;
  CLI::App app{"Exact computation in the free metabelian Leibniz algebra L_n", "metaleib"};
  app.require_subcommand(1);

  auto* normalize_cmd = detail::query(app, "normalize", "normal form of a bracket expression", a);
  normalize_cmd->add_option("expr", a.expr, "expression")->required();

  auto* sym = app.add_subcommand("sym", "symmetric elements");
  sym->require_subcommand(1);
  auto* sym_check = detail::query(*sym, "check", "is the element fixed by S_n", a);
  sym_check->add_option("expr", a.expr)->required();
  auto* sym_decompose = detail::query(*sym, "decompose", "(alpha, f, g) of a symmetric element", a);
  sym_decompose->add_option("expr", a.expr)->required();
  auto* sym_synth = detail::query(*sym, "synth", "symmetric element from SymmetricData JSON", a);
  sym_synth->add_option("--data", a.data, "JSON file, or - for standard input")->required();
  auto* sym_symmetrize = detail::query(*sym, "symmetrize", "orbit average over S_n", a);
  sym_symmetrize->add_option("expr", a.expr)->required();
  auto* sym_basis = detail::query(*sym, "basis", "brute-force basis of symmetric elements of degree d", a);
  sym_basis->add_option("-d,--degree", a.degree)->required()->check(CLI::PositiveNumber);

  auto* ann = app.add_subcommand("ann", "annihilator");
  ann->require_subcommand(1);
  auto* ann_check = detail::query(*ann, "check", "membership in Ann(L_n)", a);
  ann_check->add_option("expr", a.expr)->required();

  auto* inner = app.add_subcommand("inner", "inner automorphisms psi_u = 1 + ad u");
  inner->require_subcommand(1);
  auto* inner_apply_cmd = detail::query(*inner, "apply", "psi_u(v)", a);
  inner_apply_cmd->add_option("-u", a.u)->required();
  inner_apply_cmd->add_option("-v", a.v)->required();
  auto* inner_preserves = detail::query(*inner, "preserves", "does psi_u preserve symmetric elements", a);
  inner_preserves->add_option("-u", a.u)->required();
  auto* inner_decompose = detail::query(*inner, "decompose", "split u into Ann + symmetric parts", a);
  inner_decompose->add_option("-u", a.u)->required();

  auto* verify = app.add_subcommand("verify", "seeded property suites");
  verify->add_option("--suite", a.suite)->check(CLI::IsMember({"identities", "theorems", "inner", "all"}));
  verify->add_option("--cases", a.verify.cases);
  verify->add_option("--seed", a.verify.seed);
  verify->add_option("--max-n", a.verify.max_n)->check(CLI::Range(std::size_t{1}, kDefaultSymmetrizeBound));
  verify->add_option("--max-deg", a.verify.max_deg)->check(CLI::Range(1, 8));

  CommandResult result;
  std::ostringstream out, err;
  std::vector<std::string> args(argv.rbegin(), argv.rend());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    result.code = app.exit(e, out, err) == 0 ? kExitTrue : kExitUsage;
    result.out = out.str();
    result.err = err.str();
    return result;
  }

  try {
    const auto n = a.n;
    const auto& fmt = a.format;
    if (*normalize_cmd) {
      result.out = detail::element_out(parse_element(a.expr, n), fmt);
    } else if (*sym_check) {
      result = detail::boolean_out(is_symmetric(parse_element(a.expr, n)), "symmetric", fmt);
    } else if (*sym_decompose) {
      auto d = decompose_symmetric(parse_element(a.expr, n));
      result.out = fmt == "json" ? to_json(d).dump(2) + "\n"
                                 : "alpha = " + d.alpha.to_string() + "\nf = " + d.f.to_string() +
                                       "\ng = " + d.g.to_string() + "\n";
    } else if (*sym_synth) {
      std::string text;
      if (a.data == "-") {
        text.assign(std::istreambuf_iterator<char>(in), {});
      } else {
        std::ifstream file(a.data);
        if (!file) throw DomainError("cannot open " + a.data);
        text.assign(std::istreambuf_iterator<char>(file), {});
      }
      auto d = symmetric_data_from_json(Json::parse(text));
      if (d.rank != n) throw RankMismatch(n, d.rank);
      result.out = detail::element_out(synthesize(d), fmt);
    } else if (*sym_symmetrize) {
      result.out = detail::element_out(symmetrize(parse_element(a.expr, n)), fmt);
    } else if (*sym_basis) {
      auto basis = invariant_basis_oracle(n, a.degree);
      if (fmt == "json") {
        Json arr = Json::array();
        for (const auto& e : basis) arr.push_back(to_json(e));
        result.out = Json{{"n", n}, {"d", a.degree}, {"dimension", basis.size()}, {"basis", arr}}.dump(2) + "\n";
      } else {
        result.out = "dimension " + std::to_string(basis.size()) + "\n";
        for (const auto& e : basis) result.out += to_text(e) + "\n";
      }
    } else if (*ann_check) {
      result = detail::boolean_out(is_in_annihilator(parse_element(a.expr, n)), "annihilator", fmt);
    } else if (*inner_apply_cmd) {
      InnerAuto psi(detail::commutator_arg(a.u, n));
      result.out = detail::element_out(psi(parse_element(a.v, n)), fmt);
    } else if (*inner_preserves) {
      result = detail::boolean_out(preserves_symmetric(detail::commutator_arg(a.u, n)), "preserves", fmt);
    } else if (*inner_decompose) {
      auto parts = decompose_preserving(detail::commutator_arg(a.u, n));
      if (fmt == "json") {
        result.out = Json{{"annihilator", to_json(parts.annihilator_part)}, {"symmetric", to_json(parts.symmetric_part)}}
                         .dump(2) +
                     "\n";
      } else {
        result.out = "ann = " + to_text(parts.annihilator_part) + "\nsym = " + to_text(parts.symmetric_part) + "\n";
      }
    } else if (*verify) {
      auto reports = verify_suite(a.suite, a.verify);
      std::size_t failing = 0;
      for (const auto& r : reports) {
        out << (r.ok() ? "PASS " : "FAIL ") << r.name << ": " << r.passed << " passed, " << r.failed << " failed\n";
        if (!r.ok()) {
          ++failing;
          out << "  first counterexample: " << r.first_failure << "\n";
        }
      }
      out << (failing == 0 ? "all checks passed" : std::to_string(failing) + " check(s) failed") << "\n";
      result.out = out.str();
      result.code = failing == 0 ? kExitTrue : kExitFalse;
    }
  } catch (const NotSymmetric& e) {
    result.code = kExitFalse;
    result.err = std::string(e.what()) + "\n";
  } catch (const Error& e) {
    result.code = kExitUsage;
    result.err = std::string("error: ") + e.what() + "\n";
  } catch (const nlohmann::json::exception& e) {
    result.code = kExitUsage;
    result.err = std::string("error: invalid JSON: ") + e.what() + "\n";
  }
  return result;
}

}  // namespace metaleib
