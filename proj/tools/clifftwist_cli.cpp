// Command-line front end over the clifftwist C API.
//
// Exit codes: 0 success / all checks pass, 1 verification failure or engine
// error, 2 usage error.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "clifftwist.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

int fail_status(ct_status st) {
  std::fprintf(stderr, "error: %s: %s\n", ct_status_name(st), ct_last_error());
  return (st == CT_ERR_ARGUMENT || st == CT_ERR_LIMIT) ? kExitUsage
                                                       : kExitVerifyFailed;
}

struct AlgebraHandle {
  ct_algebra* a = nullptr;
  ~AlgebraHandle() { ct_algebra_free(a); }
};

int print_and_free(char* s) {
  if (s) {
    std::fputs(s, stdout);
    ct_string_free(s);
  }
  return kExitOk;
}

void warn_above_golden(int n) {
  if (n > 9)
    std::fprintf(stderr,
                 "warning: p+q = %d is beyond the tabulated range (p+q <= 9); "
                 "results are computed but uncross-checked\n",
                 n);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clifftwist: exact computations in real Clifford algebras "
               "Cl(p,q) seen as twisted group rings"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string signs;
  std::string product = "tp";
  std::uint64_t seed = 42;
  int jobs = 0;

  int p = 0, q = 0, max_n = -1;

  auto* cmd_clidata = app.add_subcommand(
      "clidata", "field class, idempotent and the three spinor bases");
  cmd_clidata->add_option("p", p, "positive generators")->required();
  cmd_clidata->add_option("q", q, "negative generators")->required();
  cmd_clidata->add_option("--format", format, "text|json|markdown|csv");
  cmd_clidata->add_option("--signs", signs, "idempotent factor signs, e.g. +-+");

  auto* cmd_groups = app.add_subcommand(
      "groups", "vee group, stabilizer, idempotent and field groups");
  cmd_groups->add_option("p", p, "positive generators")->required();
  cmd_groups->add_option("q", q, "negative generators")->required();
  cmd_groups->add_option("--format", format, "text|json|markdown|csv");
  cmd_groups->add_option("--signs", signs, "idempotent factor signs");

  auto* cmd_verify = app.add_subcommand(
      "verify", "check the group-lattice theorems and representation laws");
  cmd_verify->add_option("p", p, "positive generators");
  cmd_verify->add_option("q", q, "negative generators");
  cmd_verify->add_option("--all", max_n, "verify every signature with p+q <= N");
  cmd_verify->add_option("--format", format, "text|json|markdown|csv");
  cmd_verify->add_option("--signs", signs, "idempotent factor signs");
  cmd_verify->add_option("--seed", seed, "seed for the random samples");
  cmd_verify->add_option("--jobs", jobs, "worker threads (default: CLIFFTWIST_JOBS)");

  auto* cmd_tables = app.add_subcommand(
      "tables", "classify the scalar product for every signature p+q <= N");
  cmd_tables->add_option("max_n", max_n, "largest p+q")->required();
  cmd_tables->add_option("product,--product", product, "tp|beta+|beta-");
  cmd_tables->add_option("--format", format, "text|json|markdown|csv");
  cmd_tables->add_option("--jobs", jobs, "worker threads (default: CLIFFTWIST_JOBS)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  const char* signs_arg = signs.empty() ? nullptr : signs.c_str();

  if (cmd_clidata->parsed() || cmd_groups->parsed()) {
    AlgebraHandle h;
    ct_status st = ct_algebra_new(p, q, signs_arg, &h.a);
    if (st != CT_OK) return fail_status(st);
    char* out = nullptr;
    st = cmd_clidata->parsed() ? ct_clidata(h.a, format.c_str(), &out)
                               : ct_groups(h.a, format.c_str(), &out);
    if (st != CT_OK) return fail_status(st);
    return print_and_free(out);
  }

  if (cmd_verify->parsed()) {
    int all_pass = 0;
    char* out = nullptr;
    ct_status st;
    if (max_n >= 0) {
      warn_above_golden(max_n);
      st = ct_verify_sweep(max_n, seed, jobs, format.c_str(), &all_pass, &out);
    } else {
      if (cmd_verify->count("p") == 0 || cmd_verify->count("q") == 0) {
        std::fprintf(stderr, "error: verify needs p q or --all N\n");
        return kExitUsage;
      }
      warn_above_golden(p + q);
      AlgebraHandle h;
      st = ct_algebra_new(p, q, signs_arg, &h.a);
      if (st != CT_OK) return fail_status(st);
      st = ct_verify(h.a, seed, format.c_str(), &all_pass, &out);
    }
    if (st != CT_OK) return fail_status(st);
    print_and_free(out);
    return all_pass ? kExitOk : kExitVerifyFailed;
  }

  if (cmd_tables->parsed()) {
    warn_above_golden(max_n);
    char* out = nullptr;
    const ct_status st =
        ct_tables(max_n, product.c_str(), format.c_str(), jobs, &out);
    if (st != CT_OK) return fail_status(st);
    return print_and_free(out);
  }

  return kExitUsage;
}
