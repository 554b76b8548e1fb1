#include "clifftwist.h"

#include <cstring>
#include <string>

#include "clifftwist/render.hpp"
#include "clifftwist/sweep.hpp"

using namespace clifftwist;

struct ct_algebra {
  Signature sig;
  std::vector<int> signs;
  CliData cd;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<int> parse_signs(const char* signs) {
  std::vector<int> out;
  if (!signs) return out;
  for (const char* c = signs; *c; ++c) {
    if (*c == '+')
      out.push_back(+1);
    else if (*c == '-')
      out.push_back(-1);
    else
      throw std::invalid_argument("signs must be a string over '+'/'-'");
  }
  return out;
}

template <typename Fn>
ct_status guarded(Fn&& fn) {
  try {
    fn();
    return CT_OK;
  } catch (const std::invalid_argument& e) {
    g_last_error = e.what();
    return std::string(e.what()).find("engine limit") != std::string::npos
               ? CT_ERR_LIMIT
               : CT_ERR_ARGUMENT;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return CT_ERR_INTERNAL;
  }
}

}  // namespace

extern "C" {

ct_status ct_algebra_new(int p, int q, const char* signs, ct_algebra** out) {
  if (!out) return CT_ERR_ARGUMENT;
  *out = nullptr;
  return guarded([&] {
    const Signature sig = make_signature(p, q);
    auto sv = parse_signs(signs);
    *out = new ct_algebra{sig, sv, make_clidata(sig, sv)};
  });
}

void ct_algebra_free(ct_algebra* a) { delete a; }

int ct_algebra_p(const ct_algebra* a) { return a ? a->sig.p : -1; }
int ct_algebra_q(const ct_algebra* a) { return a ? a->sig.q : -1; }
int ct_algebra_k(const ct_algebra* a) {
  return a ? static_cast<int>(a->cd.f.gens.size()) : -1;
}

ct_status ct_clidata(const ct_algebra* a, const char* format, char** out) {
  if (!a || !format || !out) return CT_ERR_ARGUMENT;
  return guarded([&] { *out = dup_string(render_clidata(a->cd, parse_format(format))); });
}

ct_status ct_groups(const ct_algebra* a, const char* format, char** out) {
  if (!a || !format || !out) return CT_ERR_ARGUMENT;
  return guarded([&] {
    *out = dup_string(
        render_groups(make_groups_view(a->sig, a->signs), parse_format(format)));
  });
}

ct_status ct_verify(const ct_algebra* a, uint64_t seed, const char* format,
                    int* all_pass, char** out) {
  if (!a || !format || !all_pass || !out) return CT_ERR_ARGUMENT;
  return guarded([&] {
    const VerifyReport r = verify_signature(a->sig, seed);
    *all_pass = r.all_pass() ? 1 : 0;
    *out = dup_string(render_verify({r}, parse_format(format)));
  });
}

ct_status ct_verify_sweep(int max_n, uint64_t seed, int jobs,
                          const char* format, int* all_pass, char** out) {
  if (!format || !all_pass || !out) return CT_ERR_ARGUMENT;
  return guarded([&] {
    if (max_n < 0 || max_n > kMaxGenerators)
      throw std::invalid_argument("sweep bound exceeds the engine limit of 32");
    const OutputFormat fmt = parse_format(format);
    const auto sigs = signatures_up_to(max_n);
    std::vector<VerifyReport> reports(sigs.size());
    parallel_for_index(sigs.size(), jobs, [&](std::size_t i) {
      reports[i] = verify_signature(sigs[i], seed);
    });
    bool ok = true;
    for (const auto& r : reports) ok = ok && r.all_pass();
    *all_pass = ok ? 1 : 0;
    *out = dup_string(render_verify(reports, fmt));
  });
}

ct_status ct_tables(int max_n, const char* product, const char* format,
                    int jobs, char** out) {
  if (!product || !format || !out) return CT_ERR_ARGUMENT;
  return guarded([&] {
    if (max_n < 0 || max_n > kMaxGenerators)
      throw std::invalid_argument("sweep bound exceeds the engine limit of 32");
    const ProductKind kind = parse_product(product);
    const OutputFormat fmt = parse_format(format);
    const auto rows = table_sweep(max_n, kind, jobs);
    *out = dup_string(render_tables(rows, kind, max_n, fmt));
  });
}

void ct_string_free(char* s) { delete[] s; }

const char* ct_status_name(ct_status s) {
  switch (s) {
    case CT_OK:
      return "ok";
    case CT_ERR_ARGUMENT:
      return "invalid argument";
    case CT_ERR_LIMIT:
      return "engine limit exceeded";
    default:
      return "internal error";
  }
}

const char* ct_last_error(void) { return g_last_error.c_str(); }

int ct_abi_version(void) { return 1; }

}  // extern "C"
