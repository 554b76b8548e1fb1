#include "clifftwist/render.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace clifftwist {

using ordered_json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "json") return OutputFormat::json;
  if (name == "markdown") return OutputFormat::markdown;
  if (name == "csv") return OutputFormat::csv;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected text|json|markdown|csv)");
}

ProductKind parse_product(const std::string& name) {
  if (name == "tp") return ProductKind::tp;
  if (name == "beta+") return ProductKind::beta_plus;
  if (name == "beta-") return ProductKind::beta_minus;
  throw std::invalid_argument("unknown product '" + name +
                              "' (expected tp|beta+|beta-)");
}

std::string product_name(ProductKind kind) {
  switch (kind) {
    case ProductKind::tp:
      return "tp";
    case ProductKind::beta_plus:
      return "beta+";
    default:
      return "beta-";
  }
}

std::string k_class_symbol(KClass cls) {
  switch (cls) {
    case KClass::R:
      return "R";
    case KClass::C:
      return "C";
    case KClass::H:
      return "H";
    case KClass::DR:
      return "2R";
    default:
      return "2H";
  }
}

namespace {

std::string monomial_list(const std::vector<Mask>& masks, int n,
                          const char* sep = ", ") {
  std::string s;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i) s += sep;
    s += monomial_name(masks[i], n);
  }
  return s;
}

std::vector<std::string> monomial_names(const std::vector<Mask>& masks, int n) {
  std::vector<std::string> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(monomial_name(m, n));
  return out;
}

std::string type_name(const CliData& cd) {
  return cd.simple ? "simple" : "semisimple";
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string render_clidata(const CliData& cd, OutputFormat fmt) {
  const int n = cd.sig.n();
  switch (fmt) {
    case OutputFormat::text:
      return "[" + k_class_name(cd.cls) + ", " + std::to_string(cd.N) + ", " +
             type_name(cd) + ", " + render(cd.f.value) + ", [" +
             monomial_list(cd.data5, n) + "], [" + monomial_list(cd.data6, n) +
             "], [" + monomial_list(cd.data7, n) + "]]\n";
    case OutputFormat::json: {
      ordered_json j;
      j["field"] = k_class_name(cd.cls);
      j["dim"] = cd.N;
      j["type"] = type_name(cd);
      j["idempotent"] = render(cd.f.value);
      j["spinor_basis_R"] = monomial_names(cd.data5, n);
      j["k_basis"] = monomial_names(cd.data6, n);
      j["spinor_basis_K"] = monomial_names(cd.data7, n);
      return j.dump(2) + "\n";
    }
    case OutputFormat::markdown: {
      std::ostringstream os;
      os << "## clidata " << to_string(cd.sig) << "\n\n";
      os << "| entry | value |\n|---|---|\n";
      os << "| field | " << k_class_name(cd.cls) << " |\n";
      os << "| dim | " << cd.N << " |\n";
      os << "| type | " << type_name(cd) << " |\n";
      os << "| idempotent | " << render(cd.f.value) << " |\n";
      os << "| spinor basis over R | " << monomial_list(cd.data5, n) << " |\n";
      os << "| K basis | " << monomial_list(cd.data6, n) << " |\n";
      os << "| spinor basis over K | " << monomial_list(cd.data7, n) << " |\n";
      return os.str();
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "p,q,field,dim,type,idempotent,spinor_basis_R,k_basis,spinor_basis_K\n";
      os << cd.sig.p << "," << cd.sig.q << "," << k_class_name(cd.cls) << ","
         << cd.N << "," << type_name(cd) << "," << csv_quote(render(cd.f.value))
         << "," << csv_quote(monomial_list(cd.data5, n, ";")) << ","
         << csv_quote(monomial_list(cd.data6, n, ";")) << ","
         << csv_quote(monomial_list(cd.data7, n, ";")) << "\n";
      return os.str();
    }
  }
  return {};
}

GroupsView make_groups_view(const Signature& sig, std::vector<int> signs) {
  CliData cd = make_clidata(sig, std::move(signs));
  GroupSubset g = vee_group(sig);
  GroupSubset gf = stabilizer(cd.f);
  GroupSubset t = idempotent_group(cd.f);
  GroupSubset kf = field_group(cd.f, cd.data6);
  return GroupsView{std::move(cd), std::move(g), std::move(gf), std::move(t),
                    std::move(kf)};
}

namespace {

std::string pm_collapsed(const GroupSubset& s, int n) {
  std::string out = "{";
  const auto monos = s.monomials();
  for (std::size_t i = 0; i < monos.size(); ++i) {
    if (i) out += ", ";
    out += "±" + monomial_name(monos[i], n);
  }
  out += "}";
  return out;
}

std::vector<std::string> signed_names(const GroupSubset& s, int n) {
  std::vector<VeeElement> elems = s.elements();
  std::sort(elems.begin(), elems.end(), vee_less);
  std::vector<std::string> out;
  for (const auto& e : elems) {
    std::string name = monomial_name(e.mask, n);
    out.push_back(e.sign < 0 ? "-" + name : name);
  }
  return out;
}

}  // namespace

std::string render_groups(const GroupsView& v, OutputFormat fmt) {
  const int n = v.cd.sig.n();
  switch (fmt) {
    case OutputFormat::text:
    case OutputFormat::markdown: {
      std::ostringstream os;
      const bool md = fmt == OutputFormat::markdown;
      if (md) os << "## groups " << to_string(v.cd.sig) << "\n\n```\n";
      else os << to_string(v.cd.sig) << "\n";
      os << "f    = " << render(v.cd.f.value) << "\n";
      os << "G    = " << pm_collapsed(v.g, n) << "  (order " << v.g.order() << ")\n";
      os << "G(f) = " << pm_collapsed(v.gf, n) << "  (order " << v.gf.order() << ")\n";
      os << "T(f) = " << pm_collapsed(v.t, n) << "  (order " << v.t.order() << ")\n";
      os << "K(f) = " << pm_collapsed(v.kf, n) << "  (order " << v.kf.order() << ")\n";
      os << "G/T(f)    -> {" << monomial_list(v.cd.data5, n)
         << "}  spinor basis over R\n";
      os << "G(f)/T(f) -> {" << monomial_list(v.cd.data6, n) << "}  K basis\n";
      os << "G/G(f)    -> {" << monomial_list(v.cd.data7, n)
         << "}  spinor basis over K\n";
      if (md) os << "```\n";
      return os.str();
    }
    case OutputFormat::json: {
      ordered_json j;
      j["p"] = v.cd.sig.p;
      j["q"] = v.cd.sig.q;
      j["idempotent"] = render(v.cd.f.value);
      auto group_json = [&](const GroupSubset& s) {
        ordered_json g;
        g["order"] = s.order();
        g["elements"] = signed_names(s, n);
        return g;
      };
      j["G"] = group_json(v.g);
      j["Gf"] = group_json(v.gf);
      j["Tf"] = group_json(v.t);
      j["Kf"] = group_json(v.kf);
      ordered_json tr;
      tr["spinor_basis_R"] = monomial_names(v.cd.data5, n);
      tr["k_basis"] = monomial_names(v.cd.data6, n);
      tr["spinor_basis_K"] = monomial_names(v.cd.data7, n);
      j["transversals"] = tr;
      return j.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "group,order,elements\n";
      auto row = [&](const char* name, const GroupSubset& s) {
        std::string joined;
        for (const auto& e : signed_names(s, n)) {
          if (!joined.empty()) joined += ";";
          joined += e;
        }
        os << name << "," << s.order() << "," << csv_quote(joined) << "\n";
      };
      row("G", v.g);
      row("Gf", v.gf);
      row("Tf", v.t);
      row("Kf", v.kf);
      return os.str();
    }
  }
  return {};
}

std::string render_verify(const std::vector<VerifyReport>& reports,
                          OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::text:
    case OutputFormat::markdown: {
      std::ostringstream os;
      std::size_t passed = 0, total = 0;
      for (const auto& r : reports) {
        os << to_string(r.sig) << "\n";
        for (const auto& c : r.clauses) {
          os << "  [" << (c.pass ? "pass" : "FAIL") << "] (" << c.id << ") "
             << c.label;
          if (!c.detail.empty()) os << "  -- " << c.detail;
          os << "\n";
          ++total;
          if (c.pass) ++passed;
        }
      }
      os << "RESULT: " << (passed == total ? "PASS" : "FAIL") << " (" << passed
         << "/" << total << " clauses)\n";
      return os.str();
    }
    case OutputFormat::json: {
      ordered_json arr = ordered_json::array();
      for (const auto& r : reports) {
        ordered_json j;
        j["p"] = r.sig.p;
        j["q"] = r.sig.q;
        ordered_json cl = ordered_json::array();
        for (const auto& c : r.clauses) {
          ordered_json cj;
          cj["id"] = c.id;
          cj["label"] = c.label;
          cj["pass"] = c.pass;
          if (!c.detail.empty()) cj["detail"] = c.detail;
          cl.push_back(cj);
        }
        j["clauses"] = cl;
        j["all_pass"] = r.all_pass();
        arr.push_back(j);
      }
      return arr.dump(2) + "\n";
    }
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "p,q,clause,label,pass\n";
      for (const auto& r : reports)
        for (const auto& c : r.clauses)
          os << r.sig.p << "," << r.sig.q << "," << c.id << ","
             << csv_quote(c.label) << "," << (c.pass ? "1" : "0") << "\n";
      return os.str();
    }
  }
  return {};
}

namespace {

struct Family {
  KClass cls;
  const char* title;
};

constexpr Family kFamilies[] = {
    {KClass::R, "simple, K = R  (p-q = 0,2 mod 8)"},
    {KClass::C, "simple, K = C  (p-q = 3,7 mod 8)"},
    {KClass::H, "simple, K = H  (p-q = 4,6 mod 8)"},
    {KClass::DR, "semisimple, K = 2R  (p-q = 1 mod 8)"},
    {KClass::DH, "semisimple, K = 2H  (p-q = 5 mod 8)"},
};

std::string group_cell(const TableRow& r) {
  std::string s = r.group.name;
  if (!r.group.lounesto_alias.empty()) s += " [= " + r.group.lounesto_alias + "]";
  if (r.group.nonstandard_conj) s += " *";
  return s;
}

}  // namespace

std::string render_tables(const std::vector<TableRow>& rows, ProductKind kind,
                          int max_n, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::csv: {
      std::ostringstream os;
      os << "p,q,k,N,K,group,coincides-with\n";
      for (const auto& r : rows)
        os << r.p << "," << r.q << "," << r.k << "," << r.N << ","
           << k_class_symbol(r.cls) << "," << csv_quote(r.group.name) << ","
           << r.coincides << "\n";
      return os.str();
    }
    case OutputFormat::json: {
      ordered_json j;
      j["max_n"] = max_n;
      j["product"] = product_name(kind);
      ordered_json arr = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json rj;
        rj["p"] = r.p;
        rj["q"] = r.q;
        rj["k"] = r.k;
        rj["N"] = r.N;
        rj["K"] = k_class_symbol(r.cls);
        rj["group"] = r.group.name;
        if (!r.group.lounesto_alias.empty())
          rj["lounesto_alias"] = r.group.lounesto_alias;
        if (r.group.nonstandard_conj) rj["nonstandard_conjugation"] = true;
        if (!r.coincides.empty()) rj["coincides_with"] = r.coincides;
        arr.push_back(rj);
      }
      j["rows"] = arr;
      return j.dump(2) + "\n";
    }
    case OutputFormat::markdown:
    case OutputFormat::text: {
      std::ostringstream os;
      const bool md = fmt == OutputFormat::markdown;
      os << (md ? "# " : "") << "Automorphism groups of the " << product_name(kind)
         << " spinor scalar product, p+q <= " << max_n << "\n";
      for (const auto& fam : kFamilies) {
        bool any = false;
        for (const auto& r : rows)
          if (r.cls == fam.cls) any = true;
        if (!any) continue;
        os << "\n" << (md ? "## " : "-- ") << fam.title << "\n";
        if (md) {
          os << "\n| (p,q) | k | N | group | coincides with |\n";
          os << "|---|---|---|---|---|\n";
          for (const auto& r : rows) {
            if (r.cls != fam.cls) continue;
            os << "| (" << r.p << "," << r.q << ") | " << r.k << " | " << r.N
               << " | " << group_cell(r) << " | " << r.coincides << " |\n";
          }
        } else {
          for (const auto& r : rows) {
            if (r.cls != fam.cls) continue;
            os << "  (" << r.p << "," << r.q << ")  k=" << r.k << " N=" << r.N
               << "  " << group_cell(r);
            if (!r.coincides.empty()) os << "  [tp = " << r.coincides << "]";
            os << "\n";
          }
        }
      }
      return os.str();
    }
  }
  return {};
}

}  // namespace clifftwist
