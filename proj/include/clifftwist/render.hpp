#pragma once

#include <string>
#include <vector>

#include "clifftwist/tables.hpp"
#include "clifftwist/verify.hpp"

namespace clifftwist {

enum class OutputFormat { text, json, markdown, csv };

/// Throws std::invalid_argument on unknown names.
OutputFormat parse_format(const std::string& name);
ProductKind parse_product(const std::string& name);
std::string product_name(ProductKind kind);

/// Short class symbol for table columns: R, C, H, 2R, 2H.
std::string k_class_symbol(KClass cls);

std::string render_clidata(const CliData& cd, OutputFormat fmt);

/// Group listing around one idempotent: the four groups and the three
/// transversals with their quotient labels.
struct GroupsView {
  CliData cd;
  GroupSubset g;
  GroupSubset gf;
  GroupSubset t;
  GroupSubset kf;
};

GroupsView make_groups_view(const Signature& sig, std::vector<int> signs = {});
std::string render_groups(const GroupsView& v, OutputFormat fmt);

std::string render_verify(const std::vector<VerifyReport>& reports,
                          OutputFormat fmt);

std::string render_tables(const std::vector<TableRow>& rows, ProductKind kind,
                          int max_n, OutputFormat fmt);

}  // namespace clifftwist
