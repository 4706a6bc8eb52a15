#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "solvstab/constructions.hpp"

namespace solvstab {

enum class Provenance { semilinear, wreath, named, imported };
std::string to_string(Provenance p);

/// One catalog member. All flags are recomputed from the group itself, never
/// trusted from input: irreducibility by spinning, affine primitivity by the
/// block algorithm.
struct CatalogEntry {
  std::string label;
  Provenance provenance = Provenance::named;
  std::variant<std::monostate, MatrixGroup, PermGroup> group;

  std::uint64_t order = 0;        // order of the linear (or imported perm) group
  int p = 0;                      // characteristic; 0 for permutation imports
  int n = 0;                      // dimension, or degree for permutation imports
  bool irreducible = false;       // matrix entries only
  bool odd_order = false;         // p odd and |G| odd (|G| odd for perm imports)
  bool primitive_affine = false;  // primitivity of the affine action

  // For wreath entries: labels of the construction inputs (H, S).
  std::optional<std::pair<std::string, std::string>> wreath_parts;

  bool is_matrix() const { return std::holds_alternative<MatrixGroup>(group); }
  const MatrixGroup& matrix() const { return std::get<MatrixGroup>(group); }
  const PermGroup& perm() const { return std::get<PermGroup>(group); }

  /// The permutation group the theorem checks run on: affine_group(M) for
  /// matrix entries, the imported group itself otherwise.
  PermGroup action() const;
};

struct CatalogLimits {
  int max_field = 243;    // p^m cap for the semilinear families
  int max_dimension = 6;  // dimension cap for wreath products
  int max_degree = 243;   // p^n cap for every constructed entry
  bool odd_only = false;
};

/// Deterministic assembly: all irreducible semilinear subgroups within the
/// limits, wreath products of those with the transitive solvable groups of
/// degree 2..5, the named solvable groups, then imported fixtures in call
/// order. Duplicate labels are rejected.
std::vector<CatalogEntry> build_catalog(const CatalogLimits& limits,
                                        const std::vector<std::string>& import_paths = {});

/// Recompute order and flags for a group from any source.
CatalogEntry make_entry(std::string label, Provenance provenance, MatrixGroup group);
CatalogEntry make_entry(std::string label, Provenance provenance, PermGroup group);

/// JSON import. Matrix schema: {"label", "characteristic", "dimension",
/// "generators": [row-major int lists]}. Permutation schema: {"label",
/// "degree", "generators": [image lists or cycle strings]}.
CatalogEntry import_group(const std::string& path);
CatalogEntry import_group_json(const std::string& json_text, const std::string& origin);

std::string export_group_json(const std::string& label, const MatrixGroup& M);
std::string export_group_json(const std::string& label, const PermGroup& G);

const CatalogEntry* find_entry(const std::vector<CatalogEntry>& catalog,
                               const std::string& label);

}  // namespace solvstab
