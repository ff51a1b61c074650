#pragma once

// Deterministic `key = value` reports over the structure modules, the
// shipped example catalog and the structure miner.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "genaff/actions.hpp"
#include "genaff/affine.hpp"
#include "genaff/error.hpp"
#include "genaff/formats.hpp"
#include "genaff/malcev.hpp"

namespace genaff {

// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerification = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitBudget = 3;

class Report {
 public:
  void add(std::string key, std::string value);
  void add(std::string key, const char* value) { add(std::move(key), std::string(value)); }
  void add(std::string key, bool value) { add(std::move(key), std::string(value ? "true" : "false")); }
  void add(std::string key, std::size_t value) { add(std::move(key), std::to_string(value)); }
  // `key = true|false`, then `key.witness = (...)` when the law fails.
  void law(const std::string& key, const LawCheck& c);
  void law(const std::string& key, bool holds, const std::optional<Witness>& w);

  std::optional<std::string> get(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string str() const;

  int status = kExitOk;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

// Catalog groups of the same order isomorphic to g, comma separated, or "-".
std::string isomorphic_catalog_names(const FiniteGroup& g);

// Keys: verb, domain, domain_kind, domain_size, carrier_size, variance, one
// line per flag (group flags "n/a" on set domains) with witnesses, image_*,
// and image_group_* when the image is a group.
Report run_classify(const Action& a, Variance variance = Variance::covariant);

// Certifies V (the action's domain unless `vectors` is given) and the space.
// Keys: verb, vectors, prime, dimension, points, kind, chasles,
// chasles_translation, parallelogram, torsion_free, translation_group_*,
// scalars_used. A failed verification sets error, error.rule,
// error.witness and status 1.
Report run_affine(const Action& a, const std::optional<FiniteGroup>& vectors = std::nullopt,
                  bool allow_semi = false);

// Keys: verb, vectors, points, kind, constant, common_image_size, the
// FieldLaws lines, induced_kind, induced_closed_set.
Report run_field(const FieldData& f);

// measure ∈ torsion0, torsion1, torsion1_star, torsion0_star, curvature0,
// curvature1, dstar, transport. The input is an Action (a preaffine space; the
// star measures use its constant field) or a FieldData (torsion0/1 use the
// induced space). Every tuple is tabulated when there are at most 10⁴ of them
// or `exhaustive` is set.
Report run_deform(const Structure& s, const std::string& measure, bool exhaustive = false);

// command ∈ check, iterate, recover, pointed. `base` names e for recover and
// pointed (default: the first element).
Report run_malcev(const MalcevStructure& k, const std::string& command,
                  const std::optional<std::string>& base = std::nullopt);

struct MineOptions {
  std::string family;               // preaffine_bijections, multiaffine_automorphism_fields,
                                    // premonoidal_fields, malcev
  std::vector<std::string> params;  // family parameters, see mine()
  std::vector<std::string> filters;
  std::size_t budget = 1'000'000;   // candidates examined
  std::size_t keep = 1;             // structures retained in full
};

struct MineResult {
  Report summary;
  std::vector<Structure> kept;
};

// Families and parameters:
//   preaffine_bijections <V> <T>          filters: affine, strictly_preaffine
//   multiaffine_automorphism_fields <V> [all | i,j,...]
//                                         filters: constant, nonconstant, nonzero_torsion1_star
//   premonoidal_fields <V> <T>            filters: nonzero_curvature0, strictly_semipreaffine
//   malcev <n> <law,law,...>              filters: associative, nonassociative,
//                                                  strictly_semipreaffine, nonassociative_pointed_sum
// Group names refer to the catalog. Every kept structure is re-verified.
// Running out of budget flags the summary (budget_exhausted = true, status 3).
MineResult mine(const MineOptions& options);

// Shipped examples by file name ("Q.group", "c8_on_q.action", ...).
const std::map<std::string, Structure>& example_catalog();

}  // namespace genaff
