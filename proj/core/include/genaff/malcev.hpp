#pragma once

// Ternary operations [x,y,z] on a finite carrier and the calculus built on
// them: translations [-,a,b], their sums and iterations, pointed sums at a
// base point e, the pointed combination x ◊_e y = [x,e,y] and the group it
// recovers from an associative Malcev operation.

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "genaff/affine.hpp"
#include "genaff/carriers.hpp"
#include "genaff/error.hpp"
#include "genaff/groups.hpp"

namespace genaff {

// A1 [x,y,y]=x            A2 [x,x,y]=y
// A3 [p,x,[x,y,z]]=[p,y,z] A4 [[p,x,y],y,z]=[p,x,z]
// K3 [x,y,[y,x,z]]=z       K4 [[y,x,z],z,x]=y
// commutative [x,y,z]=[z,y,x]
// associative [[x,y,z],r,t]=[x,y,[z,r,t]]
enum class MalcevLaw { A1, A2, A3, A4, K3, K4, commutative, associative };

inline constexpr std::size_t kMalcevLawCount = 8;
inline constexpr std::size_t kMalcevCarrierCap = 32;

std::string_view law_name(MalcevLaw law);
std::optional<MalcevLaw> parse_law(std::string_view name);
const std::array<MalcevLaw, kMalcevLawCount>& all_laws();

// Fast yes/no evaluation on a raw table of n³ entries indexed (x*n + y)*n + z.
bool law_holds(std::span<const Index> table, std::size_t n, MalcevLaw law);

class MalcevStructure {
 public:
  // table has n³ entries in lexicographic (x, y, z) order. Throws
  // PreconditionError on a size mismatch, an out-of-range entry or a carrier
  // above kMalcevCarrierCap.
  MalcevStructure(FiniteSet carrier, std::vector<Index> table);

  const FiniteSet& carrier() const { return carrier_; }
  std::size_t size() const { return n_; }
  Index operator()(Index x, Index y, Index z) const { return table_[(x * n_ + y) * n_ + z]; }
  const std::vector<Index>& table() const { return table_; }

  // Recomputed exhaustively from the table at construction.
  const LawCheck& law(MalcevLaw l) const { return laws_[static_cast<std::size_t>(l)]; }
  bool holds(MalcevLaw l) const { return law(l).holds; }
  bool is_malcev() const { return holds(MalcevLaw::A1) && holds(MalcevLaw::A2); }
  bool semiassociative() const { return holds(MalcevLaw::A3) || holds(MalcevLaw::A4); }

  bool operator==(const MalcevStructure& o) const {
    return carrier_ == o.carrier_ && table_ == o.table_;
  }

 private:
  FiniteSet carrier_;
  std::size_t n_;
  std::vector<Index> table_;
  std::array<LawCheck, kMalcevLawCount> laws_;
};

struct IdentityReport {
  std::array<LawCheck, kMalcevLawCount> laws;
  bool malcev = false;
  bool semiassociative = false;
  const LawCheck& law(MalcevLaw l) const { return laws[static_cast<std::size_t>(l)]; }
};

// Throws std::logic_error if a Malcev structure breaks
// associative ⇔ A3 ∧ A4, or if A2 ∧ A3 ⇒ K3 or A1 ∧ A4 ⇒ K4 fails.
IdentityReport check_identities(const MalcevStructure& k);

// [x,y,z] = x·y⁻¹·z
MalcevStructure from_group(const FiniteGroup& g);
// [x,y,z] = x + overline(y→z)
MalcevStructure from_preaffine(const PreaffineSpace& s);

struct MalcevTranslation {
  Index a;
  Index b;
  Endofunction map;  // x ↦ [x,a,b]
  bool operator==(const MalcevTranslation& o) const { return map == o.map; }
};

MalcevTranslation translation(const MalcevStructure& k, Index a, Index b);

// x ↦ [[x,a,b],c,d]. `representative` is the lexicographically least (a, b)
// with [-,a,b] equal to the sum, if the sum is a translation at all.
struct SumResult {
  Endofunction map;
  std::optional<std::pair<Index, Index>> representative;
};

// Without A2 ∧ A3 the operands are re-based at every a' (b' = [a',a,b]) and
// a changed composite throws VerificationError("representative_dependence",
// (a', b', c', d')).
SumResult sum(const MalcevStructure& k, const MalcevTranslation& t1, const MalcevTranslation& t2);

struct IterationReport {
  std::size_t translations = 0;  // |𝒯_X| as distinct maps
  std::size_t iterations = 0;    // |𝒯*_X|
  bool closed = false;           // 𝒯_X = 𝒯*_X
  bool monoid = false;           // contains ε_X
  bool group = false;            // every iteration is invertible within 𝒯*_X
  LawCheck fixed_point;          // witness (a, b, x): [-,a,b] fixes x but is not ε_X
  std::vector<Endofunction> elements;  // translations first, then new iterations
  std::optional<FiniteGroup> as_group; // table is seq(i, j)
};

// Closure of the translations under sum. Throws BudgetExceeded once the
// closure holds more than `budget` maps.
IterationReport iteration_closure(const MalcevStructure& k, std::size_t budget = 100000);

// [-,e,b] +_e [-,e,d] = [-,e,[b,e,d]]. An operand counts as pointed at e when
// it equals [-,e,p] as a map for p = t(e); PreconditionError otherwise.
// Throws std::logic_error if the identity law fails on a Malcev structure,
// the inverse law fails under K3 ∧ K4, or the result differs from sum()
// on an associative structure.
MalcevTranslation pointed_sum(const MalcevStructure& k, Index e, const MalcevTranslation& t1,
                              const MalcevTranslation& t2);

// [-,e,[e,b,e]]
MalcevTranslation pointed_inverse(const MalcevStructure& k, Index e, const MalcevTranslation& t);

// First (b, d, f) with ([-,e,b] +_e [-,e,d]) +_e [-,e,f] differing from
// [-,e,b] +_e ([-,e,d] +_e [-,e,f]).
std::optional<Witness> pointed_nonassociativity(const MalcevStructure& k, Index e);

struct RecoveredGroup {
  Index base;
  CayleyTable magma;                    // x ◊_e y = [x,e,y]
  std::optional<FiniteGroup> group;     // set when the magma validates
  std::optional<std::string> failed_rule;
  std::optional<Witness> failure;
  LawCheck identity_inverse;            // e is the identity, [e,x,e] inverts x
  LawCheck phi;                         // p ↦ [-,e,p] onto (𝒯_X, +_e)
  LawCheck psi;                         // x ↦ [x,e,e'] into (X, ◊_e'), every e'
};

// Always returns the magma. The group, φ and ψ checks are filled in only when
// the magma validates as a group.
RecoveredGroup recovered_group(const MalcevStructure& k, Index e);

// Visits every table on n points (labels "0".."n-1") satisfying all of
// `constraints`, in lexicographic order of the table. A1 and A2 fix entries
// before the search; other laws prune partial tables. The visitor returns
// false to stop. Returns the number visited. Throws PreconditionError for
// n > 4 and BudgetExceeded past `budget` search nodes.
std::size_t enumerate_malcev(std::size_t n, const std::vector<MalcevLaw>& constraints,
                             const std::function<bool(std::span<const Index>)>& visit,
                             std::size_t budget = 50'000'000);

}  // namespace genaff
