#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genaff/carriers.hpp"

namespace genaff {

using CayleyTable = std::vector<std::vector<Index>>;

// A group given by a validated Cayley table; table[g][h] = g□h (row times
// column). Instances are only produced by validate_group, so every
// FiniteGroup satisfies the group axioms.
class FiniteGroup {
 public:
  const FiniteSet& carrier() const { return carrier_; }
  const std::string& name() const { return carrier_.name(); }
  std::size_t order() const { return carrier_.size(); }

  Index op(Index g, Index h) const { return table_[g][h]; }
  Index identity() const { return identity_; }
  Index inverse(Index g) const { return inverses_[g]; }
  const CayleyTable& table() const { return table_; }
  const std::vector<Index>& inverses() const { return inverses_; }

  // Smallest k ≥ 1 with g^k = e.
  std::size_t element_order(Index g) const;

  FiniteGroup renamed(std::string name) const;

  // Same labels in the same order and the same table.
  bool operator==(const FiniteGroup& other) const;

 private:
  friend FiniteGroup validate_group(FiniteSet carrier, CayleyTable table);
  FiniteGroup(FiniteSet carrier, CayleyTable table, Index identity, std::vector<Index> inverses);

  FiniteSet carrier_;
  CayleyTable table_;
  Index identity_;
  std::vector<Index> inverses_;
};

// Checks, in order: table dimensions, Latin rows and columns, identity,
// inverses, associativity. Throws VerificationError naming the first failed
// axiom ("dimension", "latin_row", "latin_column", "identity", "inverse",
// "associativity") with a witness.
FiniteGroup validate_group(FiniteSet carrier, CayleyTable table);

bool is_abelian(const FiniteGroup& g);

// The additive group of a finite vector space: elementary abelian of prime
// exponent p and rank n. `basis` is the lexicographically least greedy basis
// and coords[v] the coordinates of v in it.
struct VectorGroup {
  FiniteGroup base;
  unsigned prime;
  std::size_t dimension;
  std::vector<Index> basis;
  std::vector<std::vector<unsigned>> coords;

  std::size_t order() const { return base.order(); }
  Index zero() const { return base.identity(); }
  Index add(Index u, Index v) const { return base.op(u, v); }
  Index neg(Index v) const { return base.inverse(v); }
  // Number of nonzero coordinates.
  std::size_t weight(Index v) const;
};

// Certifies that g is elementary abelian; throws VerificationError otherwise.
VectorGroup certify_vector_group(const FiniteGroup& g);

// (Z_p)^n with componentwise addition. Labels are "0".."p-1" when n = 1 and
// "(c1,...,cn)" tuples in lexicographic order otherwise.
VectorGroup elementary_abelian(unsigned p, std::size_t n, std::size_t cap = kDefaultCarrierCap);

FiniteGroup cyclic_group(std::size_t n, std::string name = {});

// Labels "(g,h)", ordered with the first factor most significant.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name = {});

// table'[g][h] = table[h][g].
FiniteGroup opposite_group(const FiniteGroup& g);

inline constexpr std::size_t kIsomorphismOrderCap = 12;

// The lexicographically least isomorphism G → H as an image table, if any.
// Refuses orders above kIsomorphismOrderCap with PreconditionError.
std::optional<std::vector<Index>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);
bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

// All automorphisms in lexicographic order of image tables. Throws
// BudgetExceeded if more than `limit` exist.
std::vector<std::vector<Index>> automorphisms(const FiniteGroup& g, std::size_t limit = 100000);

// Named groups: C8 and Q with the labels of the printed tables, Z1..Z12,
// Z2^2, Z2^3, Z2xZ4, S3, D4.
const std::map<std::string, FiniteGroup>& builtin_catalog();
// Throws PreconditionError for unknown names.
const FiniteGroup& catalog_group(const std::string& name);

}  // namespace genaff
