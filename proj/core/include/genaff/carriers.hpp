#pragma once

// Finite carriers and the full transformation monoid on them.
//
// Composition convention: compose(f, g) is f∘g, i.e. g is applied first.
// The right-handed sequencing used by the affine modules, "x + ū + v̄"
// (apply ū, then v̄), is seq(ū, v̄) == compose(v̄, ū).

#include <compare>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace genaff {

using Index = std::size_t;

inline constexpr std::size_t kDefaultCarrierCap = 64;

// An ordered list of distinct, opaque element labels. Elements are addressed
// by index internally; the order is fixed at construction. Copies share the
// same immutable storage.
class FiniteSet {
 public:
  FiniteSet(std::string name, std::vector<std::string> labels,
            std::size_t cap = kDefaultCarrierCap);

  // Labels "0", "1", ..., "n-1".
  static FiniteSet range(std::string name, std::size_t n,
                         std::size_t cap = kDefaultCarrierCap);

  const std::string& name() const;
  std::size_t size() const;
  const std::string& label(Index i) const;
  const std::vector<std::string>& labels() const;

  std::optional<Index> find(std::string_view label) const;
  // Throws PreconditionError on an unknown label.
  Index index_of(std::string_view label) const;

  FiniteSet renamed(std::string name) const;

  // Two carriers are the same when they list the same labels in the same
  // order; the name is display metadata only.
  bool operator==(const FiniteSet& other) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

// True if `label` is usable as a whitespace-separated file token.
bool is_valid_label(std::string_view label);

// A total self-map of a finite carrier, stored as an image table.
class Endofunction {
 public:
  Endofunction(FiniteSet carrier, std::vector<Index> images);

  const FiniteSet& carrier() const { return carrier_; }
  std::size_t size() const { return images_.size(); }
  Index operator()(Index x) const { return images_[x]; }
  std::span<const Index> images() const { return images_; }
  bool bijective() const { return bijective_; }

  // Equal carriers and equal image tables.
  bool operator==(const Endofunction& other) const;
  // Lexicographic on image tables; only meaningful on a shared carrier.
  std::strong_ordering operator<=>(const Endofunction& other) const;

  std::string str() const;  // "[a->b, b->a, ...]"

 private:
  FiniteSet carrier_;
  std::vector<Index> images_;
  bool bijective_;
};

struct EndofunctionHash {
  std::size_t operator()(const Endofunction& f) const noexcept;
};

// f∘g: x ↦ f(g(x)). Throws PreconditionError on a carrier mismatch.
Endofunction compose(const Endofunction& f, const Endofunction& g);

// Right-handed sequencing: `first`, then `then`.
inline Endofunction seq(const Endofunction& first, const Endofunction& then) {
  return compose(then, first);
}

Endofunction identity_map(const FiniteSet& carrier);

bool is_identity(const Endofunction& f);

// Membership in the symmetric group of the carrier.
bool is_bijection(const Endofunction& f);

// The inverse permutation. Throws PreconditionError if f is not bijective.
Endofunction inverse(const Endofunction& f);

// Reversibility of a single map, three ways:
//   (1) some φ with f(φ(x)) = φ(f(x)) = x for every x,
//   (2) f(x) = y has exactly one solution for every y,
//   (3) f is a permutation.
// reversal_witness returns the φ of (1) if one exists.
std::optional<Endofunction> reversal_witness(const Endofunction& f);
// First y whose equation f(x) = y is not uniquely solvable.
std::optional<Index> unsolvable_target(const Endofunction& f);

// Every endofunction of a carrier, in lexicographic order of image tables.
// Intended for exhaustive checks on tiny carriers (n^n maps).
std::vector<Endofunction> all_endofunctions(const FiniteSet& carrier);

}  // namespace genaff
