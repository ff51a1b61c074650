#pragma once

// Deterministic generators for the structure families used by the miner and
// the test suites.

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "genaff/actions.hpp"
#include "genaff/affine.hpp"
#include "genaff/fields.hpp"
#include "genaff/formats.hpp"
#include "genaff/groups.hpp"

namespace genaff {

// Elementary abelian groups of order ≤ max_order, by order then rank.
std::vector<VectorGroup> elementary_abelian_groups(std::size_t max_order);

// `count` affine spaces cycling through elementary_abelian_groups(max_order):
// the right regular action, conjugated by a seeded random relabelling of the
// carrier after the first round.
std::vector<PreaffineSpace> affine_space_family(std::size_t count, std::size_t max_order,
                                                std::uint64_t seed);

// Every bijection β from `from` to `to` with β(e) = e, as an image array over
// the element indices, in lexicographic order. visit returns false to stop.
void for_each_identity_preserving_bijection(const FiniteGroup& from, const FiniteGroup& to,
                                            const std::function<bool(std::span<const Index>)>& visit);

// v̄(x) = x·β(v) on the carrier of t. Regular and premonoidal for any
// identity-preserving bijection β; monoidal iff β is a homomorphism.
Action bijection_action(const VectorGroup& v, const FiniteGroup& t, std::span<const Index> beta);

// X = V as a set, Φ(p)(v)(x) = x + A_p(v) with A_p = automorphisms(V)[assignment[p]].
FieldData automorphism_field(const VectorGroup& v, std::span<const Index> assignment);

// X = t's carrier, Φ(p) = bijection_action(v, t, betas[p]).
FieldData bijection_field(const VectorGroup& v, const FiniteGroup& t,
                          const std::vector<std::vector<Index>>& betas);

// Certifies the domain as a vector group and verifies the field, choosing
// monoidal when every point is closed as a contravariant group action.
ActionField certify_field(const FieldData& f);

}  // namespace genaff
