#include "genaff/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace genaff {

namespace {

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<VectorGroup> elementary_abelian_groups(std::size_t max_order) {
  std::vector<VectorGroup> out;
  for (std::size_t order = 2; order <= max_order; ++order) {
    for (unsigned p = 2; p <= order; ++p) {
      if (!is_prime(p)) continue;
      std::size_t q = 1, n = 0;
      while (q < order) {
        q *= p;
        ++n;
      }
      if (q == order) out.push_back(elementary_abelian(p, n));
    }
  }
  return out;
}

std::vector<PreaffineSpace> affine_space_family(std::size_t count, std::size_t max_order,
                                                std::uint64_t seed) {
  const auto groups = elementary_abelian_groups(max_order);
  std::mt19937_64 rng(seed);
  std::vector<PreaffineSpace> out;
  for (std::size_t i = 0; i < count; ++i) {
    const VectorGroup& v = groups[i % groups.size()];
    const Action base = right_regular_action(v.base);
    const std::size_t n = v.order();
    std::vector<Index> perm(n);
    std::iota(perm.begin(), perm.end(), Index{0});
    if (i >= groups.size()) std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Index> inv(n);
    for (Index x = 0; x < n; ++x) inv[perm[x]] = x;
    // π ∘ v̄ ∘ π⁻¹
    std::vector<Endofunction> maps;
    for (Index g = 0; g < n; ++g) {
      std::vector<Index> img(n);
      for (Index x = 0; x < n; ++x) img[x] = perm[base.apply(g, inv[x])];
      maps.emplace_back(base.carrier(), std::move(img));
    }
    out.push_back(verify_preaffine(v, Action(v.base, base.carrier(), std::move(maps))));
  }
  return out;
}

void for_each_identity_preserving_bijection(const FiniteGroup& from, const FiniteGroup& to,
                                            const std::function<bool(std::span<const Index>)>& visit) {
  if (from.order() != to.order()) throw PreconditionError("groups of different orders");
  // Non-identity sources in index order receive the non-identity targets in
  // every permutation, lexicographically.
  std::vector<Index> src, dst;
  for (Index g = 0; g < from.order(); ++g) {
    if (g != from.identity()) src.push_back(g);
  }
  for (Index g = 0; g < to.order(); ++g) {
    if (g != to.identity()) dst.push_back(g);
  }
  std::vector<Index> beta(from.order());
  beta[from.identity()] = to.identity();
  do {
    for (std::size_t i = 0; i < src.size(); ++i) beta[src[i]] = dst[i];
    if (!visit(beta)) return;
  } while (std::next_permutation(dst.begin(), dst.end()));
}

Action bijection_action(const VectorGroup& v, const FiniteGroup& t, std::span<const Index> beta) {
  std::vector<Endofunction> maps;
  for (Index g = 0; g < v.order(); ++g) {
    std::vector<Index> img(t.order());
    for (Index x = 0; x < t.order(); ++x) img[x] = t.op(x, beta[g]);
    maps.emplace_back(t.carrier(), std::move(img));
  }
  return Action(v.base, t.carrier(), std::move(maps));
}

FieldData automorphism_field(const VectorGroup& v, std::span<const Index> assignment) {
  const auto autos = automorphisms(v.base);
  const FiniteSet& x = v.base.carrier();
  if (assignment.size() != x.size()) throw PreconditionError("one automorphism per point required");
  std::vector<Action> per_point;
  for (Index p = 0; p < x.size(); ++p) {
    if (assignment[p] >= autos.size()) throw PreconditionError("automorphism index out of range");
    const auto& a = autos[assignment[p]];
    std::vector<Endofunction> maps;
    for (Index g = 0; g < v.order(); ++g) {
      std::vector<Index> img(x.size());
      for (Index y = 0; y < x.size(); ++y) img[y] = v.add(y, a[g]);
      maps.emplace_back(x, std::move(img));
    }
    per_point.emplace_back(v.base, x, std::move(maps));
  }
  return FieldData{v.base, x, std::move(per_point)};
}

FieldData bijection_field(const VectorGroup& v, const FiniteGroup& t,
                          const std::vector<std::vector<Index>>& betas) {
  if (betas.size() != t.order()) throw PreconditionError("one bijection per point required");
  std::vector<Action> per_point;
  for (const auto& b : betas) per_point.push_back(bijection_action(v, t, b));
  return FieldData{v.base, t.carrier(), std::move(per_point)};
}

ActionField certify_field(const FieldData& f) {
  const VectorGroup v = certify_vector_group(f.domain.group());
  bool monoidal = true;
  for (const auto& a : f.per_point) {
    monoidal = monoidal && classify(a, Variance::contravariant).holds(Flag::closed_group_contravariant);
  }
  return verify_field(v, f.carrier, f.per_point, monoidal ? FieldKind::monoidal : FieldKind::premonoidal);
}

}  // namespace genaff
