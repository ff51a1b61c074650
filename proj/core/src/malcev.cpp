#include "genaff/malcev.hpp"

#include <stdexcept>
#include <unordered_map>

namespace genaff {

namespace {

constexpr Index kNone = static_cast<Index>(-1);

constexpr std::array<MalcevLaw, kMalcevLawCount> kLaws = {
    MalcevLaw::A1, MalcevLaw::A2,          MalcevLaw::A3,         MalcevLaw::A4,
    MalcevLaw::K3, MalcevLaw::K4, MalcevLaw::commutative, MalcevLaw::associative};

std::size_t arity(MalcevLaw law) {
  switch (law) {
    case MalcevLaw::A1:
    case MalcevLaw::A2:
      return 2;
    case MalcevLaw::K3:
    case MalcevLaw::K4:
    case MalcevLaw::commutative:
      return 3;
    case MalcevLaw::A3:
    case MalcevLaw::A4:
      return 4;
    case MalcevLaw::associative:
      return 5;
  }
  return 0;
}

// 1 holds, 0 undetermined (some entry unknown), -1 fails.
template <class Get>
int eval_instance(MalcevLaw law, const Index* v, const Get& k) {
  auto k3 = [&](Index a, Index b, Index c) {
    if (a == kNone || b == kNone || c == kNone) return kNone;
    return k(a, b, c);
  };
  Index lhs = kNone, rhs = kNone;
  switch (law) {
    case MalcevLaw::A1:
      lhs = k3(v[0], v[1], v[1]);
      rhs = v[0];
      break;
    case MalcevLaw::A2:
      lhs = k3(v[0], v[0], v[1]);
      rhs = v[1];
      break;
    case MalcevLaw::A3:  // (p, x, y, z)
      lhs = k3(v[0], v[1], k3(v[1], v[2], v[3]));
      rhs = k3(v[0], v[2], v[3]);
      break;
    case MalcevLaw::A4:
      lhs = k3(k3(v[0], v[1], v[2]), v[2], v[3]);
      rhs = k3(v[0], v[1], v[3]);
      break;
    case MalcevLaw::K3:  // (x, y, z)
      lhs = k3(v[0], v[1], k3(v[1], v[0], v[2]));
      rhs = v[2];
      break;
    case MalcevLaw::K4:  // (x, y, z): [[y,x,z],z,x] = y
      lhs = k3(k3(v[1], v[0], v[2]), v[2], v[0]);
      rhs = v[1];
      break;
    case MalcevLaw::commutative:
      lhs = k3(v[0], v[1], v[2]);
      rhs = k3(v[2], v[1], v[0]);
      break;
    case MalcevLaw::associative:  // (x, y, z, r, t)
      lhs = k3(k3(v[0], v[1], v[2]), v[3], v[4]);
      rhs = k3(v[0], v[1], k3(v[2], v[3], v[4]));
      break;
  }
  if (lhs == kNone || rhs == kNone) return 0;
  return lhs == rhs ? 1 : -1;
}

// Calls f(vars) for every tuple in lexicographic order until f returns false.
template <class F>
void for_each_tuple(std::size_t n, std::size_t arity, const F& f) {
  std::array<Index, 5> v{};
  if (n == 0) return;
  while (true) {
    if (!f(v.data())) return;
    std::size_t i = arity;
    while (i > 0) {
      --i;
      if (++v[i] < n) break;
      v[i] = 0;
      if (i == 0) return;
    }
  }
}

void note(LawCheck& c, bool ok, const FiniteSet& x, const Index* v, std::size_t m) {
  ++c.checked;
  if (ok) return;
  ++c.violations;
  if (c.holds) {
    c.holds = false;
    Witness w;
    for (std::size_t i = 0; i < m; ++i) w.elements.push_back(x.label(v[i]));
    c.witness = std::move(w);
  }
}

void note(LawCheck& c, bool ok, const FiniteSet& x, std::initializer_list<Index> v) {
  std::vector<Index> tmp(v);
  note(c, ok, x, tmp.data(), tmp.size());
}

std::vector<Endofunction> pointed_maps(const MalcevStructure& k, Index e) {
  std::vector<Endofunction> out;
  for (Index p = 0; p < k.size(); ++p) out.push_back(translation(k, e, p).map);
  return out;
}

Index pointed_at(const MalcevStructure& k, Index e, const MalcevTranslation& t) {
  const Index p = t.map(e);
  if (!(translation(k, e, p).map == t.map)) {
    throw PreconditionError("translation [-," + k.carrier().label(t.a) + "," + k.carrier().label(t.b) +
                            "] is not pointed at " + k.carrier().label(e));
  }
  return p;
}

}  // namespace

std::string_view law_name(MalcevLaw law) {
  switch (law) {
    case MalcevLaw::A1:
      return "A1";
    case MalcevLaw::A2:
      return "A2";
    case MalcevLaw::A3:
      return "A3";
    case MalcevLaw::A4:
      return "A4";
    case MalcevLaw::K3:
      return "K3";
    case MalcevLaw::K4:
      return "K4";
    case MalcevLaw::commutative:
      return "commutative";
    case MalcevLaw::associative:
      return "associative";
  }
  return "unknown";
}

std::optional<MalcevLaw> parse_law(std::string_view name) {
  for (MalcevLaw l : kLaws) {
    if (law_name(l) == name) return l;
  }
  return std::nullopt;
}

const std::array<MalcevLaw, kMalcevLawCount>& all_laws() { return kLaws; }

bool law_holds(std::span<const Index> table, std::size_t n, MalcevLaw law) {
  auto get = [&](Index x, Index y, Index z) { return table[(x * n + y) * n + z]; };
  bool ok = true;
  for_each_tuple(n, arity(law), [&](const Index* v) {
    ok = eval_instance(law, v, get) == 1;
    return ok;
  });
  return ok;
}

MalcevStructure::MalcevStructure(FiniteSet carrier, std::vector<Index> table)
    : carrier_(std::move(carrier)), n_(carrier_.size()), table_(std::move(table)) {
  if (n_ > kMalcevCarrierCap) {
    throw PreconditionError("ternary operation carrier exceeds " + std::to_string(kMalcevCarrierCap));
  }
  if (table_.size() != n_ * n_ * n_) {
    throw PreconditionError("ternary table needs " + std::to_string(n_ * n_ * n_) + " entries, got " +
                            std::to_string(table_.size()));
  }
  for (Index w : table_) {
    if (w >= n_) throw PreconditionError("ternary table entry out of range");
  }
  auto get = [&](Index x, Index y, Index z) { return (*this)(x, y, z); };
  for (MalcevLaw l : kLaws) {
    LawCheck& c = laws_[static_cast<std::size_t>(l)];
    const std::size_t m = arity(l);
    for_each_tuple(n_, m, [&](const Index* v) {
      note(c, eval_instance(l, v, get) == 1, carrier_, v, m);
      return true;
    });
  }
}

IdentityReport check_identities(const MalcevStructure& k) {
  IdentityReport r;
  for (MalcevLaw l : kLaws) r.laws[static_cast<std::size_t>(l)] = k.law(l);
  r.malcev = k.is_malcev();
  r.semiassociative = k.semiassociative();
  auto h = [&](MalcevLaw l) { return k.holds(l); };
  if (r.malcev && h(MalcevLaw::associative) != (h(MalcevLaw::A3) && h(MalcevLaw::A4))) {
    throw std::logic_error("Malcev operation with associative != A3 and A4");
  }
  if (h(MalcevLaw::A2) && h(MalcevLaw::A3) && !h(MalcevLaw::K3)) {
    throw std::logic_error("A2 and A3 hold but K3 fails");
  }
  if (h(MalcevLaw::A1) && h(MalcevLaw::A4) && !h(MalcevLaw::K4)) {
    throw std::logic_error("A1 and A4 hold but K4 fails");
  }
  return r;
}

MalcevStructure from_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::vector<Index> table(n * n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      const Index xy = g.op(x, g.inverse(y));
      for (Index z = 0; z < n; ++z) table[(x * n + y) * n + z] = g.op(xy, z);
    }
  }
  return MalcevStructure(g.carrier(), std::move(table));
}

MalcevStructure from_preaffine(const PreaffineSpace& s) {
  const std::size_t n = s.size();
  std::vector<Index> table(n * n * n);
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      for (Index z = 0; z < n; ++z) table[(x * n + y) * n + z] = s.add(x, s.division(y, z));
    }
  }
  return MalcevStructure(s.points(), std::move(table));
}

MalcevTranslation translation(const MalcevStructure& k, Index a, Index b) {
  std::vector<Index> images(k.size());
  for (Index x = 0; x < k.size(); ++x) images[x] = k(x, a, b);
  return MalcevTranslation{a, b, Endofunction(k.carrier(), std::move(images))};
}

SumResult sum(const MalcevStructure& k, const MalcevTranslation& t1, const MalcevTranslation& t2) {
  Endofunction composite = seq(t1.map, t2.map);
  if (!(k.holds(MalcevLaw::A2) && k.holds(MalcevLaw::A3))) {
    for (Index a2 = 0; a2 < k.size(); ++a2) {
      const auto r1 = translation(k, a2, k(a2, t1.a, t1.b));
      for (Index c2 = 0; c2 < k.size(); ++c2) {
        const auto r2 = translation(k, c2, k(c2, t2.a, t2.b));
        if (!(seq(r1.map, r2.map) == composite)) {
          const auto& X = k.carrier();
          throw VerificationError("representative_dependence",
                                  {{X.label(r1.a), X.label(r1.b), X.label(r2.a), X.label(r2.b)}},
                                  "re-based operands give a different sum");
        }
      }
    }
  }
  SumResult r{std::move(composite), std::nullopt};
  for (Index a = 0; a < k.size() && !r.representative; ++a) {
    for (Index b = 0; b < k.size(); ++b) {
      if (translation(k, a, b).map == r.map) {
        r.representative = std::make_pair(a, b);
        break;
      }
    }
  }
  return r;
}

IterationReport iteration_closure(const MalcevStructure& k, std::size_t budget) {
  IterationReport r;
  const auto& X = k.carrier();
  std::unordered_map<Endofunction, Index, EndofunctionHash> seen;
  std::vector<std::string> labels;
  for (Index a = 0; a < k.size(); ++a) {
    for (Index b = 0; b < k.size(); ++b) {
      auto t = translation(k, a, b);
      const bool ident = is_identity(t.map);
      for (Index x = 0; x < k.size(); ++x) note(r.fixed_point, ident || t.map(x) != x, X, {a, b, x});
      if (seen.emplace(t.map, r.elements.size()).second) {
        r.elements.push_back(std::move(t.map));
        labels.push_back("[-," + X.label(a) + "," + X.label(b) + "]");
      }
    }
  }
  r.translations = r.elements.size();
  const std::size_t gens = r.translations;
  for (Index i = 0; i < r.elements.size(); ++i) {
    for (Index j = 0; j < gens; ++j) {
      Endofunction c = seq(r.elements[i], r.elements[j]);
      if (seen.count(c)) continue;
      if (r.elements.size() >= budget) {
        throw BudgetExceeded("iteration closure exceeds " + std::to_string(budget) + " maps");
      }
      seen.emplace(c, r.elements.size());
      labels.push_back("it" + std::to_string(r.elements.size()));
      r.elements.push_back(std::move(c));
    }
  }
  r.iterations = r.elements.size();
  r.closed = r.iterations == r.translations;
  r.monoid = seen.count(identity_map(X)) > 0;
  r.group = r.monoid;
  for (const auto& f : r.elements) r.group = r.group && f.bijective();
  constexpr std::size_t kGroupTableCap = 256;
  if (r.group && r.iterations <= kGroupTableCap) {
    const std::size_t m = r.iterations;
    CayleyTable table(m, std::vector<Index>(m));
    for (Index i = 0; i < m; ++i) {
      for (Index j = 0; j < m; ++j) table[i][j] = seen.at(seq(r.elements[i], r.elements[j]));
    }
    r.as_group = validate_group(FiniteSet("T*(" + X.name() + ")", labels, m), std::move(table));
  }
  return r;
}

MalcevTranslation pointed_sum(const MalcevStructure& k, Index e, const MalcevTranslation& t1,
                              const MalcevTranslation& t2) {
  const Index b = pointed_at(k, e, t1);
  const Index d = pointed_at(k, e, t2);
  MalcevTranslation out = translation(k, e, k(b, e, d));
  if (k.is_malcev()) {
    for (Index p : {b, d}) {
      const auto& self = translation(k, e, p).map;
      if (!(translation(k, e, k(p, e, e)).map == self) || !(translation(k, e, k(e, e, p)).map == self)) {
        throw std::logic_error("[-,e,e] is not the identity for the pointed sum");
      }
    }
  }
  if (k.holds(MalcevLaw::K3) && k.holds(MalcevLaw::K4)) {
    for (Index p : {b, d}) {
      const Index q = k(e, p, e);
      if (!is_identity(translation(k, e, k(p, e, q)).map) || !is_identity(translation(k, e, k(q, e, p)).map)) {
        throw std::logic_error("[-,e,[e,b,e]] does not invert [-,e,b]");
      }
    }
  }
  if (k.holds(MalcevLaw::associative) && k.is_malcev() && !(out.map == seq(t1.map, t2.map))) {
    throw std::logic_error("pointed sum differs from the sum on an associative operation");
  }
  return out;
}

MalcevTranslation pointed_inverse(const MalcevStructure& k, Index e, const MalcevTranslation& t) {
  const Index b = pointed_at(k, e, t);
  return translation(k, e, k(e, b, e));
}

std::optional<Witness> pointed_nonassociativity(const MalcevStructure& k, Index e) {
  const auto maps = pointed_maps(k, e);
  const std::size_t n = k.size();
  for (Index b = 0; b < n; ++b) {
    for (Index d = 0; d < n; ++d) {
      const Index bd = k(b, e, d);
      for (Index f = 0; f < n; ++f) {
        if (!(maps[k(bd, e, f)] == maps[k(b, e, k(d, e, f))])) {
          const auto& X = k.carrier();
          return Witness{{X.label(b), X.label(d), X.label(f)}};
        }
      }
    }
  }
  return std::nullopt;
}

RecoveredGroup recovered_group(const MalcevStructure& k, Index e) {
  const std::size_t n = k.size();
  const auto& X = k.carrier();
  RecoveredGroup r{e, CayleyTable(n, std::vector<Index>(n)), {}, {}, {}, {}, {}, {}};
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) r.magma[x][y] = k(x, e, y);
  }
  try {
    r.group = validate_group(X.renamed(X.name() + "@" + X.label(e)), r.magma);
  } catch (const VerificationError& err) {
    r.failed_rule = err.rule();
    r.failure = err.witness();
    return r;
  }
  const FiniteGroup& g = *r.group;
  note(r.identity_inverse, g.identity() == e, X, {e});
  for (Index x = 0; x < n; ++x) note(r.identity_inverse, g.inverse(x) == k(e, x, e), X, {e, x});

  // φ is a bijection onto 𝒯_X and carries ◊_e to the sum.
  const auto phi = pointed_maps(k, e);
  std::unordered_map<Endofunction, Index, EndofunctionHash> image;
  for (Index p = 0; p < n; ++p) note(r.phi, image.emplace(phi[p], p).second, X, {p});
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) note(r.phi, image.count(translation(k, a, b).map) > 0, X, {a, b});
  }
  for (Index p = 0; p < n; ++p) {
    for (Index q = 0; q < n; ++q) {
      const auto& lhs = phi[k(p, e, q)];
      note(r.phi, lhs == pointed_sum(k, e, {e, p, phi[p]}, {e, q, phi[q]}).map, X, {p, q});
      note(r.phi, lhs == seq(phi[p], phi[q]), X, {p, q});
    }
  }

  for (Index e2 = 0; e2 < n; ++e2) {
    std::vector<Index> psi(n);
    std::vector<bool> hit(n, false);
    for (Index x = 0; x < n; ++x) {
      psi[x] = k(x, e, e2);
      hit[psi[x]] = true;
    }
    for (Index x = 0; x < n; ++x) note(r.psi, hit[x], X, {e2, x});
    for (Index x = 0; x < n; ++x) {
      for (Index y = 0; y < n; ++y) {
        note(r.psi, psi[k(x, e, y)] == k(psi[x], e2, psi[y]), X, {e2, x, y});
      }
    }
  }
  return r;
}

std::size_t enumerate_malcev(std::size_t n, const std::vector<MalcevLaw>& constraints,
                             const std::function<bool(std::span<const Index>)>& visit,
                             std::size_t budget) {
  if (n == 0 || n > 4) throw PreconditionError("enumeration supports 1 to 4 points");
  bool a1 = false, a2 = false;
  std::vector<MalcevLaw> pruning;
  for (MalcevLaw l : constraints) {
    if (l == MalcevLaw::A1) {
      a1 = true;
    } else if (l == MalcevLaw::A2) {
      a2 = true;
    } else {
      pruning.push_back(l);
    }
  }
  std::vector<Index> table(n * n * n, kNone);
  auto at = [&](Index x, Index y, Index z) -> Index& { return table[(x * n + y) * n + z]; };
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      if (a1) at(x, y, y) = x;
      if (a2) {
        Index& cell = at(x, x, y);
        // [x,x,x] is x under both.
        cell = y;
      }
    }
  }
  std::vector<Index> free;
  for (Index i = 0; i < table.size(); ++i) {
    if (table[i] == kNone) free.push_back(i);
  }
  auto get = [&](Index x, Index y, Index z) { return table[(x * n + y) * n + z]; };
  auto consistent = [&]() {
    for (MalcevLaw l : pruning) {
      bool ok = true;
      for_each_tuple(n, arity(l), [&](const Index* v) {
        ok = eval_instance(l, v, get) != -1;
        return ok;
      });
      if (!ok) return false;
    }
    return true;
  };

  std::size_t nodes = 0, visited = 0;
  bool stop = false;
  std::function<void(std::size_t)> search = [&](std::size_t depth) {
    if (depth == free.size()) {
      ++visited;
      if (!visit(std::span<const Index>(table))) stop = true;
      return;
    }
    Index& cell = table[free[depth]];
    for (Index w = 0; w < n && !stop; ++w) {
      if (++nodes > budget) {
        throw BudgetExceeded("ternary table enumeration exceeds " + std::to_string(budget) + " nodes");
      }
      cell = w;
      if (pruning.empty() || consistent()) search(depth + 1);
    }
    cell = kNone;
  };
  if (pruning.empty() || consistent()) search(0);
  return visited;
}

}  // namespace genaff
