#include "genaff/groups.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "genaff/error.hpp"

namespace genaff {

namespace {

constexpr Index kNone = static_cast<Index>(-1);

Witness labels_of(const FiniteSet& s, std::initializer_list<Index> idx) {
  Witness w;
  for (Index i : idx) w.elements.push_back(s.label(i));
  return w;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string tuple_label(const std::vector<unsigned>& digits) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (i > 0) out << ',';
    out << digits[i];
  }
  out << ')';
  return out.str();
}

// Backtracking search for isomorphisms G → H in lexicographic order of image
// tables. Each choice is closed under products of already-mapped elements, so
// only generator-like positions branch.
class IsoSearch {
 public:
  IsoSearch(const FiniteGroup& g, const FiniteGroup& h)
      : g_(g), h_(h), n_(g.order()), phi_(n_, kNone), used_(n_, false) {
    for (Index x = 0; x < n_; ++x) {
      ord_g_.push_back(g.element_order(x));
      ord_h_.push_back(h.element_order(x));
    }
  }

  // Calls visit for each isomorphism; visit returns false to stop.
  void run(const std::function<bool(const std::vector<Index>&)>& visit) {
    if (g_.order() != h_.order()) return;
    auto a = ord_g_, b = ord_h_;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return;
    std::vector<Index> trail;
    if (!assign(g_.identity(), h_.identity(), trail)) return;
    visit_ = &visit;
    stopped_ = false;
    dfs(0);
  }

 private:
  bool assign(Index x, Index y, std::vector<Index>& trail) {
    std::vector<Index> queue;
    auto set = [&](Index a, Index b) {
      if (phi_[a] != kNone) return phi_[a] == b;
      if (used_[b] || ord_g_[a] != ord_h_[b]) return false;
      phi_[a] = b;
      used_[b] = true;
      trail.push_back(a);
      queue.push_back(a);
      return true;
    };
    if (!set(x, y)) return false;
    std::vector<Index> mapped;
    for (Index a = 0; a < n_; ++a) {
      if (phi_[a] != kNone && std::find(queue.begin(), queue.end(), a) == queue.end()) {
        mapped.push_back(a);
      }
    }
    while (!queue.empty()) {
      Index a = queue.back();
      queue.pop_back();
      mapped.push_back(a);
      for (std::size_t k = 0; k < mapped.size(); ++k) {
        Index b = mapped[k];
        if (!set(g_.op(a, b), h_.op(phi_[a], phi_[b]))) return false;
        if (!set(g_.op(b, a), h_.op(phi_[b], phi_[a]))) return false;
      }
    }
    return true;
  }

  void undo(std::vector<Index>& trail) {
    for (Index a : trail) {
      used_[phi_[a]] = false;
      phi_[a] = kNone;
    }
    trail.clear();
  }

  void dfs(Index from) {
    while (from < n_ && phi_[from] != kNone) ++from;
    if (from == n_) {
      if (!(*visit_)(phi_)) stopped_ = true;
      return;
    }
    for (Index c = 0; c < n_ && !stopped_; ++c) {
      if (used_[c] || ord_g_[from] != ord_h_[c]) continue;
      std::vector<Index> trail;
      if (assign(from, c, trail)) dfs(from + 1);
      undo(trail);
    }
  }

  const FiniteGroup& g_;
  const FiniteGroup& h_;
  std::size_t n_;
  std::vector<Index> phi_;
  std::vector<bool> used_;
  std::vector<std::size_t> ord_g_, ord_h_;
  const std::function<bool(const std::vector<Index>&)>* visit_ = nullptr;
  bool stopped_ = false;
};

FiniteGroup group_from_labels(const std::string& name, const std::vector<std::string>& labels,
                              const std::vector<std::vector<std::string>>& rows) {
  FiniteSet carrier(name, labels);
  CayleyTable table(labels.size());
  for (Index g = 0; g < labels.size(); ++g) {
    for (const auto& entry : rows[g]) table[g].push_back(carrier.index_of(entry));
  }
  return validate_group(carrier, std::move(table));
}

// Closes a set of permutations of {0..m-1} under composition and builds the
// group with table[g][h] = g∘h.
FiniteGroup permutation_group(const std::string& name,
                              const std::vector<std::vector<Index>>& elements,
                              const std::vector<std::string>& labels) {
  const std::size_t n = elements.size();
  FiniteSet carrier(name, labels);
  CayleyTable table(n, std::vector<Index>(n));
  for (Index g = 0; g < n; ++g) {
    for (Index h = 0; h < n; ++h) {
      std::vector<Index> gh(elements[g].size());
      for (Index i = 0; i < gh.size(); ++i) gh[i] = elements[g][elements[h][i]];
      auto it = std::find(elements.begin(), elements.end(), gh);
      table[g][h] = static_cast<Index>(it - elements.begin());
    }
  }
  return validate_group(carrier, std::move(table));
}

FiniteGroup symmetric3() {
  std::vector<std::vector<Index>> perms;
  std::vector<std::string> labels;
  std::vector<Index> p = {0, 1, 2};
  do {
    perms.push_back(p);
    std::string label;
    for (Index i : p) label += static_cast<char>('1' + i);
    labels.push_back(label);
  } while (std::next_permutation(p.begin(), p.end()));
  return permutation_group("S3", perms, labels);
}

FiniteGroup dihedral4() {
  // Symmetries of a square on vertices 0..3: r^k and r^k∘s with
  // r(i) = i+1 and s(i) = -i (mod 4).
  std::vector<std::vector<Index>> perms;
  std::vector<std::string> labels;
  for (int reflect = 0; reflect < 2; ++reflect) {
    for (Index k = 0; k < 4; ++k) {
      std::vector<Index> perm(4);
      for (Index i = 0; i < 4; ++i) {
        Index base = reflect ? (4 - i) % 4 : i;
        perm[i] = (base + k) % 4;
      }
      perms.push_back(perm);
      labels.push_back((reflect ? "s" : "r") + std::to_string(k));
    }
  }
  return permutation_group("D4", perms, labels);
}

FiniteGroup c8() {
  std::vector<std::string> labels = {"e", "a", "a2", "a3", "a4", "a5", "a6", "a7"};
  std::vector<std::vector<std::string>> rows(8);
  for (std::size_t g = 0; g < 8; ++g) {
    for (std::size_t h = 0; h < 8; ++h) rows[g].push_back(labels[(g + h) % 8]);
  }
  return group_from_labels("C8", labels, rows);
}

FiniteGroup quaternion() {
  std::vector<std::string> labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
  std::vector<std::vector<std::string>> rows = {
      {"1", "i", "j", "k", "-1", "-i", "-j", "-k"},
      {"i", "-1", "k", "-j", "-i", "1", "-k", "j"},
      {"j", "-k", "-1", "i", "-j", "k", "1", "-i"},
      {"k", "j", "-i", "-1", "-k", "-j", "i", "1"},
      {"-1", "-i", "-j", "-k", "1", "i", "j", "k"},
      {"-i", "1", "-k", "j", "i", "-1", "k", "-j"},
      {"-j", "k", "1", "-i", "j", "-k", "-1", "i"},
      {"-k", "-j", "i", "1", "k", "j", "-i", "-1"},
  };
  return group_from_labels("Q", labels, rows);
}

}  // namespace

FiniteGroup::FiniteGroup(FiniteSet carrier, CayleyTable table, Index identity,
                         std::vector<Index> inverses)
    : carrier_(std::move(carrier)),
      table_(std::move(table)),
      identity_(identity),
      inverses_(std::move(inverses)) {}

std::size_t FiniteGroup::element_order(Index g) const {
  std::size_t k = 1;
  for (Index x = g; x != identity_; x = op(x, g)) ++k;
  return k;
}

FiniteGroup FiniteGroup::renamed(std::string name) const {
  FiniteGroup copy = *this;
  copy.carrier_ = carrier_.renamed(std::move(name));
  return copy;
}

bool FiniteGroup::operator==(const FiniteGroup& other) const {
  return carrier_ == other.carrier_ && table_ == other.table_;
}

FiniteGroup validate_group(FiniteSet carrier, CayleyTable table) {
  const std::size_t n = carrier.size();
  if (table.size() != n) {
    throw VerificationError("dimension", {},
                            "table has " + std::to_string(table.size()) + " rows, expected " +
                                std::to_string(n));
  }
  for (Index g = 0; g < n; ++g) {
    if (table[g].size() != n) {
      throw VerificationError("dimension", labels_of(carrier, {g}),
                              "row has " + std::to_string(table[g].size()) + " entries");
    }
    for (Index h = 0; h < n; ++h) {
      if (table[g][h] >= n) {
        throw VerificationError("dimension", labels_of(carrier, {g, h}), "entry out of range");
      }
    }
  }
  for (Index g = 0; g < n; ++g) {
    std::vector<Index> seen(n, kNone);
    for (Index h = 0; h < n; ++h) {
      Index v = table[g][h];
      if (seen[v] != kNone) {
        throw VerificationError("latin_row", labels_of(carrier, {g, seen[v], h}),
                                "two columns give the same product");
      }
      seen[v] = h;
    }
  }
  for (Index h = 0; h < n; ++h) {
    std::vector<Index> seen(n, kNone);
    for (Index g = 0; g < n; ++g) {
      Index v = table[g][h];
      if (seen[v] != kNone) {
        throw VerificationError("latin_column", labels_of(carrier, {seen[v], g, h}),
                                "two rows give the same product");
      }
      seen[v] = g;
    }
  }
  Index identity = kNone;
  for (Index e = 0; e < n && identity == kNone; ++e) {
    bool ok = true;
    for (Index g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (identity == kNone) {
    // A left identity exists in any Latin square row; report where it fails.
    Index e = 0;
    while (e < n && table[e][0] != 0) ++e;
    if (e == n) e = 0;
    Index g = 0;
    while (g < n && table[e][g] == g && table[g][e] == g) ++g;
    throw VerificationError("identity", labels_of(carrier, {e, g}), "no two-sided identity");
  }
  std::vector<Index> inverses(n, kNone);
  for (Index g = 0; g < n; ++g) {
    Index right = kNone, left = kNone;
    for (Index h = 0; h < n; ++h) {
      if (table[g][h] == identity) right = h;
      if (table[h][g] == identity) left = h;
    }
    if (right != left) {
      throw VerificationError("inverse", labels_of(carrier, {g, left, right}),
                              "left and right inverses differ");
    }
    inverses[g] = right;
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          throw VerificationError("associativity", labels_of(carrier, {a, b, c}),
                                  "(ab)c differs from a(bc)");
        }
      }
    }
  }
  return FiniteGroup(std::move(carrier), std::move(table), identity, std::move(inverses));
}

bool is_abelian(const FiniteGroup& g) {
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = a + 1; b < g.order(); ++b) {
      if (g.op(a, b) != g.op(b, a)) return false;
    }
  }
  return true;
}

std::size_t VectorGroup::weight(Index v) const {
  return static_cast<std::size_t>(
      std::count_if(coords[v].begin(), coords[v].end(), [](unsigned c) { return c != 0; }));
}

VectorGroup certify_vector_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (g.op(a, b) != g.op(b, a)) {
        throw VerificationError("abelian", labels_of(g.carrier(), {a, b}), "elements do not commute");
      }
    }
  }
  unsigned p = 1;
  for (Index a = 0; a < n; ++a) {
    if (a == g.identity()) continue;
    auto k = static_cast<unsigned>(g.element_order(a));
    if (p == 1) p = k;
    if (k != p || !is_prime(k)) {
      throw VerificationError("elementary_abelian", labels_of(g.carrier(), {a}),
                              "element of order " + std::to_string(k));
    }
  }
  if (p == 1) p = 2;  // trivial group: rank 0 over any field

  VectorGroup v{g, p, 0, {}, {}};
  // Greedy basis: scan elements in index order, keep those outside the span.
  std::vector<bool> in_span(n, false);
  in_span[g.identity()] = true;
  std::vector<Index> span = {g.identity()};
  for (Index a = 0; a < n; ++a) {
    if (in_span[a]) continue;
    v.basis.push_back(a);
    std::vector<Index> grown;
    for (Index s : span) {
      Index x = s;
      for (unsigned c = 0; c < p; ++c) {
        grown.push_back(x);
        in_span[x] = true;
        x = g.op(x, a);
      }
    }
    span = std::move(grown);
  }
  v.dimension = v.basis.size();
  v.coords.assign(n, std::vector<unsigned>(v.dimension, 0));
  std::vector<unsigned> digits(v.dimension, 0);
  for (std::size_t count = 0; count < n; ++count) {
    Index x = g.identity();
    for (std::size_t i = 0; i < v.dimension; ++i) {
      for (unsigned c = 0; c < digits[i]; ++c) x = g.op(x, v.basis[i]);
    }
    v.coords[x] = digits;
    for (std::size_t pos = v.dimension; pos-- > 0;) {
      if (++digits[pos] < p) break;
      digits[pos] = 0;
    }
  }
  return v;
}

VectorGroup elementary_abelian(unsigned p, std::size_t n, std::size_t cap) {
  if (!is_prime(p)) throw PreconditionError(std::to_string(p) + " is not prime");
  std::size_t order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= p;
    if (order > cap) {
      throw PreconditionError("elementary abelian group exceeds the carrier cap of " +
                              std::to_string(cap));
    }
  }
  std::vector<std::vector<unsigned>> elems;
  std::vector<unsigned> digits(n, 0);
  for (std::size_t k = 0; k < order; ++k) {
    elems.push_back(digits);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++digits[pos] < p) break;
      digits[pos] = 0;
    }
  }
  auto index_of = [&](const std::vector<unsigned>& d) {
    Index i = 0;
    for (unsigned c : d) i = i * p + c;
    return i;
  };
  std::vector<std::string> labels;
  for (const auto& d : elems) labels.push_back(n == 1 ? std::to_string(d[0]) : tuple_label(d));
  std::string name = n == 1 ? "Z" + std::to_string(p) : "Z" + std::to_string(p) + "^" + std::to_string(n);
  CayleyTable table(order, std::vector<Index>(order));
  for (Index a = 0; a < order; ++a) {
    for (Index b = 0; b < order; ++b) {
      std::vector<unsigned> s(n);
      for (std::size_t i = 0; i < n; ++i) s[i] = (elems[a][i] + elems[b][i]) % p;
      table[a][b] = index_of(s);
    }
  }
  return certify_vector_group(validate_group(FiniteSet(name, labels, cap), std::move(table)));
}

FiniteGroup cyclic_group(std::size_t n, std::string name) {
  if (name.empty()) name = "Z" + std::to_string(n);
  CayleyTable table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) table[a][b] = (a + b) % n;
  }
  return validate_group(FiniteSet::range(name, n), std::move(table));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h, std::string name) {
  if (name.empty()) name = g.name() + "x" + h.name();
  const std::size_t m = h.order();
  std::vector<std::string> labels;
  for (Index a = 0; a < g.order(); ++a) {
    for (Index b = 0; b < m; ++b) labels.push_back("(" + g.carrier().label(a) + "," + h.carrier().label(b) + ")");
  }
  const std::size_t n = labels.size();
  CayleyTable table(n, std::vector<Index>(n));
  for (Index x = 0; x < n; ++x) {
    for (Index y = 0; y < n; ++y) {
      table[x][y] = g.op(x / m, y / m) * m + h.op(x % m, y % m);
    }
  }
  return validate_group(FiniteSet(name, labels), std::move(table));
}

FiniteGroup opposite_group(const FiniteGroup& g) {
  const std::size_t n = g.order();
  CayleyTable table(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) table[a][b] = g.op(b, a);
  }
  return validate_group(g.carrier().renamed(g.name() + "^op"), std::move(table));
}

std::optional<std::vector<Index>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  if (g.order() > kIsomorphismOrderCap) {
    throw PreconditionError("isomorphism search is limited to order " +
                            std::to_string(kIsomorphismOrderCap));
  }
  std::optional<std::vector<Index>> found;
  IsoSearch(g, h).run([&](const std::vector<Index>& phi) {
    found = phi;
    return false;
  });
  return found;
}

bool is_isomorphic(const FiniteGroup& g, const FiniteGroup& h) {
  return find_isomorphism(g, h).has_value();
}

std::vector<std::vector<Index>> automorphisms(const FiniteGroup& g, std::size_t limit) {
  std::vector<std::vector<Index>> out;
  bool over = false;
  IsoSearch(g, g).run([&](const std::vector<Index>& phi) {
    if (out.size() == limit) {
      over = true;
      return false;
    }
    out.push_back(phi);
    return true;
  });
  if (over) {
    throw BudgetExceeded("more than " + std::to_string(limit) + " automorphisms of " + g.name());
  }
  return out;
}

const std::map<std::string, FiniteGroup>& builtin_catalog() {
  static const std::map<std::string, FiniteGroup> catalog = [] {
    std::map<std::string, FiniteGroup> c;
    c.emplace("C8", c8());
    c.emplace("Q", quaternion());
    for (std::size_t n = 1; n <= 12; ++n) {
      auto g = cyclic_group(n);
      c.emplace(g.name(), g);
    }
    c.emplace("Z2^2", elementary_abelian(2, 2).base);
    c.emplace("Z2^3", elementary_abelian(2, 3).base);
    c.emplace("Z2xZ4", direct_product(cyclic_group(2), cyclic_group(4)));
    c.emplace("S3", symmetric3());
    c.emplace("D4", dihedral4());
    return c;
  }();
  return catalog;
}

const FiniteGroup& catalog_group(const std::string& name) {
  const auto& c = builtin_catalog();
  auto it = c.find(name);
  if (it == c.end()) throw PreconditionError("unknown catalog group '" + name + "'");
  return it->second;
}

}  // namespace genaff
