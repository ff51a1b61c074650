#include "genaff/actions.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>

namespace genaff {

namespace {

constexpr Index kNone = static_cast<Index>(-1);

constexpr std::array<std::string_view, 14> kFlagNames = {
    "unital_set",       "invertible_set",         "closed_set",
    "reversible",       "transitive",             "free",
    "regular",          "unital_group",           "invertible_group",
    "closed_group_covariant", "closed_group_contravariant", "monoidal",
    "premonoidal",      "injective_as_function",
};

FlagResult pass() { return FlagResult{true, std::nullopt}; }

FlagResult fail(Witness w) { return FlagResult{false, std::move(w)}; }

class Labeller {
 public:
  Labeller(const Action& a) : g_(a.domain().elements()), x_(a.carrier()) {}
  const std::string& g(Index i) const { return g_.label(i); }
  const std::string& x(Index i) const { return x_.label(i); }

 private:
  const FiniteSet& g_;
  const FiniteSet& x_;
};

bool equal_maps(const Endofunction& f, const Endofunction& g) {
  return std::equal(f.images().begin(), f.images().end(), g.images().begin());
}

}  // namespace

const FiniteSet& ActionDomain::elements() const {
  if (const auto* g = std::get_if<FiniteGroup>(&value_)) return g->carrier();
  return std::get<FiniteSet>(value_);
}

const FiniteGroup& ActionDomain::group() const {
  if (const auto* g = std::get_if<FiniteGroup>(&value_)) return *g;
  throw PreconditionError("domain '" + elements().name() + "' is a bare set, not a group");
}

bool ActionDomain::operator==(const ActionDomain& other) const {
  if (is_group() != other.is_group()) return false;
  if (is_group()) return group() == other.group();
  return elements() == other.elements();
}

Action::Action(ActionDomain domain, FiniteSet carrier, std::vector<Endofunction> maps)
    : domain_(std::move(domain)), carrier_(std::move(carrier)), maps_(std::move(maps)) {
  if (maps_.size() != domain_.size()) {
    throw PreconditionError("action needs one map per domain element: expected " +
                            std::to_string(domain_.size()) + ", got " +
                            std::to_string(maps_.size()));
  }
  std::unordered_map<Endofunction, Index, EndofunctionHash> seen;
  image_index_.reserve(maps_.size());
  for (const auto& f : maps_) {
    if (!(f.carrier() == carrier_)) {
      throw PreconditionError("map on '" + f.carrier().name() + "' does not act on carrier '" +
                              carrier_.name() + "'");
    }
    auto [it, fresh] = seen.emplace(f, image_.size());
    if (fresh) image_.push_back(f);
    image_index_.push_back(it->second);
  }
}

std::optional<Index> Action::find_in_image(const Endofunction& f) const {
  for (Index i = 0; i < image_.size(); ++i) {
    if (equal_maps(image_[i], f)) return i;
  }
  return std::nullopt;
}

bool Action::operator==(const Action& other) const {
  return domain_ == other.domain_ && carrier_ == other.carrier_ && maps_ == other.maps_;
}

Action left_regular_action(const FiniteGroup& g) {
  std::vector<Endofunction> maps;
  for (Index a = 0; a < g.order(); ++a) {
    std::vector<Index> images(g.order());
    for (Index x = 0; x < g.order(); ++x) images[x] = g.op(a, x);
    maps.emplace_back(g.carrier(), std::move(images));
  }
  return Action(g, g.carrier(), std::move(maps));
}

Action right_regular_action(const FiniteGroup& g) {
  std::vector<Endofunction> maps;
  for (Index a = 0; a < g.order(); ++a) {
    std::vector<Index> images(g.order());
    for (Index x = 0; x < g.order(); ++x) images[x] = g.op(x, a);
    maps.emplace_back(g.carrier(), std::move(images));
  }
  return Action(g, g.carrier(), std::move(maps));
}

Action trivial_action(const ActionDomain& domain, const FiniteSet& carrier) {
  return Action(domain, carrier, std::vector<Endofunction>(domain.size(), identity_map(carrier)));
}

void for_each_action(const ActionDomain& domain, const FiniteSet& carrier,
                     const std::function<bool(const Action&)>& visit) {
  auto maps = all_endofunctions(carrier);
  const std::size_t k = domain.size();
  std::vector<std::size_t> choice(k, 0);
  while (true) {
    std::vector<Endofunction> chosen;
    chosen.reserve(k);
    for (std::size_t c : choice) chosen.push_back(maps[c]);
    if (!visit(Action(domain, carrier, std::move(chosen)))) return;
    std::size_t pos = k;
    while (pos-- > 0) {
      if (++choice[pos] < maps.size()) break;
      choice[pos] = 0;
    }
    if (pos == static_cast<std::size_t>(-1)) return;
  }
}

std::string_view flag_name(Flag f) { return kFlagNames[static_cast<std::size_t>(f)]; }

std::optional<Flag> parse_flag(std::string_view name) {
  for (std::size_t i = 0; i < kFlagNames.size(); ++i) {
    if (kFlagNames[i] == name) return static_cast<Flag>(i);
  }
  return std::nullopt;
}

const std::vector<Flag>& all_flags() {
  static const std::vector<Flag> flags = [] {
    std::vector<Flag> v;
    for (std::size_t i = 0; i < kFlagNames.size(); ++i) v.push_back(static_cast<Flag>(i));
    return v;
  }();
  return flags;
}

bool is_group_flag(Flag f) {
  switch (f) {
    case Flag::unital_group:
    case Flag::invertible_group:
    case Flag::closed_group_covariant:
    case Flag::closed_group_contravariant:
    case Flag::monoidal:
    case Flag::premonoidal:
      return true;
    default:
      return false;
  }
}

const FlagResult& ClassificationReport::flag(Flag f) const {
  const auto& r = results[static_cast<std::size_t>(f)];
  if (!r) {
    throw PreconditionError("flag '" + std::string(flag_name(f)) +
                            "' needs a group domain");
  }
  return *r;
}

ClassificationReport classify(const Action& a, Variance variance) {
  const std::size_t ng = a.domain().size();
  const std::size_t nx = a.carrier().size();
  const Labeller lab(a);
  ClassificationReport rep;
  rep.variance = variance;
  rep.group_domain = a.domain().is_group();
  rep.results.assign(kFlagNames.size(), std::nullopt);
  auto set = [&](Flag f, FlagResult r) { rep.results[static_cast<std::size_t>(f)] = std::move(r); };

  // unital (sets): some ḡ is the identity map. The certificate of failure
  // lists, for every g, a point it moves.
  {
    Witness moved;
    bool found = false;
    for (Index g = 0; g < ng && !found; ++g) {
      Index x = 0;
      while (x < nx && a.apply(g, x) == x) ++x;
      if (x == nx) {
        found = true;
      } else {
        moved.elements.push_back(lab.g(g));
        moved.elements.push_back(lab.x(x));
      }
    }
    set(Flag::unital_set, found ? pass() : fail(moved));
  }

  // invertible (sets): every ḡ has a two-sided inverse among the h̄.
  {
    FlagResult r = pass();
    for (Index g = 0; g < ng && r.holds; ++g) {
      bool ok = false;
      for (Index h = 0; h < ng && !ok; ++h) {
        ok = true;
        for (Index x = 0; x < nx && ok; ++x) {
          ok = a.apply(g, a.apply(h, x)) == x && a.apply(h, a.apply(g, x)) == x;
        }
      }
      if (!ok) r = fail({{lab.g(g)}});
    }
    set(Flag::invertible_set, r);
  }

  // closed (sets): ḡ∘h̄ lies in the image.
  {
    const std::size_t ni = a.image().size();
    std::vector<std::vector<signed char>> cache(ni, std::vector<signed char>(ni, -1));
    std::unordered_map<Endofunction, Index, EndofunctionHash> lookup;
    for (Index i = 0; i < ni; ++i) lookup.emplace(a.image()[i], i);
    FlagResult r = pass();
    for (Index g = 0; g < ng && r.holds; ++g) {
      for (Index h = 0; h < ng && r.holds; ++h) {
        auto& c = cache[a.image_index(g)][a.image_index(h)];
        if (c < 0) c = lookup.count(compose(a.map(g), a.map(h))) ? 1 : 0;
        if (c == 0) r = fail({{lab.g(g), lab.g(h)}});
      }
    }
    set(Flag::closed_set, r);
  }

  // reversible, three ways.
  {
    FlagResult r = pass();
    for (Index g = 0; g < ng; ++g) {
      const Endofunction& f = a.map(g);
      const bool by_witness = reversal_witness(f).has_value();
      const auto bad_target = unsolvable_target(f);
      const bool by_solvability = !bad_target.has_value();
      const bool by_permutation = is_bijection(f);
      if (by_witness != by_solvability || by_solvability != by_permutation) {
        throw std::logic_error("reversibility conditions disagree on " + f.str());
      }
      if (!by_permutation && r.holds) r = fail({{lab.g(g), lab.x(*bad_target)}});
    }
    set(Flag::reversible, r);
  }

  // transitive / free / regular via the dual maps x̄.
  {
    FlagResult tr = pass(), fr = pass();
    for (Index x = 0; x < nx; ++x) {
      std::vector<Index> first(nx, kNone);
      for (Index g = 0; g < ng; ++g) {
        Index y = a.apply(g, x);
        if (first[y] == kNone) {
          first[y] = g;
        } else if (fr.holds) {
          fr = fail({{lab.x(x), lab.g(first[y]), lab.g(g)}});
        }
      }
      for (Index y = 0; y < nx && tr.holds; ++y) {
        if (first[y] == kNone) tr = fail({{lab.x(x), lab.x(y)}});
      }
    }
    set(Flag::transitive, tr);
    set(Flag::free, fr);
    set(Flag::regular, !tr.holds ? tr : fr);
  }

  // injective as a function G → F_X.
  {
    FlagResult r = pass();
    for (Index g = 0; g < ng && r.holds; ++g) {
      for (Index h = g + 1; h < ng && r.holds; ++h) {
        if (a.image_index(g) == a.image_index(h)) r = fail({{lab.g(g), lab.g(h)}});
      }
    }
    set(Flag::injective_as_function, r);
  }

  if (rep.group_domain) {
    const FiniteGroup& G = a.domain().group();
    const Index e = G.identity();
    {
      FlagResult r = pass();
      for (Index x = 0; x < nx && r.holds; ++x) {
        if (a.apply(e, x) != x) r = fail({{lab.g(e), lab.x(x)}});
      }
      set(Flag::unital_group, r);
    }
    {
      FlagResult r = pass();
      for (Index g = 0; g < ng && r.holds; ++g) {
        const Index gi = G.inverse(g);
        for (Index x = 0; x < nx && r.holds; ++x) {
          if (a.apply(g, a.apply(gi, x)) != x || a.apply(gi, a.apply(g, x)) != x) {
            r = fail({{lab.g(g), lab.x(x)}});
          }
        }
      }
      set(Flag::invertible_group, r);
    }
    {
      FlagResult co = pass(), contra = pass();
      for (Index g = 0; g < ng; ++g) {
        for (Index h = 0; h < ng; ++h) {
          const Index gh = G.op(g, h);
          for (Index x = 0; x < nx; ++x) {
            if (co.holds && a.apply(g, a.apply(h, x)) != a.apply(gh, x)) {
              co = fail({{lab.g(g), lab.g(h), lab.x(x)}});
            }
            if (contra.holds && a.apply(h, a.apply(g, x)) != a.apply(gh, x)) {
              contra = fail({{lab.g(g), lab.g(h), lab.x(x)}});
            }
          }
        }
      }
      set(Flag::closed_group_covariant, co);
      set(Flag::closed_group_contravariant, contra);
    }
    const FlagResult& unital = rep.flag(Flag::unital_group);
    const FlagResult& closed = rep.flag(variance == Variance::covariant
                                            ? Flag::closed_group_covariant
                                            : Flag::closed_group_contravariant);
    set(Flag::monoidal, !unital.holds ? unital : closed);
    set(Flag::premonoidal, !unital.holds ? unital : rep.flag(Flag::closed_set));
  }

  // Image structure.
  ImageStructure& im = rep.image;
  im.size = a.image().size();
  im.closed = rep.holds(Flag::closed_set);
  if (im.closed) {
    const auto& img = a.image();
    for (Index i = 0; i < img.size() && !im.identity; ++i) {
      bool ok = true;
      for (Index j = 0; j < img.size() && ok; ++j) {
        ok = equal_maps(compose(img[i], img[j]), img[j]) && equal_maps(compose(img[j], img[i]), img[j]);
      }
      if (ok) im.identity = i;
    }
    if (im.identity) {
      const Endofunction& id = img[*im.identity];
      im.identity_is_identity_map = is_identity(id);
      im.is_group = true;
      for (Index i = 0; i < img.size() && im.is_group; ++i) {
        bool inv = false;
        for (Index j = 0; j < img.size() && !inv; ++j) {
          inv = equal_maps(compose(img[i], img[j]), id) && equal_maps(compose(img[j], img[i]), id);
        }
        im.is_group = inv;
      }
    }
  }
  return rep;
}

std::optional<FiniteGroup> image_group(const Action& a) {
  const auto& img = a.image();
  const std::size_t n = img.size();
  CayleyTable table(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      auto k = a.find_in_image(compose(img[i], img[j]));
      if (!k) return std::nullopt;
      table[i][j] = *k;
    }
  }
  std::vector<std::string> labels(n);
  for (Index g = a.domain().size(); g-- > 0;) {
    labels[a.image_index(g)] = "bar(" + a.domain().elements().label(g) + ")";
  }
  try {
    return validate_group(FiniteSet("image(" + a.carrier().name() + ")", std::move(labels), n),
                          std::move(table));
  } catch (const VerificationError&) {
    return std::nullopt;
  }
}

std::vector<Index> dual(const Action& a, Index x) {
  std::vector<Index> out(a.domain().size());
  for (Index g = 0; g < out.size(); ++g) out[g] = a.apply(g, x);
  return out;
}

std::vector<Index> orbit(const Action& a, Index x) {
  auto out = dual(a, x);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Index> conduit(const Action& a, Index x, Index y) {
  std::vector<Index> out;
  for (Index g = 0; g < a.domain().size(); ++g) {
    if (a.apply(g, x) == y) out.push_back(g);
  }
  return out;
}

std::vector<std::vector<Index>> division_table(const Action& a) {
  const std::size_t nx = a.carrier().size();
  if (a.domain().size() != nx) {
    throw PreconditionError("division needs a regular action; domain and carrier sizes differ");
  }
  std::vector<std::vector<Index>> table(nx, std::vector<Index>(nx, kNone));
  for (Index x = 0; x < nx; ++x) {
    for (Index g = 0; g < a.domain().size(); ++g) {
      Index y = a.apply(g, x);
      if (table[x][y] != kNone) {
        throw PreconditionError("division needs a regular action; not free at " +
                                a.carrier().label(x));
      }
      table[x][y] = g;
    }
  }
  return table;
}

Index division(const Action& a, Index x, Index y) {
  if (!classify(a).holds(Flag::regular)) {
    throw PreconditionError("division needs a regular action");
  }
  auto c = conduit(a, x, y);
  if (c.size() != 1) throw std::logic_error("regular action with a non-singleton conduit set");
  return c.front();
}

BinaryActionTable to_binary(const Action& a) {
  BinaryActionTable b{a.domain(), a.carrier(), {}};
  for (const auto& f : a.maps()) b.cells.emplace_back(f.images().begin(), f.images().end());
  return b;
}

Action from_binary(const BinaryActionTable& b) {
  std::vector<Endofunction> maps;
  for (const auto& row : b.cells) maps.emplace_back(b.carrier, row);
  return Action(b.domain, b.carrier, std::move(maps));
}

Action opposite_action(const Action& a) {
  return Action(opposite_group(a.domain().group()), a.carrier(), a.maps());
}

}  // namespace genaff
