#include "genaff/workbench.hpp"

#include <functional>
#include <sstream>

#include "genaff/deformation.hpp"
#include "genaff/fields.hpp"
#include "genaff/generators.hpp"

namespace genaff {

namespace {

constexpr std::size_t kTabulationLimit = 10'000;

std::string vector_str(const VectorGroup& v, Index x) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.coords[x].size(); ++i) os << (i ? ", " : "") << v.coords[x][i];
  os << ')';
  return os.str();
}

std::string tuple_str(const std::vector<std::string>& labels) { return Witness{labels}.str(); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Calls f on every tuple of the mixed-radix space, lexicographically.
void for_each_index_tuple(const std::vector<std::size_t>& sizes,
                          const std::function<void(const std::vector<Index>&)>& f) {
  for (auto s : sizes) {
    if (s == 0) return;
  }
  std::vector<Index> t(sizes.size(), 0);
  while (true) {
    f(t);
    std::size_t i = t.size();
    while (i > 0) {
      --i;
      if (++t[i] < sizes[i]) break;
      t[i] = 0;
      if (i == 0) return;
    }
    if (t.empty()) return;
  }
}

void add_image_group(Report& r, const Action& a) {
  const auto g = image_group(a);
  if (!g) return;
  r.add("image_group_order", g->order());
  r.add("image_group_abelian", is_abelian(*g));
  r.add("image_group_isomorphic_to", isomorphic_catalog_names(*g));
  if (a.domain().is_group()) {
    const auto& d = a.domain().group();
    if (d.order() == g->order() && d.order() <= kIsomorphismOrderCap) {
      r.add("domain_isomorphic_to_image", is_isomorphic(d, *g));
    } else if (d.order() != g->order()) {
      r.add("domain_isomorphic_to_image", false);
    }
  }
}

void add_error(Report& r, const VerificationError& e) {
  r.add("error", "verification");
  r.add("error.rule", e.rule());
  r.add("error.witness", e.witness().str());
  r.status = kExitVerification;
}

std::size_t vector_weight(const VectorGroup& v, Index x) { return v.weight(x); }

}  // namespace

void Report::add(std::string key, std::string value) { entries_.emplace_back(std::move(key), std::move(value)); }

void Report::law(const std::string& key, const LawCheck& c) { law(key, c.holds, c.witness); }

void Report::law(const std::string& key, bool holds, const std::optional<Witness>& w) {
  add(key, holds);
  if (!holds && w) add(key + ".witness", w->str());
}

std::optional<std::string> Report::get(const std::string& key) const {
  for (const auto& [k, v] : entries_) {
    if (k == key) return v;
  }
  return std::nullopt;
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + " = " + v + "\n";
  return out;
}

std::string isomorphic_catalog_names(const FiniteGroup& g) {
  if (g.order() > kIsomorphismOrderCap) return "n/a";
  std::vector<std::string> names;
  for (const auto& [name, h] : builtin_catalog()) {
    if (h.order() == g.order() && is_isomorphic(g, h)) names.push_back(name);
  }
  return names.empty() ? "-" : join(names, ",");
}

Report run_classify(const Action& a, Variance variance) {
  Report r;
  const auto rep = classify(a, variance);
  r.add("verb", "classify");
  r.add("domain", a.domain().elements().name());
  r.add("domain_kind", a.domain().is_group() ? "group" : "set");
  r.add("domain_size", a.domain().size());
  r.add("carrier_size", a.carrier().size());
  r.add("variance", variance == Variance::covariant ? "covariant" : "contravariant");
  for (Flag f : all_flags()) {
    if (rep.has(f)) {
      r.law(std::string(flag_name(f)), rep.flag(f).holds, rep.flag(f).witness);
    } else {
      r.add(std::string(flag_name(f)), "n/a");
    }
  }
  const auto& im = rep.image;
  r.add("image_size", im.size);
  r.add("image_closed", im.closed);
  if (im.identity) {
    Index first = 0;
    while (a.image_index(first) != *im.identity) ++first;
    r.add("image_identity", "bar(" + a.domain().elements().label(first) + ")");
    r.add("image_identity_map", a.image()[*im.identity].str());
  } else {
    r.add("image_identity", "-");
  }
  r.add("image_identity_is_identity_map", im.identity_is_identity_map);
  r.add("image_is_group", im.is_group);
  add_image_group(r, a);
  return r;
}

Report run_affine(const Action& a, const std::optional<FiniteGroup>& vectors, bool allow_semi) {
  Report r;
  r.add("verb", "affine");
  const FiniteGroup& g = vectors ? *vectors : a.domain().group();
  const VectorGroup v = certify_vector_group(g);
  r.add("vectors", v.base.name());
  r.add("prime", std::size_t{v.prime});
  r.add("dimension", v.dimension);
  r.add("points", a.carrier().size());
  std::optional<PreaffineSpace> s;
  try {
    s = allow_semi ? verify_semipreaffine(v, a) : verify_preaffine(v, a);
  } catch (const VerificationError& e) {
    add_error(r, e);
    return r;
  }
  r.add("kind", std::string(kind_name(s->kind())));
  const auto ch = chasles_holds(*s);
  r.law("chasles", ch.vector_level);
  r.law("chasles_translation", ch.translation_level);
  r.law("parallelogram", parallelogram_holds(*s));
  LawCheck tf;
  const auto& X = s->points();
  const auto& VL = v.base.carrier();
  for (Index x = 0; x < s->size(); ++x) {
    for (Index p = 0; p < v.order(); ++p) {
      for (Index q = 0; q < v.order(); ++q) {
        tf.record(torsion1(*s, x, p, q).vector == v.zero(), {X.label(x), VL.label(p), VL.label(q)});
      }
    }
  }
  r.law("torsion_free", tf);
  if (s->kind() != SpaceKind::strictly_semipreaffine) {
    const auto t = translation_group(*s);
    r.add("translation_group_order", t.group.order());
    r.add("translation_group_abelian", is_abelian(t.group));
    r.add("translation_group_isomorphic_to", isomorphic_catalog_names(t.group));
  }
  r.add("scalars_used", false);
  return r;
}

Report run_field(const FieldData& fd) {
  Report r;
  r.add("verb", "field");
  std::optional<ActionField> checked;
  try {
    checked = certify_field(fd);
  } catch (const VerificationError& e) {
    add_error(r, e);
    return r;
  }
  const ActionField& f = *checked;
  r.add("vectors", f.vectors().base.name());
  r.add("points", f.points().size());
  r.add("kind", std::string(field_kind_name(f.kind())));
  r.add("constant", f.constant());
  r.add("common_image_size", f.common_image().size());
  const auto laws = field_laws(f);
  r.law("unital_m", laws.unital);
  r.law("closed_group_m", laws.closed_group);
  r.law("reg1_m", laws.reg1);
  r.law("reg2_m", laws.reg2);
  r.law("inv1", laws.inv1);
  r.law("inv1b", laws.inv1b);
  r.law("inv2", laws.inv2);
  const auto ind = induced_action(f);
  r.add("induced_kind", std::string(kind_name(ind.space.kind())));
  r.law("induced_unital", ind.report.flag(Flag::unital_group).holds, ind.report.flag(Flag::unital_group).witness);
  r.law("induced_regular", ind.report.flag(Flag::regular).holds, ind.report.flag(Flag::regular).witness);
  r.law("induced_closed_set", ind.report.flag(Flag::closed_set).holds, ind.report.flag(Flag::closed_set).witness);
  return r;
}

Report run_deform(const Structure& st, const std::string& measure, bool exhaustive) {
  Report r;
  r.add("verb", "deform");
  r.add("measure", measure);

  std::optional<PreaffineSpace> space;
  std::optional<ActionField> field;
  std::string structure;
  if (const auto* a = std::get_if<Action>(&st)) {
    space = verify_semipreaffine(certify_vector_group(a->domain().group()), *a);
    structure = "space";
  } else if (const auto* fd = std::get_if<FieldData>(&st)) {
    field = certify_field(*fd);
    structure = "field";
  } else {
    throw PreconditionError("deform needs an action or a field file");
  }
  const bool space_measure = measure == "torsion0" || measure == "torsion1";
  if (space_measure && field) {
    space = induced_action(*field).space;
    structure = "induced";
  } else if (!space_measure && measure != "transport" && space) {
    field = constant_field(*space);
    structure = "constant_field";
  }
  const VectorGroup& V = space ? space->vectors() : field->vectors();
  const FiniteSet& X = space ? space->points() : field->points();
  const FiniteSet& VL = V.base.carrier();
  const std::size_t nx = X.size(), nv = V.order();

  std::vector<bool> is_point;
  std::function<DeformationValue(const std::vector<Index>&)> eval;
  if (measure == "torsion0" || measure == "torsion1") {
    is_point = {true, false, false};
    const bool zero = measure == "torsion0";
    eval = [&, zero](const std::vector<Index>& t) {
      return zero ? torsion0(*space, t[0], t[1], t[2]) : torsion1(*space, t[0], t[1], t[2]);
    };
  } else if (measure == "torsion1_star" || measure == "torsion0_star") {
    is_point = {true, false, false};
    const bool one = measure == "torsion1_star";
    eval = [&, one](const std::vector<Index>& t) {
      return one ? torsion1_star(*field, t[0], t[1], t[2]) : torsion0_star(*field, t[0], t[1], t[2]);
    };
  } else if (measure == "curvature0" || measure == "curvature1") {
    is_point = {true, false, false, false};
    const bool zero = measure == "curvature0";
    eval = [&, zero](const std::vector<Index>& t) {
      return zero ? curvature0(*field, t[0], t[1], t[2], t[3]) : curvature1(*field, t[0], t[1], t[2], t[3]);
    };
  } else if (measure == "dstar") {
    is_point = {true, true, false, false};
    eval = [&](const std::vector<Index>& t) { return dstar(*field, t[0], t[1], t[2], t[3]); };
  } else if (measure == "transport") {
    is_point = {true, true, true, true};
    eval = [&](const std::vector<Index>& t) {
      return field ? transport_curvature(*field, t[0], t[1], t[2], t[3])
                   : transport_curvature(*space, t[0], t[1], t[2], t[3]);
    };
  } else {
    throw PreconditionError("unknown measure '" + measure + "'");
  }

  std::vector<std::size_t> sizes;
  std::size_t tuples = 1;
  for (bool p : is_point) {
    sizes.push_back(p ? nx : nv);
    tuples *= sizes.back();
  }
  const bool tabulate = exhaustive || tuples <= kTabulationLimit;
  r.add("structure", structure);
  r.add("points", nx);
  r.add("vectors", V.base.name());
  r.add("tuples", tuples);
  r.add("table", tabulate ? "full" : "summary");

  auto labels = [&](const std::vector<Index>& t) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < t.size(); ++i) out.push_back(is_point[i] ? X.label(t[i]) : VL.label(t[i]));
    return out;
  };
  std::size_t nonzero = 0, max_norm = 0;
  std::optional<std::string> first_nonzero, max_witness;
  std::vector<std::pair<std::string, std::string>> rows;
  for_each_index_tuple(sizes, [&](const std::vector<Index>& t) {
    const auto d = eval(t);
    const std::size_t w = vector_weight(V, d.vector);
    if (d.vector != V.zero()) {
      ++nonzero;
      if (!first_nonzero) first_nonzero = tuple_str(labels(t));
    }
    if (w > max_norm) {
      max_norm = w;
      max_witness = tuple_str(labels(t)) + " -> " + vector_str(V, d.vector);
    }
    if (tabulate) rows.emplace_back("at" + tuple_str(labels(t)), vector_str(V, d.vector));
  });
  r.add("nonzero", nonzero);
  r.add("max_norm", max_norm);
  r.add("max_norm_nonzero", max_norm > 0);
  r.add("first_nonzero", first_nonzero.value_or("-"));
  r.add("max_witness", max_witness.value_or("-"));
  for (auto& [k, v] : rows) r.add(std::move(k), std::move(v));
  return r;
}

Report run_malcev(const MalcevStructure& k, const std::string& command, const std::optional<std::string>& base) {
  Report r;
  r.add("verb", "malcev");
  r.add("command", command);
  r.add("carrier_size", k.size());
  const auto& X = k.carrier();
  const Index e = base ? X.index_of(*base) : 0;
  if (command == "check") {
    const auto rep = check_identities(k);
    for (MalcevLaw l : all_laws()) r.law(std::string(law_name(l)), rep.law(l));
    r.add("malcev", rep.malcev);
    r.add("semiassociative", rep.semiassociative);
  } else if (command == "iterate") {
    const auto it = iteration_closure(k);
    r.add("translations", it.translations);
    r.add("iterations", it.iterations);
    r.add("closed", it.closed);
    r.add("monoid", it.monoid);
    r.add("group", it.group);
    r.law("fixed_point", it.fixed_point);
    if (it.as_group) {
      r.add("group_order", it.as_group->order());
      r.add("group_abelian", is_abelian(*it.as_group));
      r.add("group_isomorphic_to", isomorphic_catalog_names(*it.as_group));
    }
  } else if (command == "recover") {
    const auto rg = recovered_group(k, e);
    r.add("base", X.label(e));
    r.add("magma_is_group", rg.group.has_value());
    if (rg.group) {
      r.add("group_abelian", is_abelian(*rg.group));
      r.add("group_isomorphic_to", isomorphic_catalog_names(*rg.group));
      r.law("identity_inverse", rg.identity_inverse);
      r.law("phi_isomorphism", rg.phi);
      r.law("psi_isomorphism", rg.psi);
    } else {
      r.add("failed_rule", rg.failed_rule.value_or("-"));
      r.add("failure", rg.failure ? rg.failure->str() : "-");
    }
  } else if (command == "pointed") {
    r.add("base", X.label(e));
    const auto w = pointed_nonassociativity(k, e);
    r.law("pointed_sum_associative", !w, w);
  } else {
    throw PreconditionError("unknown malcev command '" + command + "'");
  }
  return r;
}

namespace {

struct MineState {
  const MineOptions& opt;
  MineResult result;
  std::size_t candidates = 0, passed = 0;
  bool exhausted = false;
  std::optional<std::size_t> first_passing;
  std::vector<std::pair<std::string, std::string>> notes;

  bool wants(const std::string& f) const {
    for (const auto& x : opt.filters) {
      if (x == f) return true;
    }
    return false;
  }

  // Returns false once the budget is spent.
  bool next() {
    if (candidates >= opt.budget) {
      exhausted = true;
      return false;
    }
    ++candidates;
    return true;
  }

  void pass(Structure s, std::vector<std::pair<std::string, std::string>> detail = {}) {
    ++passed;
    if (!first_passing) {
      first_passing = candidates;
      notes = std::move(detail);
    }
    if (result.kept.size() < opt.keep) result.kept.push_back(std::move(s));
  }
};

void check_filters(const MineOptions& o, const std::vector<std::string>& known) {
  for (const auto& f : o.filters) {
    bool ok = false;
    for (const auto& k : known) ok = ok || k == f;
    if (!ok) throw PreconditionError("unknown filter '" + f + "' for family " + o.family);
  }
}

const std::string& param(const MineOptions& o, std::size_t i, const char* what) {
  if (i >= o.params.size()) throw PreconditionError(o.family + " needs parameter <" + what + ">");
  return o.params[i];
}

// Assignments of `choices` options to `slots` positions, lexicographic.
template <class F>
void for_each_assignment(std::size_t slots, std::size_t choices, const F& f) {
  std::vector<Index> a(slots, 0);
  while (true) {
    if (!f(a)) return;
    std::size_t i = slots;
    while (i > 0) {
      --i;
      if (++a[i] < choices) break;
      a[i] = 0;
      if (i == 0) return;
    }
    if (slots == 0) return;
  }
}

void mine_preaffine(MineState& st) {
  check_filters(st.opt, {"affine", "strictly_preaffine"});
  const VectorGroup v = certify_vector_group(catalog_group(param(st.opt, 0, "V")));
  const FiniteGroup& t = catalog_group(param(st.opt, 1, "T"));
  for_each_identity_preserving_bijection(v.base, t, [&](std::span<const Index> beta) {
    if (!st.next()) return false;
    Action a = bijection_action(v, t, beta);
    SpaceKind kind;
    try {
      kind = verify_preaffine(v, a).kind();
    } catch (const VerificationError&) {
      return true;
    }
    if (st.wants("affine") && kind != SpaceKind::affine) return true;
    if (st.wants("strictly_preaffine") && kind != SpaceKind::strictly_preaffine) return true;
    st.pass(std::move(a));
    return true;
  });
}

std::optional<std::vector<std::string>> first_nonzero_torsion1_star(const ActionField& f) {
  const auto& X = f.points();
  const auto& VL = f.vectors().base.carrier();
  for (Index x = 0; x < X.size(); ++x) {
    for (Index u = 0; u < VL.size(); ++u) {
      for (Index v = 0; v < VL.size(); ++v) {
        const auto d = torsion1_star(f, x, u, v);
        if (d.vector != f.vectors().zero()) {
          return std::vector<std::string>{X.label(x), VL.label(u), VL.label(v), vector_str(f.vectors(), d.vector)};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<std::string>> first_nonzero_curvature0(const ActionField& f) {
  const auto& X = f.points();
  const auto& VL = f.vectors().base.carrier();
  const std::size_t nv = VL.size();
  for (Index x = 0; x < X.size(); ++x) {
    for (Index w = 0; w < nv; ++w) {
      for (Index u = 0; u < nv; ++u) {
        for (Index v = 0; v < nv; ++v) {
          const auto d = curvature0(f, x, w, u, v);
          if (d.vector != f.vectors().zero()) {
            return std::vector<std::string>{X.label(x), VL.label(w), VL.label(u), VL.label(v),
                                            vector_str(f.vectors(), d.vector)};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> witness_notes(const std::vector<std::string>& w) {
  std::vector<std::string> args(w.begin(), w.end() - 1);
  return {{"witness", tuple_str(args)}, {"witness_value", w.back()}};
}

void mine_automorphism_fields(MineState& st) {
  check_filters(st.opt, {"constant", "nonconstant", "nonzero_torsion1_star"});
  const VectorGroup v = certify_vector_group(catalog_group(param(st.opt, 0, "V")));
  const std::size_t n = v.order();
  const auto autos = automorphisms(v.base);
  auto examine = [&](const std::vector<Index>& assignment) {
    if (!st.next()) return false;
    FieldData fd = automorphism_field(v, assignment);
    const ActionField f = certify_field(fd);
    if (f.kind() != FieldKind::monoidal) return true;
    if (st.wants("constant") && !f.constant()) return true;
    if (st.wants("nonconstant") && f.constant()) return true;
    std::vector<std::pair<std::string, std::string>> detail;
    if (st.wants("nonzero_torsion1_star")) {
      const auto w = first_nonzero_torsion1_star(f);
      if (!w) return true;
      detail = witness_notes(*w);
    }
    st.pass(std::move(fd), std::move(detail));
    return true;
  };
  const std::string mode = st.opt.params.size() > 1 ? st.opt.params[1] : "all";
  if (mode == "all") {
    for_each_assignment(n, autos.size(), examine);
    return;
  }
  std::vector<Index> assignment;
  for (const auto& tok : split(mode, ',')) assignment.push_back(std::stoul(tok));
  examine(assignment);
}

void mine_premonoidal_fields(MineState& st) {
  check_filters(st.opt, {"nonzero_curvature0", "strictly_semipreaffine", "strictly_premonoidal"});
  const VectorGroup v = certify_vector_group(catalog_group(param(st.opt, 0, "V")));
  const FiniteGroup& t = catalog_group(param(st.opt, 1, "T"));
  std::vector<std::vector<Index>> bij;
  for_each_identity_preserving_bijection(v.base, t, [&](std::span<const Index> b) {
    bij.emplace_back(b.begin(), b.end());
    return true;
  });
  for_each_assignment(t.order(), bij.size(), [&](const std::vector<Index>& assignment) {
    if (!st.next()) return false;
    std::vector<std::vector<Index>> betas;
    for (Index i : assignment) betas.push_back(bij[i]);
    FieldData fd = bijection_field(v, t, betas);
    const ActionField f = certify_field(fd);
    if (st.wants("strictly_premonoidal") && f.kind() != FieldKind::premonoidal) return true;
    if (st.wants("strictly_semipreaffine") &&
        induced_action(f).space.kind() != SpaceKind::strictly_semipreaffine) {
      return true;
    }
    std::vector<std::pair<std::string, std::string>> detail;
    if (st.wants("nonzero_curvature0")) {
      const auto w = first_nonzero_curvature0(f);
      if (!w) return true;
      detail = witness_notes(*w);
    }
    st.pass(std::move(fd), std::move(detail));
    return true;
  });
}

void mine_malcev(MineState& st) {
  check_filters(st.opt, {"associative", "nonassociative", "strictly_semipreaffine", "nonassociative_pointed_sum"});
  const std::size_t n = std::stoul(param(st.opt, 0, "n"));
  std::vector<MalcevLaw> laws;
  if (st.opt.params.size() > 1) {
    for (const auto& tok : split(st.opt.params[1], ',')) {
      auto l = parse_law(tok);
      if (!l) throw PreconditionError("unknown law '" + tok + "'");
      laws.push_back(*l);
    }
  }
  const FiniteSet x = FiniteSet::range("X", n);
  try {
    enumerate_malcev(
        n, laws,
        [&](std::span<const Index> table) {
          if (!st.next()) return false;
          auto holds = [&](MalcevLaw l) { return law_holds(table, n, l); };
          if (st.wants("associative") && !holds(MalcevLaw::associative)) return true;
          if (st.wants("nonassociative") && holds(MalcevLaw::associative)) return true;
          if (st.wants("strictly_semipreaffine") &&
              !(holds(MalcevLaw::A1) && holds(MalcevLaw::A2) && holds(MalcevLaw::A3) && !holds(MalcevLaw::A4))) {
            return true;
          }
          MalcevStructure k(x, std::vector<Index>(table.begin(), table.end()));
          for (MalcevLaw l : laws) {
            if (!k.holds(l)) throw std::logic_error("enumerated table violates a requested law");
          }
          std::vector<std::pair<std::string, std::string>> detail;
          if (st.wants("nonassociative_pointed_sum")) {
            std::optional<Witness> w;
            Index e = 0;
            for (; e < n && !w; ++e) w = pointed_nonassociativity(k, e);
            if (!w) return true;
            detail = {{"witness_base", x.label(e - 1)}, {"witness", w->str()}};
          }
          st.pass(std::move(k), std::move(detail));
          return true;
        },
        st.opt.budget * 64);
  } catch (const BudgetExceeded&) {
    st.exhausted = true;
  }
}

}  // namespace

MineResult mine(const MineOptions& options) {
  MineState st{options, {}, 0, 0, false, std::nullopt, {}};
  if (options.family == "preaffine_bijections") {
    mine_preaffine(st);
  } else if (options.family == "multiaffine_automorphism_fields") {
    mine_automorphism_fields(st);
  } else if (options.family == "premonoidal_fields") {
    mine_premonoidal_fields(st);
  } else if (options.family == "malcev") {
    mine_malcev(st);
  } else {
    throw PreconditionError("unknown family '" + options.family + "'");
  }
  Report& r = st.result.summary;
  r.add("verb", "mine");
  r.add("family", options.family);
  r.add("params", options.params.empty() ? "-" : join(options.params, " "));
  r.add("filters", options.filters.empty() ? "-" : join(options.filters, ","));
  r.add("budget", options.budget);
  r.add("candidates", st.candidates);
  r.add("passed", st.passed);
  r.add("budget_exhausted", st.exhausted);
  r.add("kept", st.result.kept.size());
  r.add("first_passing", st.first_passing ? std::to_string(*st.first_passing) : "-");
  for (auto& [k, v] : st.notes) r.add(k, v);
  if (st.exhausted) {
    r.status = kExitBudget;
  } else if (!options.filters.empty() && st.passed == 0) {
    r.status = kExitVerification;
  }
  return std::move(st.result);
}

const std::map<std::string, Structure>& example_catalog() {
  static const std::map<std::string, Structure> catalog = [] {
    std::map<std::string, Structure> c;
    for (const auto& [name, g] : builtin_catalog()) c.emplace(name + ".group", g);

    const FiniteGroup g2 = validate_group(FiniteSet("G", {"e", "f"}), {{0, 1}, {1, 0}});
    const FiniteSet abcd("X", {"a", "b", "c", "d"});
    c.emplace("epsilon_phi.action",
              Action(g2, abcd, {Endofunction(abcd, {0, 0, 2, 3}), Endofunction(abcd, {0, 0, 3, 2})}));

    // a^n ↦ left multiplication by 1, i, j, k, -1, -k, -j, -i
    const FiniteGroup& q = catalog_group("Q");
    const Index zs[] = {0, 1, 2, 3, 4, 7, 6, 5};
    std::vector<Endofunction> sigma;
    for (Index z : zs) {
      std::vector<Index> img(8);
      for (Index x = 0; x < 8; ++x) img[x] = q.op(z, x);
      sigma.emplace_back(q.carrier(), std::move(img));
    }
    const Action c8q(catalog_group("C8"), q.carrier(), std::move(sigma));
    c.emplace("c8_on_q.action", c8q);
    c.emplace("c8_on_q.binary", to_binary(c8q));

    const VectorGroup z3 = elementary_abelian(3, 1);
    const VectorGroup z2x2 = elementary_abelian(2, 2);
    const VectorGroup z2x3 = elementary_abelian(2, 3);
    c.emplace("affine_z3.action", right_regular_action(z3.base));
    c.emplace("affine_z2x2.action", right_regular_action(z2x2.base));
    for_each_identity_preserving_bijection(z2x3.base, q, [&](std::span<const Index> beta) {
      c.emplace("preaffine_q.action", bijection_action(z2x3, q, beta));
      return false;
    });

    const Index constant[] = {0, 0, 0}, varying[] = {0, 1, 0};
    c.emplace("constant_z3.field", automorphism_field(z3, constant));
    c.emplace("z3_121.field", automorphism_field(z3, varying));
    const FiniteGroup& z4 = catalog_group("Z4");
    for_each_identity_preserving_bijection(z2x2.base, z4, [&](std::span<const Index> beta) {
      std::vector<std::vector<Index>> betas(4, std::vector<Index>(beta.begin(), beta.end()));
      c.emplace("premonoidal_z4.field", bijection_field(z2x2, z4, betas));
      return false;
    });

    c.emplace("heap_z2.malcev", from_group(catalog_group("Z2")));
    c.emplace("heap_q.malcev", from_group(q));
    const FiniteSet x3 = FiniteSet::range("X", 3);
    enumerate_malcev(3, {MalcevLaw::A1, MalcevLaw::A2, MalcevLaw::A3}, [&](std::span<const Index> t) {
      if (law_holds(t, 3, MalcevLaw::A4)) return true;
      c.emplace("semi_3.malcev", MalcevStructure(x3, std::vector<Index>(t.begin(), t.end())));
      return false;
    });
    return c;
  }();
  return catalog;
}

}  // namespace genaff
