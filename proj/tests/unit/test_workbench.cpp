#include <gtest/gtest.h>

#include "genaff/error.hpp"
#include "genaff/formats.hpp"
#include "genaff/workbench.hpp"

using namespace genaff;

namespace {

template <class T>
const T& example(const std::string& name) {
  return std::get<T>(example_catalog().at(name));
}

std::string get(const Report& r, const std::string& key) {
  auto v = r.get(key);
  EXPECT_TRUE(v.has_value()) << key;
  return v.value_or("<missing>");
}

}  // namespace

TEST(Report, FormatsLawsAndWitnesses) {
  Report r;
  r.add("a", std::size_t{3});
  r.add("b", true);
  LawCheck c;
  c.record(true, {"x"});
  c.record(false, {"p", "q"});
  r.law("law", c);
  EXPECT_EQ(r.str(), "a = 3\nb = true\nlaw = false\nlaw.witness = (p, q)\n");
  EXPECT_FALSE(r.get("nope").has_value());
}

TEST(Workbench, ClassifyEpsilonPhi) {
  const auto r = run_classify(example<Action>("epsilon_phi.action"));
  EXPECT_EQ(get(r, "closed_group_covariant"), "true");
  EXPECT_EQ(get(r, "image_is_group"), "true");
  EXPECT_EQ(get(r, "image_identity_is_identity_map"), "false");
  EXPECT_EQ(get(r, "unital_set"), "false");
  EXPECT_EQ(get(r, "reversible"), "false");
  EXPECT_EQ(get(r, "monoidal"), "false");
  EXPECT_EQ(r.status, kExitOk);
}

TEST(Workbench, ClassifySetDomainMarksGroupFlags) {
  const auto a = parse_action("kind action\nset D : u v\ncarrier x y\nmap u : x y\nmap v : y x\n");
  const auto r = run_classify(a);
  EXPECT_EQ(get(r, "monoidal"), "n/a");
  EXPECT_EQ(get(r, "reversible"), "true");
}

TEST(Workbench, AffineOnQuaternionSpace) {
  const auto r = run_affine(example<Action>("preaffine_q.action"), catalog_group("Z2^3"));
  EXPECT_EQ(get(r, "kind"), "strictly_preaffine");
  EXPECT_EQ(get(r, "translation_group_order"), "8");
  EXPECT_EQ(get(r, "translation_group_isomorphic_to"), "Q");
  EXPECT_EQ(get(r, "torsion_free"), "false");
  EXPECT_EQ(get(r, "scalars_used"), "false");
}

TEST(Workbench, AffineFailureIsReported) {
  const auto r = run_affine(example<Action>("epsilon_phi.action"));
  EXPECT_EQ(r.status, kExitVerification);
  EXPECT_TRUE(r.get("error.rule").has_value());
}

TEST(Workbench, FieldReport) {
  const auto r = run_field(example<FieldData>("z3_121.field"));
  EXPECT_EQ(get(r, "kind"), "monoidal");
  EXPECT_EQ(get(r, "constant"), "false");
  EXPECT_EQ(get(r, "inv2"), "true");
  EXPECT_EQ(get(r, "induced_kind"), "strictly_semipreaffine");
}

TEST(Workbench, DeformTorsion1StarTable) {
  const auto r = run_deform(example<FieldData>("z3_121.field"), "torsion1_star");
  EXPECT_EQ(get(r, "tuples"), "27");
  EXPECT_EQ(get(r, "first_nonzero"), "(0, 1, 2)");
  EXPECT_EQ(get(r, "at(0, 1, 2)"), "(1)");
  EXPECT_EQ(get(r, "at(0, 2, 1)"), "(2)");
  EXPECT_THROW(run_deform(example<FieldData>("z3_121.field"), "bogus"), PreconditionError);
}

TEST(Workbench, DeformConstantFieldIsZero) {
  const auto r = run_deform(example<FieldData>("constant_z3.field"), "curvature0");
  EXPECT_EQ(get(r, "nonzero"), "0");
}

TEST(Workbench, MalcevCommands) {
  const auto& heap = example<MalcevStructure>("heap_q.malcev");
  const auto check = run_malcev(heap, "check");
  EXPECT_EQ(get(check, "associative"), "true");
  EXPECT_EQ(get(check, "commutative"), "false");
  const auto pointed = run_malcev(example<MalcevStructure>("semi_3.malcev"), "pointed");
  EXPECT_EQ(get(pointed, "pointed_sum_associative.witness"), "(1, 2, 1)");
  EXPECT_THROW(run_malcev(heap, "recover", std::string("nowhere")), PreconditionError);
}

TEST(Workbench, MinePreaffineBijections) {
  MineOptions o;
  o.family = "preaffine_bijections";
  o.params = {"Z2^3", "Q"};
  o.filters = {"strictly_preaffine"};
  const auto res = mine(o);
  EXPECT_EQ(get(res.summary, "candidates"), "5040");
  EXPECT_EQ(get(res.summary, "passed"), "5040");
  EXPECT_EQ(res.kept.size(), 1u);
  EXPECT_EQ(res.summary.status, kExitOk);
}

TEST(Workbench, MineBudgetAndEmptyResult) {
  MineOptions o;
  o.family = "preaffine_bijections";
  o.params = {"Z2^3", "Q"};
  o.budget = 10;
  EXPECT_EQ(mine(o).summary.status, kExitBudget);
  o.budget = 1'000'000;
  o.filters = {"affine"};
  EXPECT_EQ(mine(o).summary.status, kExitVerification);
}

TEST(Workbench, MineMalcevCountsTwoPointStructures) {
  MineOptions o;
  o.family = "malcev";
  o.params = {"2", "A1,A2"};
  o.keep = 10;
  const auto res = mine(o);
  EXPECT_EQ(get(res.summary, "passed"), "4");
  EXPECT_EQ(res.kept.size(), 4u);
}

TEST(Workbench, MineRejectsUnknownFamilyAndFilter) {
  MineOptions o;
  o.family = "unicorns";
  EXPECT_THROW(mine(o), PreconditionError);
  o.family = "malcev";
  o.params = {"2", "A1"};
  o.filters = {"shiny"};
  EXPECT_THROW(mine(o), PreconditionError);
}

TEST(Workbench, ReportsAreDeterministic) {
  const auto& a = example<Action>("c8_on_q.action");
  EXPECT_EQ(run_classify(a).str(), run_classify(a).str());
  MineOptions o;
  o.family = "premonoidal_fields";
  o.params = {"Z2^2", "Z4"};
  o.filters = {"nonzero_curvature0"};
  o.budget = 2000;
  EXPECT_EQ(mine(o).summary.str(), mine(o).summary.str());
}
