#include <gtest/gtest.h>

#include <filesystem>

#include "genaff/error.hpp"
#include "genaff/formats.hpp"
#include "genaff/workbench.hpp"

using namespace genaff;

namespace {

ParseError parse_error(const std::string& text) {
  try {
    parse_structure(text);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "parsed:\n" << text;
  return ParseError(0, 0, "none", "");
}

}  // namespace

TEST(Formats, EveryCatalogEntryRoundTrips) {
  for (const auto& [name, s] : example_catalog()) {
    const std::string text = emit(s);
    const Structure back = parse_structure(text);
    EXPECT_EQ(back, s) << name;
    EXPECT_EQ(emit(back), text) << name;
  }
}

TEST(Formats, ShippedFilesMatchCatalog) {
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(GENAFF_DATA_DIR)) {
    const auto name = entry.path().filename().string();
    const auto it = example_catalog().find(name);
    ASSERT_NE(it, example_catalog().end()) << name;
    EXPECT_EQ(read_file(entry.path().string()), emit(it->second)) << name;
    ++files;
  }
  EXPECT_EQ(files, example_catalog().size());
}

TEST(Formats, CommentsAndWhitespace) {
  const auto a = parse_action(
      "# a comment\n"
      "kind   action\n"
      "group Z2   # trailing\n"
      "\n"
      "carrier p q\n"
      "map 0 : p q\n"
      "map 1 :   q p\n");
  EXPECT_EQ(a.apply(1, 0), 1u);
  EXPECT_EQ(a.domain().group(), catalog_group("Z2"));
}

TEST(Formats, SetDomain) {
  const auto a = parse_action(
      "kind action\n"
      "set D : u v\n"
      "carrier x y\n"
      "map u : x x\n"
      "map v : y y\n");
  EXPECT_FALSE(a.domain().is_group());
  EXPECT_EQ(a.domain().elements().label(1), "v");
  EXPECT_EQ(parse_action(emit(a)), a);
}

TEST(Formats, InlineGroupBlock) {
  const std::string text = read_file(std::string(GENAFF_DATA_DIR) + "/epsilon_phi.action");
  const auto a = parse_action(text);
  EXPECT_EQ(a.domain().group().name(), "G");
  EXPECT_EQ(a.carrier().size(), 4u);
}

TEST(Formats, ErrorsCarryPositionAndRule) {
  auto e = parse_error("kind action\ngroup Z2\ncarrier a b\nmap 0 : a c\nmap 1 : a b\n");
  EXPECT_EQ(e.rule(), "unknown_label");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_EQ(e.column(), 11u);

  e = parse_error("kind action\ngroup Nope\ncarrier a\n");
  EXPECT_EQ(e.rule(), "unknown_group");
  EXPECT_EQ(e.line(), 2u);

  e = parse_error("kind action\ngroup Z2\ncarrier a b\nmap 0 : a\nmap 1 : a b\n");
  EXPECT_EQ(e.rule(), "dimension");

  e = parse_error("kind action\ngroup Z2\ncarrier a b\nmap 0 : a b\nmap 0 : a b\n");
  EXPECT_EQ(e.rule(), "duplicate");

  e = parse_error("kind widget\n");
  EXPECT_EQ(e.rule(), "kind");
  EXPECT_EQ(e.line(), 1u);

  e = parse_error("carrier a b\n");
  EXPECT_EQ(e.line(), 1u);
}

TEST(Formats, GroupValidationSurfacesAsVerificationError) {
  EXPECT_THROW(parse_group("kind group\nname B\nelements e a\nidentity e\nrow e : e a\nrow a : e a\n"),
               VerificationError);
}

TEST(Formats, KindMismatchIsAParseError) {
  const std::string group_text = emit(catalog_group("Z3"));
  EXPECT_THROW(parse_action(group_text), ParseError);
  EXPECT_NO_THROW(parse_group(group_text));
}

TEST(Formats, BinaryConvertsBothWays) {
  const auto& a = std::get<Action>(example_catalog().at("c8_on_q.action"));
  const auto& b = std::get<BinaryActionTable>(example_catalog().at("c8_on_q.binary"));
  EXPECT_EQ(parse_binary(emit(to_binary(a))), b);
  EXPECT_EQ(from_binary(parse_binary(emit(b))), a);
}

TEST(Formats, MalcevTableOrderIsLexicographic) {
  const auto& k = std::get<MalcevStructure>(example_catalog().at("semi_3.malcev"));
  const auto text = emit(k);
  EXPECT_NE(text.find("entry 0 1 1 : 0"), std::string::npos);
  EXPECT_LT(text.find("entry 0 0 2"), text.find("entry 0 1 0"));
}

TEST(Formats, MissingFile) { EXPECT_THROW(read_file("/nonexistent/x.group"), Error); }
