#pragma once

// Line-oriented text formats. Tokens are whitespace separated, '#' starts a
// comment, and every file opens with `kind <group|action|field|malcev|binary>`.
//
//   group   name <n> / elements <e1> ... / identity <e> / row <g> : <g□e1> ...
//   action  <domain> / carrier <x1> ... / map <g> : <ḡ(x1)> ...
//   field   <domain> / carrier ... / at <p> followed by that point's map lines
//   malcev  carrier ... / entry <x> <y> <z> : <w>, lexicographic in (x, y, z)
//   binary  <domain> / carrier ... / row <x> : <β(g1,x)> ...
//
// A domain is `group <catalog name>`, an inline group block
// `group inline` ... `end`, or a bare set `set <name> : <e1> ...`.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genaff/actions.hpp"
#include "genaff/groups.hpp"
#include "genaff/malcev.hpp"

namespace genaff {

// A field as written in a file, before certification against a vector group.
struct FieldData {
  ActionDomain domain;
  FiniteSet carrier;
  std::vector<Action> per_point;

  bool operator==(const FieldData&) const = default;
};

using Structure = std::variant<FiniteGroup, Action, FieldData, MalcevStructure, BinaryActionTable>;

std::string_view structure_kind(const Structure& s);

// Throws ParseError (syntax, dimension, unknown label, ...) or the
// VerificationError of a failed group validation.
Structure parse_structure(std::string_view text);
FiniteGroup parse_group(std::string_view text);
Action parse_action(std::string_view text);
FieldData parse_field(std::string_view text);
MalcevStructure parse_malcev(std::string_view text);
BinaryActionTable parse_binary(std::string_view text);

// Reads a whole file; throws Error if it cannot be opened.
std::string read_file(const std::string& path);

// Canonical emission. A group domain equal to the catalog group of the same
// name is written by name, any other group inline.
std::string emit(const FiniteGroup& g);
std::string emit(const Action& a);
std::string emit(const FieldData& f);
std::string emit(const MalcevStructure& k);
std::string emit(const BinaryActionTable& b);
std::string emit(const Structure& s);

}  // namespace genaff
