#include "genaff/formats.hpp"

#include <fstream>
#include <optional>
#include <sstream>

namespace genaff {

namespace {

struct Token {
  std::string text;
  std::size_t col;
};

struct Line {
  std::size_t number;
  std::vector<Token> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      const std::size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.push_back({std::string(raw.substr(start, i - start)), start + 1});
    }
    if (!line.tokens.empty()) out.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lines_(tokenize(text)) {}

  [[noreturn]] void fail(const Line& l, std::size_t tok, const std::string& rule,
                         const std::string& msg) const {
    const std::size_t col = tok < l.tokens.size() ? l.tokens[tok].col : 1;
    throw ParseError(l.number, col, rule, msg);
  }

  [[noreturn]] void fail_eof(const std::string& what) const {
    const std::size_t line = lines_.empty() ? 1 : lines_.back().number + 1;
    throw ParseError(line, 1, "syntax", "unexpected end of input, expected " + what);
  }

  bool done() const { return pos_ == lines_.size(); }
  const Line& peek() const { return lines_[pos_]; }

  // Next line, which must start with `keyword`.
  const Line& expect(const std::string& keyword) {
    if (done()) fail_eof("'" + keyword + "'");
    const Line& l = lines_[pos_];
    if (l.tokens[0].text != keyword) {
      fail(l, 0, "syntax", "expected '" + keyword + "', found '" + l.tokens[0].text + "'");
    }
    ++pos_;
    return l;
  }

  bool next_is(const std::string& keyword) const {
    return !done() && lines_[pos_].tokens[0].text == keyword;
  }

  void expect_end() const {
    if (!done()) fail(peek(), 0, "syntax", "unexpected '" + peek().tokens[0].text + "' after the body");
  }

  std::string kind() {
    const Line& l = expect("kind");
    if (l.tokens.size() != 2) fail(l, 0, "syntax", "expected 'kind <name>'");
    return l.tokens[1].text;
  }

  std::vector<std::string> labels_after(const Line& l, std::size_t from) const {
    std::vector<std::string> out;
    for (std::size_t i = from; i < l.tokens.size(); ++i) out.push_back(l.tokens[i].text);
    if (out.empty()) fail(l, 0, "dimension", "no elements listed");
    return out;
  }

  FiniteSet make_set(const Line& l, std::string name, std::vector<std::string> labels,
                     std::size_t cap = kDefaultCarrierCap) const {
    try {
      return FiniteSet(std::move(name), std::move(labels), cap);
    } catch (const PreconditionError& e) {
      fail(l, 1, "carrier", e.what());
    }
  }

  Index lookup(const Line& l, std::size_t tok, const FiniteSet& s) const {
    const auto i = s.find(l.tokens[tok].text);
    if (!i) fail(l, tok, "unknown_label", "'" + l.tokens[tok].text + "' is not an element of " + s.name());
    return *i;
  }

  // `<keyword> <head> : <v1> ... <vn>`; returns the index of the head and the
  // looked-up values.
  std::pair<Index, std::vector<Index>> row(const Line& l, const FiniteSet& heads,
                                           const FiniteSet& values, std::size_t n) const {
    if (l.tokens.size() < 3 || l.tokens[2].text != ":") {
      fail(l, 0, "syntax", "expected '" + l.tokens[0].text + " <element> : <values>'");
    }
    const Index h = lookup(l, 1, heads);
    if (l.tokens.size() - 3 != n) {
      fail(l, 0, "dimension",
           "expected " + std::to_string(n) + " values, found " + std::to_string(l.tokens.size() - 3));
    }
    std::vector<Index> out;
    for (std::size_t i = 3; i < l.tokens.size(); ++i) out.push_back(lookup(l, i, values));
    return {h, out};
  }

  FiniteGroup group_block() {
    const Line& nl = expect("name");
    if (nl.tokens.size() != 2) fail(nl, 0, "syntax", "expected 'name <label>'");
    const Line& el = expect("elements");
    FiniteSet carrier = make_set(el, nl.tokens[1].text, labels_after(el, 1));
    const Line& il = expect("identity");
    if (il.tokens.size() != 2) fail(il, 0, "syntax", "expected 'identity <element>'");
    const Index declared = lookup(il, 1, carrier);
    const std::size_t n = carrier.size();
    CayleyTable table(n);
    std::vector<bool> seen(n, false);
    for (std::size_t r = 0; r < n; ++r) {
      const Line& rl = expect("row");
      auto [g, values] = row(rl, carrier, carrier, n);
      if (seen[g]) fail(rl, 1, "duplicate", "row for '" + carrier.label(g) + "' given twice");
      seen[g] = true;
      table[g] = std::move(values);
    }
    FiniteGroup g = validate_group(carrier, std::move(table));
    if (g.identity() != declared) {
      fail(il, 1, "identity",
           "declared identity '" + carrier.label(declared) + "' but the table's identity is '" +
               carrier.label(g.identity()) + "'");
    }
    return g;
  }

  ActionDomain domain() {
    if (next_is("set")) {
      const Line& l = expect("set");
      if (l.tokens.size() < 4 || l.tokens[2].text != ":") fail(l, 0, "syntax", "expected 'set <name> : <elements>'");
      return make_set(l, l.tokens[1].text, labels_after(l, 3));
    }
    const Line& l = expect("group");
    if (l.tokens.size() != 2) fail(l, 0, "syntax", "expected 'group <name>' or 'group inline'");
    if (l.tokens[1].text == "inline") {
      FiniteGroup g = group_block();
      expect("end");
      return g;
    }
    const auto& cat = builtin_catalog();
    auto it = cat.find(l.tokens[1].text);
    if (it == cat.end()) fail(l, 1, "unknown_group", "no catalog group named '" + l.tokens[1].text + "'");
    return it->second;
  }

  FiniteSet carrier(std::size_t cap = kDefaultCarrierCap) {
    const Line& l = expect("carrier");
    return make_set(l, "X", labels_after(l, 1), cap);
  }

  std::vector<Endofunction> maps(const ActionDomain& d, const FiniteSet& x) {
    const std::size_t n = d.size();
    std::vector<std::optional<Endofunction>> slots(n);
    for (std::size_t r = 0; r < n; ++r) {
      const Line& l = expect("map");
      auto [g, values] = row(l, d.elements(), x, x.size());
      if (slots[g]) fail(l, 1, "duplicate", "map for '" + d.elements().label(g) + "' given twice");
      slots[g] = Endofunction(x, std::move(values));
    }
    std::vector<Endofunction> out;
    for (auto& s : slots) out.push_back(std::move(*s));
    return out;
  }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

void require_kind(Parser& p, const std::string& want) {
  const std::string got = p.kind();
  if (got != want) throw ParseError(1, 6, "kind", "expected kind '" + want + "', found '" + got + "'");
}

FiniteGroup group_body(Parser& p) {
  FiniteGroup g = p.group_block();
  p.expect_end();
  return g;
}

Action action_body(Parser& p) {
  ActionDomain d = p.domain();
  FiniteSet x = p.carrier();
  auto maps = p.maps(d, x);
  p.expect_end();
  return Action(std::move(d), std::move(x), std::move(maps));
}

FieldData field_body(Parser& p) {
  ActionDomain d = p.domain();
  FiniteSet x = p.carrier();
  std::vector<std::optional<Action>> slots(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const Line& l = p.expect("at");
    if (l.tokens.size() != 2) p.fail(l, 0, "syntax", "expected 'at <point>'");
    const Index pt = p.lookup(l, 1, x);
    if (slots[pt]) p.fail(l, 1, "duplicate", "point '" + x.label(pt) + "' given twice");
    slots[pt] = Action(d, x, p.maps(d, x));
  }
  p.expect_end();
  std::vector<Action> per_point;
  for (auto& s : slots) per_point.push_back(std::move(*s));
  return FieldData{std::move(d), std::move(x), std::move(per_point)};
}

MalcevStructure malcev_body(Parser& p) {
  FiniteSet x = p.carrier(kMalcevCarrierCap);
  const std::size_t n = x.size();
  std::vector<Index> table;
  table.reserve(n * n * n);
  for (Index i = 0; i < n * n * n; ++i) {
    const Line& l = p.expect("entry");
    if (l.tokens.size() != 6 || l.tokens[4].text != ":") p.fail(l, 0, "syntax", "expected 'entry <x> <y> <z> : <w>'");
    const Index a = p.lookup(l, 1, x), b = p.lookup(l, 2, x), c = p.lookup(l, 3, x);
    if ((a * n + b) * n + c != i) p.fail(l, 1, "order", "entries must be listed in lexicographic order");
    table.push_back(p.lookup(l, 5, x));
  }
  p.expect_end();
  return MalcevStructure(std::move(x), std::move(table));
}

BinaryActionTable binary_body(Parser& p) {
  ActionDomain d = p.domain();
  FiniteSet x = p.carrier();
  std::vector<std::vector<Index>> cells(d.size(), std::vector<Index>(x.size()));
  std::vector<bool> seen(x.size(), false);
  for (std::size_t r = 0; r < x.size(); ++r) {
    const Line& l = p.expect("row");
    auto [pt, values] = p.row(l, x, x, d.size());
    if (seen[pt]) p.fail(l, 1, "duplicate", "row for '" + x.label(pt) + "' given twice");
    seen[pt] = true;
    for (Index g = 0; g < d.size(); ++g) cells[g][pt] = values[g];
  }
  p.expect_end();
  return BinaryActionTable{std::move(d), std::move(x), std::move(cells)};
}

void join(std::ostringstream& os, const std::vector<std::string>& labels) {
  for (const auto& l : labels) os << ' ' << l;
}

void emit_group_block(std::ostringstream& os, const FiniteGroup& g, const std::string& indent) {
  const auto& s = g.carrier();
  os << indent << "name " << g.name() << '\n' << indent << "elements";
  join(os, s.labels());
  os << '\n' << indent << "identity " << s.label(g.identity()) << '\n';
  for (Index a = 0; a < g.order(); ++a) {
    os << indent << "row " << s.label(a) << " :";
    for (Index b = 0; b < g.order(); ++b) os << ' ' << s.label(g.op(a, b));
    os << '\n';
  }
}

void emit_domain(std::ostringstream& os, const ActionDomain& d) {
  if (!d.is_group()) {
    os << "set " << d.elements().name() << " :";
    join(os, d.elements().labels());
    os << '\n';
    return;
  }
  const FiniteGroup& g = d.group();
  const auto& cat = builtin_catalog();
  if (auto it = cat.find(g.name()); it != cat.end() && it->second == g) {
    os << "group " << g.name() << '\n';
    return;
  }
  os << "group inline\n";
  emit_group_block(os, g, "  ");
  os << "end\n";
}

void emit_carrier(std::ostringstream& os, const FiniteSet& x) {
  os << "carrier";
  join(os, x.labels());
  os << '\n';
}

void emit_maps(std::ostringstream& os, const Action& a, const std::string& indent) {
  const auto& d = a.domain().elements();
  for (Index g = 0; g < d.size(); ++g) {
    os << indent << "map " << d.label(g) << " :";
    for (Index x = 0; x < a.carrier().size(); ++x) os << ' ' << a.carrier().label(a.apply(g, x));
    os << '\n';
  }
}

}  // namespace

std::string_view structure_kind(const Structure& s) {
  static constexpr std::string_view kNames[] = {"group", "action", "field", "malcev", "binary"};
  return kNames[s.index()];
}

Structure parse_structure(std::string_view text) {
  Parser p(text);
  const std::string k = p.kind();
  if (k == "group") return group_body(p);
  if (k == "action") return action_body(p);
  if (k == "field") return field_body(p);
  if (k == "malcev") return malcev_body(p);
  if (k == "binary") return binary_body(p);
  throw ParseError(1, 6, "kind", "unknown kind '" + k + "'");
}

FiniteGroup parse_group(std::string_view text) {
  Parser p(text);
  require_kind(p, "group");
  return group_body(p);
}

Action parse_action(std::string_view text) {
  Parser p(text);
  require_kind(p, "action");
  return action_body(p);
}

FieldData parse_field(std::string_view text) {
  Parser p(text);
  require_kind(p, "field");
  return field_body(p);
}

MalcevStructure parse_malcev(std::string_view text) {
  Parser p(text);
  require_kind(p, "malcev");
  return malcev_body(p);
}

BinaryActionTable parse_binary(std::string_view text) {
  Parser p(text);
  require_kind(p, "binary");
  return binary_body(p);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string emit(const FiniteGroup& g) {
  std::ostringstream os;
  os << "kind group\n";
  emit_group_block(os, g, "");
  return os.str();
}

std::string emit(const Action& a) {
  std::ostringstream os;
  os << "kind action\n";
  emit_domain(os, a.domain());
  emit_carrier(os, a.carrier());
  emit_maps(os, a, "");
  return os.str();
}

std::string emit(const FieldData& f) {
  std::ostringstream os;
  os << "kind field\n";
  emit_domain(os, f.domain);
  emit_carrier(os, f.carrier);
  for (Index p = 0; p < f.carrier.size(); ++p) {
    os << "at " << f.carrier.label(p) << '\n';
    emit_maps(os, f.per_point[p], "  ");
  }
  return os.str();
}

std::string emit(const MalcevStructure& k) {
  std::ostringstream os;
  os << "kind malcev\n";
  emit_carrier(os, k.carrier());
  const auto& X = k.carrier();
  for (Index x = 0; x < k.size(); ++x) {
    for (Index y = 0; y < k.size(); ++y) {
      for (Index z = 0; z < k.size(); ++z) {
        os << "entry " << X.label(x) << ' ' << X.label(y) << ' ' << X.label(z) << " : "
           << X.label(k(x, y, z)) << '\n';
      }
    }
  }
  return os.str();
}

std::string emit(const BinaryActionTable& b) {
  std::ostringstream os;
  os << "kind binary\n";
  emit_domain(os, b.domain);
  emit_carrier(os, b.carrier);
  for (Index x = 0; x < b.carrier.size(); ++x) {
    os << "row " << b.carrier.label(x) << " :";
    for (Index g = 0; g < b.domain.size(); ++g) os << ' ' << b.carrier.label(b.cells[g][x]);
    os << '\n';
  }
  return os.str();
}

std::string emit(const Structure& s) {
  return std::visit([](const auto& v) { return emit(v); }, s);
}

}  // namespace genaff
