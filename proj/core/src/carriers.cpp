#include "genaff/carriers.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "genaff/error.hpp"

namespace genaff {

struct FiniteSet::Data {
  std::string name;
  std::vector<std::string> labels;
  std::unordered_map<std::string, Index> lookup;
};

bool is_valid_label(std::string_view label) {
  if (label.empty() || label == ":" || label.front() == '#') return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
  });
}

FiniteSet::FiniteSet(std::string name, std::vector<std::string> labels, std::size_t cap) {
  if (labels.empty()) throw PreconditionError("carrier '" + name + "' is empty");
  if (labels.size() > cap) {
    throw PreconditionError("carrier '" + name + "' has " + std::to_string(labels.size()) +
                            " elements, above the cap of " + std::to_string(cap));
  }
  auto data = std::make_shared<Data>();
  data->name = std::move(name);
  data->lookup.reserve(labels.size());
  for (Index i = 0; i < labels.size(); ++i) {
    if (!is_valid_label(labels[i])) {
      throw PreconditionError("invalid element label '" + labels[i] + "'");
    }
    if (!data->lookup.emplace(labels[i], i).second) {
      throw PreconditionError("duplicate element label '" + labels[i] + "'");
    }
  }
  data->labels = std::move(labels);
  data_ = std::move(data);
}

FiniteSet FiniteSet::range(std::string name, std::size_t n, std::size_t cap) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return FiniteSet(std::move(name), std::move(labels), cap);
}

const std::string& FiniteSet::name() const { return data_->name; }
std::size_t FiniteSet::size() const { return data_->labels.size(); }
const std::string& FiniteSet::label(Index i) const { return data_->labels.at(i); }
const std::vector<std::string>& FiniteSet::labels() const { return data_->labels; }

std::optional<Index> FiniteSet::find(std::string_view label) const {
  auto it = data_->lookup.find(std::string(label));
  if (it == data_->lookup.end()) return std::nullopt;
  return it->second;
}

Index FiniteSet::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw PreconditionError("'" + std::string(label) + "' is not an element of '" + name() + "'");
}

FiniteSet FiniteSet::renamed(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  FiniteSet copy = *this;
  copy.data_ = std::move(data);
  return copy;
}

bool FiniteSet::operator==(const FiniteSet& other) const {
  return data_ == other.data_ || data_->labels == other.data_->labels;
}

Endofunction::Endofunction(FiniteSet carrier, std::vector<Index> images)
    : carrier_(std::move(carrier)), images_(std::move(images)), bijective_(false) {
  const std::size_t n = carrier_.size();
  if (images_.size() != n) {
    throw PreconditionError("endofunction on '" + carrier_.name() + "' needs " +
                            std::to_string(n) + " images, got " +
                            std::to_string(images_.size()));
  }
  std::vector<bool> hit(n, false);
  std::size_t distinct = 0;
  for (Index y : images_) {
    if (y >= n) throw PreconditionError("image index out of range for '" + carrier_.name() + "'");
    if (!hit[y]) {
      hit[y] = true;
      ++distinct;
    }
  }
  bijective_ = distinct == n;
}

bool Endofunction::operator==(const Endofunction& other) const {
  return images_ == other.images_ && carrier_ == other.carrier_;
}

std::strong_ordering Endofunction::operator<=>(const Endofunction& other) const {
  return images_ <=> other.images_;
}

std::string Endofunction::str() const {
  std::ostringstream out;
  out << '[';
  for (Index x = 0; x < images_.size(); ++x) {
    if (x > 0) out << ", ";
    out << carrier_.label(x) << "->" << carrier_.label(images_[x]);
  }
  out << ']';
  return out.str();
}

std::size_t EndofunctionHash::operator()(const Endofunction& f) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Index y : f.images()) {
    h ^= y + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

Endofunction compose(const Endofunction& f, const Endofunction& g) {
  if (!(f.carrier() == g.carrier())) {
    throw PreconditionError("cannot compose maps on '" + f.carrier().name() + "' and '" +
                            g.carrier().name() + "'");
  }
  std::vector<Index> images(g.size());
  for (Index x = 0; x < images.size(); ++x) images[x] = f(g(x));
  return Endofunction(f.carrier(), std::move(images));
}

Endofunction identity_map(const FiniteSet& carrier) {
  std::vector<Index> images(carrier.size());
  for (Index x = 0; x < images.size(); ++x) images[x] = x;
  return Endofunction(carrier, std::move(images));
}

bool is_identity(const Endofunction& f) {
  for (Index x = 0; x < f.size(); ++x) {
    if (f(x) != x) return false;
  }
  return true;
}

bool is_bijection(const Endofunction& f) { return f.bijective(); }

Endofunction inverse(const Endofunction& f) {
  if (!f.bijective()) {
    throw PreconditionError("inverse of a non-bijective map " + f.str());
  }
  std::vector<Index> images(f.size());
  for (Index x = 0; x < images.size(); ++x) images[f(x)] = x;
  return Endofunction(f.carrier(), std::move(images));
}

std::optional<Endofunction> reversal_witness(const Endofunction& f) {
  // φ must send each y to a preimage; take the least one and test both sides.
  const std::size_t n = f.size();
  constexpr Index kNone = static_cast<Index>(-1);
  std::vector<Index> phi(n, kNone);
  for (Index x = n; x-- > 0;) phi[f(x)] = x;
  if (std::find(phi.begin(), phi.end(), kNone) != phi.end()) return std::nullopt;
  for (Index x = 0; x < n; ++x) {
    if (f(phi[x]) != x || phi[f(x)] != x) return std::nullopt;
  }
  return Endofunction(f.carrier(), std::move(phi));
}

std::optional<Index> unsolvable_target(const Endofunction& f) {
  std::vector<std::size_t> solutions(f.size(), 0);
  for (Index x = 0; x < f.size(); ++x) ++solutions[f(x)];
  for (Index y = 0; y < f.size(); ++y) {
    if (solutions[y] != 1) return y;
  }
  return std::nullopt;
}

std::vector<Endofunction> all_endofunctions(const FiniteSet& carrier) {
  const std::size_t n = carrier.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= n;
    if (total > 1'000'000) throw PreconditionError("too many endofunctions to enumerate");
  }
  std::vector<Endofunction> out;
  out.reserve(total);
  std::vector<Index> images(n, 0);
  for (std::size_t k = 0; k < total; ++k) {
    out.emplace_back(carrier, images);
    for (std::size_t pos = n; pos-- > 0;) {
      if (++images[pos] < n) break;
      images[pos] = 0;
    }
  }
  return out;
}

}  // namespace genaff
