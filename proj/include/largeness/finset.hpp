#pragma once

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "largeness/error.hpp"
#include "largeness/nat.hpp"

namespace largeness {

/// A finite set of naturals, stored as a strictly increasing sequence.
class FinSet {
 public:
  using value_type = Nat;
  using const_iterator = std::vector<Nat>::const_iterator;

  FinSet() = default;

  /// Requires strictly increasing input.
  explicit FinSet(std::vector<Nat> elements) : elements_(std::move(elements)) {
    for (std::size_t i = 1; i < elements_.size(); ++i)
      require(elements_[i - 1] < elements_[i], ErrorCode::NonCanonical,
              "set elements must be strictly increasing");
    require(elements_.empty() || elements_.front() >= 0, ErrorCode::NonCanonical,
            "negative element");
  }

  FinSet(std::initializer_list<long long> elements)
      : FinSet(std::vector<Nat>(elements.begin(), elements.end())) {}

  /// Any order, duplicates allowed.
  static FinSet of(std::vector<Nat> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    return FinSet(std::move(elements));
  }

  /// {lo, lo+1, ..., hi}; empty when hi < lo.
  static FinSet interval(const Nat& lo, const Nat& hi) {
    std::vector<Nat> out;
    for (Nat x = lo; x <= hi; ++x) out.push_back(x);
    return FinSet(std::move(out));
  }

  const std::vector<Nat>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const_iterator begin() const noexcept { return elements_.begin(); }
  const_iterator end() const noexcept { return elements_.end(); }
  const Nat& operator[](std::size_t i) const { return elements_[i]; }

  const Nat& min() const {
    require(!empty(), ErrorCode::EmptySet, "min of the empty set");
    return elements_.front();
  }
  const Nat& max() const {
    require(!empty(), ErrorCode::EmptySet, "max of the empty set");
    return elements_.back();
  }

  bool contains(const Nat& x) const { return std::binary_search(begin(), end(), x); }

  bool is_subset_of(const FinSet& other) const {
    return std::includes(other.begin(), other.end(), begin(), end());
  }

  FinSet without_max() const {
    if (empty()) return {};
    return FinSet(std::vector<Nat>(begin(), end() - 1));
  }

  FinSet without_min() const {
    if (empty()) return {};
    return FinSet(std::vector<Nat>(begin() + 1, end()));
  }

  FinSet prefix(std::size_t n) const {
    n = std::min(n, size());
    return FinSet(std::vector<Nat>(begin(), begin() + static_cast<std::ptrdiff_t>(n)));
  }

  FinSet suffix_from(std::size_t i) const {
    i = std::min(i, size());
    return FinSet(std::vector<Nat>(begin() + static_cast<std::ptrdiff_t>(i), end()));
  }

  FinSet with(const Nat& x) const {
    std::vector<Nat> out = elements_;
    out.insert(std::upper_bound(out.begin(), out.end(), x), x);
    return of(std::move(out));
  }

  friend FinSet set_union(const FinSet& a, const FinSet& b) {
    std::vector<Nat> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FinSet(std::move(out));
  }

  friend FinSet set_difference(const FinSet& a, const FinSet& b) {
    std::vector<Nat> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return FinSet(std::move(out));
  }

  /// A < B: every element of A lies below every element of B.
  friend bool separated(const FinSet& a, const FinSet& b) {
    return a.empty() || b.empty() || a.max() < b.min();
  }

  friend bool operator==(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Nat> elements_;
};

inline std::string to_string(const FinSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += s[i].str();
  }
  return out + "}";
}

inline std::ostream& operator<<(std::ostream& os, const FinSet& s) { return os << to_string(s); }

/// Parses "{3,5,6}"; elements must already be strictly increasing.
inline FinSet parse_finset(std::string_view text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip();
  if (pos >= text.size() || text[pos] != '{') throw ParseError(pos, "expected '{'");
  ++pos;
  std::vector<Nat> out;
  skip();
  if (pos < text.size() && text[pos] == '}') {
    ++pos;
  } else {
    while (true) {
      skip();
      const std::size_t start = pos;
      while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
      if (start == pos) throw ParseError(pos, "expected a natural number");
      Nat x(std::string(text.substr(start, pos - start)));
      if (!out.empty() && !(out.back() < x))
        throw ParseError(start, "set elements must be strictly increasing");
      out.push_back(std::move(x));
      skip();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      if (pos < text.size() && text[pos] == '}') {
        ++pos;
        break;
      }
      throw ParseError(pos, "expected ',' or '}'");
    }
  }
  skip();
  if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");
  return FinSet(std::move(out));
}

}  // namespace largeness
