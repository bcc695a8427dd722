#pragma once

// Algebra descriptors and their little grammar:
//   rn:<n>    componentwise product on R^n
//   sym:<n>   symmetric n x n real matrices, x∘y = (xy+yx)/2
//   spin:<n>  spin factor R ⊕ R^{n-1}, n >= 2
//   sum(<d>,<d>,...)  direct sum, at least two summands

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "symcone/errors.hpp"

namespace symcone {

enum class AlgebraKind { Componentwise, RealSymmetric, SpinFactor, DirectSum };

struct AlgebraDescriptor {
  AlgebraKind kind = AlgebraKind::Componentwise;
  int n = 0;  // size parameter; unused for DirectSum
  std::vector<AlgebraDescriptor> summands;

  static AlgebraDescriptor componentwise(int n) {
    if (n < 1) throw Error("componentwise algebra needs n >= 1");
    return {AlgebraKind::Componentwise, n, {}};
  }
  static AlgebraDescriptor real_symmetric(int n) {
    if (n < 1) throw Error("symmetric-matrix algebra needs n >= 1");
    return {AlgebraKind::RealSymmetric, n, {}};
  }
  static AlgebraDescriptor spin_factor(int n) {
    if (n < 2) throw Error("spin factor needs n >= 2");
    return {AlgebraKind::SpinFactor, n, {}};
  }
  static AlgebraDescriptor direct_sum(std::vector<AlgebraDescriptor> parts) {
    if (parts.size() < 2) throw Error("direct sum needs at least two summands");
    return {AlgebraKind::DirectSum, 0, std::move(parts)};
  }

  int dim() const {
    switch (kind) {
      case AlgebraKind::Componentwise: return n;
      case AlgebraKind::RealSymmetric: return n * (n + 1) / 2;
      case AlgebraKind::SpinFactor: return n;
      case AlgebraKind::DirectSum: {
        int d = 0;
        for (const auto& s : summands) d += s.dim();
        return d;
      }
    }
    return 0;
  }

  int rank() const {
    switch (kind) {
      case AlgebraKind::Componentwise: return n;
      case AlgebraKind::RealSymmetric: return n;
      case AlgebraKind::SpinFactor: return 2;
      case AlgebraKind::DirectSum: {
        int r = 0;
        for (const auto& s : summands) r += s.rank();
        return r;
      }
    }
    return 0;
  }

  friend bool operator==(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    return a.kind == b.kind && a.n == b.n && a.summands == b.summands;
  }
  friend bool operator!=(const AlgebraDescriptor& a, const AlgebraDescriptor& b) {
    return !(a == b);
  }
};

inline std::string to_string(const AlgebraDescriptor& d) {
  switch (d.kind) {
    case AlgebraKind::Componentwise: return "rn:" + std::to_string(d.n);
    case AlgebraKind::RealSymmetric: return "sym:" + std::to_string(d.n);
    case AlgebraKind::SpinFactor: return "spin:" + std::to_string(d.n);
    case AlgebraKind::DirectSum: {
      std::string s = "sum(";
      for (std::size_t i = 0; i < d.summands.size(); ++i) {
        if (i) s += ",";
        s += to_string(d.summands[i]);
      }
      return s + ")";
    }
  }
  return "";
}

// A leaf block inside a (possibly nested) direct sum: the leaf descriptor and
// its coordinate offset in the flattened element.
struct LeafBlock {
  int offset;
  AlgebraDescriptor leaf;
};

namespace detail {
inline void collect_leaves(const AlgebraDescriptor& d, int& offset,
                           std::vector<LeafBlock>& out) {
  if (d.kind == AlgebraKind::DirectSum) {
    for (const auto& s : d.summands) collect_leaves(s, offset, out);
  } else {
    out.push_back({offset, d});
    offset += d.dim();
  }
}
}  // namespace detail

inline std::vector<LeafBlock> leaf_blocks(const AlgebraDescriptor& d) {
  std::vector<LeafBlock> out;
  int offset = 0;
  detail::collect_leaves(d, offset, out);
  return out;
}

namespace detail {

struct DescriptorParser {
  std::string_view text;
  std::size_t pos = 0;

  char peek() const { return pos < text.size() ? text[pos] : '\0'; }

  bool consume(std::string_view word) {
    if (text.substr(pos, word.size()) == word) {
      pos += word.size();
      return true;
    }
    return false;
  }

  int parse_count(const char* what) {
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) throw ParseError("size parameter too large", start);
      ++pos;
    }
    if (pos == start) throw ParseError(std::string("expected a number after '") + what + "'", pos);
    return static_cast<int>(value);
  }

  AlgebraDescriptor parse_term() {
    const std::size_t start = pos;
    if (consume("rn:")) {
      const int n = parse_count("rn:");
      if (n < 1) throw ParseError("rn needs n >= 1", start);
      return AlgebraDescriptor::componentwise(n);
    }
    if (consume("sym:")) {
      const int n = parse_count("sym:");
      if (n < 1) throw ParseError("sym needs n >= 1", start);
      return AlgebraDescriptor::real_symmetric(n);
    }
    if (consume("spin:")) {
      const int n = parse_count("spin:");
      if (n < 2) throw ParseError("spin needs n >= 2", start);
      return AlgebraDescriptor::spin_factor(n);
    }
    if (consume("sum(")) {
      std::vector<AlgebraDescriptor> parts;
      parts.push_back(parse_term());
      while (peek() == ',') {
        ++pos;
        parts.push_back(parse_term());
      }
      if (peek() != ')') throw ParseError("expected ',' or ')' in sum(...)", pos);
      ++pos;
      if (parts.size() < 2) throw ParseError("sum(...) needs at least two summands", start);
      return AlgebraDescriptor::direct_sum(std::move(parts));
    }
    throw ParseError("expected 'rn:', 'sym:', 'spin:' or 'sum('", pos);
  }
};

}  // namespace detail

inline AlgebraDescriptor parse_descriptor(std::string_view text) {
  detail::DescriptorParser p{text};
  AlgebraDescriptor d = p.parse_term();
  if (p.pos != text.size()) throw ParseError("trailing characters after descriptor", p.pos);
  return d;
}

}  // namespace symcone
