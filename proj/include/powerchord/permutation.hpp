#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace powerchord {

/**
 * A bijection of {0, ..., m-1}. Products compose left to right:
 * (a * b)(x) = b(a(x)), the convention used by GAP and most permutation
 * group literature.
 */
class Permutation {
public:
  using Point = std::uint16_t;

  Permutation() = default;

  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) { validate(); }

  static Permutation identity(std::size_t degree) {
    std::vector<Point> im(degree);
    for (std::size_t i = 0; i < degree; ++i)
      im[i] = static_cast<Point>(i);
    return Permutation(std::move(im));
  }

  /// Build from disjoint cycles, e.g. {{0,1,2},{3,4}}.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>> &cycles) {
    if (degree > 0xffff)
      throw InvalidInput("permutation degree too large");
    std::vector<Point> im(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i)
      im[i] = static_cast<Point>(i);
    for (const auto &cyc : cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const std::size_t a = cyc[i];
        const std::size_t b = cyc[(i + 1) % cyc.size()];
        if (a >= degree || b >= degree)
          throw InvalidInput("cycle point out of range: " + std::to_string(std::max(a, b)));
        if (seen[a])
          throw InvalidInput("cycles are not disjoint at point " + std::to_string(a));
        seen[a] = true;
        im[a] = static_cast<Point>(b);
      }
    }
    return Permutation(std::move(im));
  }

  /**
   * Parse cycle notation such as "(0 1 2)(3 4)" or "(1,2,3)(4,5)".
   * `base` is subtracted from every point, so 1-based text uses base = 1.
   * "()" is the identity.
   */
  static Permutation parse(std::string_view text, std::size_t degree, std::size_t base = 0) {
    std::vector<std::vector<std::size_t>> cycles;
    std::size_t i = 0;
    auto skip_ws = [&] {
      while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
        ++i;
    };
    skip_ws();
    while (i < text.size()) {
      if (text[i] != '(')
        throw InvalidInput("expected '(' in cycle notation: " + std::string(text));
      ++i;
      std::vector<std::size_t> cyc;
      for (;;) {
        skip_ws();
        if (i < text.size() && text[i] == ')') {
          ++i;
          break;
        }
        if (i < text.size() && text[i] == ',') {
          ++i;
          continue;
        }
        if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw InvalidInput("malformed cycle notation: " + std::string(text));
        std::size_t v = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          v = v * 10 + static_cast<std::size_t>(text[i++] - '0');
        if (v < base)
          throw InvalidInput("point below base in cycle notation: " + std::string(text));
        cyc.push_back(v - base);
      }
      if (!cyc.empty())
        cycles.push_back(std::move(cyc));
      skip_ws();
    }
    return from_cycles(degree, cycles);
  }

  std::size_t degree() const { return images_.size(); }
  Point operator[](std::size_t x) const { return images_[x]; }
  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  /// Apply this, then `rhs`.
  Permutation operator*(const Permutation &rhs) const {
    if (rhs.degree() != degree())
      throw InvalidInput("degree mismatch in permutation product");
    std::vector<Point> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      im[i] = rhs.images_[images_[i]];
    Permutation out;
    out.images_ = std::move(im);
    return out;
  }

  Permutation inverse() const {
    std::vector<Point> im(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      im[images_[i]] = static_cast<Point>(i);
    Permutation out;
    out.images_ = std::move(im);
    return out;
  }

  bool is_even() const {
    std::vector<bool> seen(images_.size(), false);
    std::size_t transpositions = 0;
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i])
        continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        ++len;
      }
      transpositions += len - 1;
    }
    return transpositions % 2 == 0;
  }

  /// Disjoint cycle notation with fixed points omitted; "()" for the identity.
  std::string to_cycle_string(std::size_t base = 0) const {
    std::string out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i] || images_[i] == i)
        continue;
      out += '(';
      bool first = true;
      for (std::size_t j = i; !seen[j]; j = images_[j]) {
        seen[j] = true;
        if (!first)
          out += ' ';
        out += std::to_string(j + base);
        first = false;
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &, const Permutation &) = default;

private:
  void validate() const {
    std::vector<bool> seen(images_.size(), false);
    for (Point v : images_) {
      if (v >= images_.size() || seen[v])
        throw InvalidInput("images do not form a permutation");
      seen[v] = true;
    }
  }

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept {
    const auto &im = p.images();
    return std::hash<std::u16string_view>{}(
        std::u16string_view(reinterpret_cast<const char16_t *>(im.data()), im.size()));
  }
};

} // namespace powerchord
