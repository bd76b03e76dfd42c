#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frucht/groups.hpp"
#include "frucht/rational.hpp"

namespace frucht {

// Finite binary word.  When a word labels a gadget its last bit is a
// terminator 0 (materialization enforces this); viewed as an infinite
// sequence, positions past the end read as 0.
struct CodeWord {
  std::vector<std::uint8_t> bits;

  std::size_t length() const { return bits.size(); }
  int bit(std::uint64_t i) const {
    return i < bits.size() ? static_cast<int>(bits[i]) : 0;
  }
  bool ends_in_terminator() const { return !bits.empty() && bits.back() == 0; }

  std::string str() const;
  static CodeWord from_string(const std::string& s);  // "010" etc.

  bool operator==(const CodeWord&) const = default;
  bool operator<(const CodeWord& o) const { return bits < o.bits; }
};

// A point of Cantor space: a total deterministic bit function on N.
class BitOracle {
 public:
  explicit BitOracle(std::function<int(std::uint64_t)> eval)
      : eval_(std::move(eval)) {}

  static BitOracle from_word(const CodeWord& w);  // word bits, then zeros
  static BitOracle constant(int bit);

  int operator()(std::uint64_t i) const { return eval_(i) ? 1 : 0; }

  // The finite descriptor, when this oracle was built from one.
  const std::optional<CodeWord>& word() const { return word_; }

 private:
  std::function<int(std::uint64_t)> eval_;
  std::optional<CodeWord> word_;
};

// A bit array indexed by N x N.
class PlaneOracle {
 public:
  explicit PlaneOracle(std::function<int(std::uint64_t, std::uint64_t)> eval)
      : eval_(std::move(eval)) {}
  int operator()(std::uint64_t m, std::uint64_t n) const {
    return eval_(m, n) ? 1 : 0;
  }

 private:
  std::function<int(std::uint64_t, std::uint64_t)> eval_;
};

// A point of the Hilbert cube: coordinates are exact rationals in [0, 1].
class HilbertPoint {
 public:
  explicit HilbertPoint(std::function<Rational(std::uint64_t)> coord)
      : coord_(std::move(coord)) {}

  // Finite list of coordinates, zero tail.  Coordinates are range-checked
  // immediately; the functional constructor is checked at evaluation time.
  static HilbertPoint from_coordinates(std::vector<Rational> coords);

  Rational coordinate(std::uint64_t j) const { return coord_(j); }

 private:
  std::function<Rational(std::uint64_t)> coord_;
};

// Code assignment for a finite group: element index i maps to the L-bit
// binary expansion of i (most significant bit first, L = max(1, ceil(log2
// order))) followed by a terminator 0.  Words are pairwise distinct and all
// share length L + 1.
std::vector<CodeWord> finite_psi(const FiniteGroup& g);

// Cantor pairing (m, n) -> (m+n)(m+n+1)/2 + n, a bijection N x N -> N.
std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t n);
std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t p);

// The i-th binary digit (i from 0) of x in [0, 1], where dyadic rationals in
// (0, 1] take the expansion ending in infinitely many 1s and 0 is all zeros.
// Throws OutOfRange for x outside [0, 1].
int xi_digit(const Rational& x, std::uint64_t i);

// Flattens a plane oracle along the Cantor pairing: zeta(a)(pair(m, n)) =
// a(m, n).
BitOracle zeta(PlaneOracle a);

// Composite code for an element: with (i, j) = cantor_unpair(p), the p-th
// bit is the i-th binary digit of coordinate j of gamma(g).
int psi_hat(const std::function<HilbertPoint(int)>& gamma, int g,
            std::uint64_t p);

}  // namespace frucht
