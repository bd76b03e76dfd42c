#include "frucht/codec.hpp"

#include <cmath>

#include "frucht/errors.hpp"

namespace frucht {

std::string CodeWord::str() const {
  std::string s;
  s.reserve(bits.size());
  for (const auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

CodeWord CodeWord::from_string(const std::string& s) {
  if (s.empty()) throw InvalidInputError("empty code word");
  CodeWord w;
  w.bits.reserve(s.size());
  for (const char c : s) {
    if (c != '0' && c != '1')
      throw InvalidInputError("code word must be binary, got: " + s);
    w.bits.push_back(c == '1' ? 1 : 0);
  }
  return w;
}

BitOracle BitOracle::from_word(const CodeWord& w) {
  BitOracle o([bits = w.bits](std::uint64_t i) {
    return i < bits.size() ? static_cast<int>(bits[i]) : 0;
  });
  o.word_ = w;
  return o;
}

BitOracle BitOracle::constant(int bit) {
  return BitOracle([bit](std::uint64_t) { return bit ? 1 : 0; });
}

HilbertPoint HilbertPoint::from_coordinates(std::vector<Rational> coords) {
  for (const auto& c : coords)
    if (!c.in_unit_interval())
      throw OutOfRangeError("coordinate outside [0, 1]: " + c.str());
  return HilbertPoint(
      [cs = std::move(coords)](std::uint64_t j) {
        return j < cs.size() ? cs[j] : Rational();
      });
}

std::vector<CodeWord> finite_psi(const FiniteGroup& g) {
  const int order = g.order();
  int width = 1;
  while ((1 << width) < order) ++width;  // = max(1, ceil(log2 order))
  std::vector<CodeWord> words(order);
  for (int i = 0; i < order; ++i) {
    CodeWord& w = words[i];
    w.bits.reserve(width + 1);
    for (int b = width - 1; b >= 0; --b)
      w.bits.push_back(static_cast<std::uint8_t>((i >> b) & 1));
    w.bits.push_back(0);  // terminator
  }
  return words;
}

std::uint64_t cantor_pair(std::uint64_t m, std::uint64_t n) {
  const unsigned __int128 s = static_cast<unsigned __int128>(m) + n;
  const unsigned __int128 p = s * (s + 1) / 2 + n;
  if (p > ~static_cast<std::uint64_t>(0))
    throw OutOfRangeError("cantor_pair overflows 64 bits");
  return static_cast<std::uint64_t>(p);
}

std::pair<std::uint64_t, std::uint64_t> cantor_unpair(std::uint64_t p) {
  // w = floor((sqrt(8p + 1) - 1) / 2), corrected to exactness.
  const unsigned __int128 s = static_cast<unsigned __int128>(p) * 8 + 1;
  std::uint64_t r = static_cast<std::uint64_t>(
      std::sqrt(static_cast<long double>(s)));
  while (static_cast<unsigned __int128>(r) * r > s) --r;
  while (static_cast<unsigned __int128>(r + 1) * (r + 1) <= s) ++r;
  const std::uint64_t w = (r - 1) / 2;
  const std::uint64_t t = w * (w + 1) / 2;
  const std::uint64_t n = p - t;
  return {w - n, n};
}

int xi_digit(const Rational& x, std::uint64_t i) {
  if (!x.in_unit_interval())
    throw OutOfRangeError("xi_digit argument outside [0, 1]: " + x.str());
  // Long division, one digit per step; remainders stay below the
  // denominator so no step can overflow.  When the division terminates the
  // expansion would end "...1 0 0 0"; the convention here rewrites that
  // tail as "...0 1 1 1" (and maps 1 to all ones), so the final emitted 1
  // flips to 0 and everything after it reads 1.
  std::uint64_t r = static_cast<std::uint64_t>(x.num());
  const std::uint64_t q = static_cast<std::uint64_t>(x.den());
  for (std::uint64_t s = 0;; ++s) {
    r <<= 1;
    int d = 0;
    if (r >= q) {
      d = 1;
      r -= q;
    }
    if (d == 1 && r == 0) return s == i ? 0 : 1;
    if (s == i) return d;
  }
}

BitOracle zeta(PlaneOracle a) {
  return BitOracle([a = std::move(a)](std::uint64_t p) {
    const auto [m, n] = cantor_unpair(p);
    return a(m, n);
  });
}

int psi_hat(const std::function<HilbertPoint(int)>& gamma, int g,
            std::uint64_t p) {
  const auto [i, j] = cantor_unpair(p);
  return xi_digit(gamma(g).coordinate(j), i);
}

}  // namespace frucht
