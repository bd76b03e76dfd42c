#pragma once

#include <cstdint>
#include <vector>

namespace frucht {

// Computable groups: element handles with a finite canonical encoding,
// total multiplication/inverse, and decidable equality on handles.  Any
// struct with the same member shape works wherever these are accepted.

// Finite-support binary sequences under pointwise XOR.  Canonical handle:
// a bit vector with no trailing zeros; the identity is the empty vector.
struct XorGroup {
  using Handle = std::vector<std::uint8_t>;

  static Handle canonical(Handle h) {
    while (!h.empty() && h.back() == 0) h.pop_back();
    return h;
  }

  Handle identity() const { return {}; }

  Handle mul(const Handle& a, const Handle& b) const {
    Handle out(a.size() > b.size() ? a : b);
    const Handle& shorter = a.size() > b.size() ? b : a;
    for (std::size_t i = 0; i < shorter.size(); ++i) out[i] ^= shorter[i];
    return canonical(std::move(out));
  }

  Handle inv(const Handle& a) const { return a; }  // every element is an involution

  bool equal(const Handle& a, const Handle& b) const { return a == b; }
};

// 64-bit integers under wrapping addition (the group Z/2^64, with handles
// the canonical signed representatives).
struct WrapIntGroup {
  using Handle = std::int64_t;

  Handle identity() const { return 0; }

  Handle mul(Handle a, Handle b) const {
    return static_cast<Handle>(static_cast<std::uint64_t>(a) +
                               static_cast<std::uint64_t>(b));
  }

  Handle inv(Handle a) const {
    return static_cast<Handle>(~static_cast<std::uint64_t>(a) + 1);
  }

  bool equal(Handle a, Handle b) const { return a == b; }
};

}  // namespace frucht
