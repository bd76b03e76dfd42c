#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "frucht/errors.hpp"

namespace frucht {

// Exact rational number p/q, stored normalized: q > 0 and gcd(|p|, q) = 1.
// Only what the binary-digit extraction needs: construction, comparison and
// parsing.  All arithmetic used in digit extraction works on num()/den()
// directly, so no overflow-prone operator set is provided.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}

  Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
    if (den_ == 0) throw InvalidInputError("rational with zero denominator");
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  // Accepts "p/q" or a bare integer "p"; rejects trailing garbage.
  static Rational parse(const std::string& text) {
    const auto parse_int = [&text](const std::string& part) {
      std::size_t pos = 0;
      std::int64_t value = 0;
      try {
        value = std::stoll(part, &pos);
      } catch (const std::invalid_argument&) {
        throw InvalidInputError("cannot parse rational: " + text);
      } catch (const std::out_of_range&) {
        throw InvalidInputError("rational out of 64-bit range: " + text);
      }
      if (pos != part.size())
        throw InvalidInputError("cannot parse rational: " + text);
      return value;
    };
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)),
                    parse_int(text.substr(slash + 1)));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  bool operator==(const Rational&) const = default;

  bool in_unit_interval() const { return num_ >= 0 && num_ <= den_; }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }

 private:
  std::int64_t num_;
  std::int64_t den_;
};

}  // namespace frucht
