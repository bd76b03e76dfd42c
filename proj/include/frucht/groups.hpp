#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frucht {

// Finite group given by a validated Cayley table.  Element handles are the
// row/column indices 0..order-1; validation relabels so that 0 is always the
// identity.  Instances are immutable after construction.
class FiniteGroup {
 public:
  // Checks the table is a Latin square (first violating cell named), has a
  // two-sided identity, and is associative: exhaustively for order <= 64,
  // on 10^4 deterministic sampled triples above that.  Relabels the identity
  // to index 0 when necessary.
  static FiniteGroup validate_cayley(const std::vector<std::vector<int>>& raw,
                                     std::string name = "custom");

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return 0; }
  int mul(int g, int h) const;
  int inv(int g) const;
  bool is_abelian() const;
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

 private:
  FiniteGroup() = default;
  void check_handle(int g) const;

  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
};

// Catalog families.  Every constructor routes its table through
// validate_cayley, so catalog outputs always satisfy the group axioms.
FiniteGroup catalog_cyclic(int n);            // Z_n, 1 <= n <= 128
FiniteGroup catalog_dihedral(int n);          // order 2n, 1 <= n <= 64
FiniteGroup catalog_symmetric(int n);         // S_n, 1 <= n <= 5
FiniteGroup catalog_quaternion8();            // Q8
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

// Parses a catalog spec string: "cyclic:6", "dihedral:4", "symmetric:3",
// "quaternion8", or "product:<spec>,<spec>[,...]" (left-folded).
FiniteGroup catalog(const std::string& spec);

// The named verification battery: all groups of order <= max_order that the
// stock checks run over.  For max_order = 8 this is the full list of 14:
// trivial, Z2..Z8, Z2^2, Z2^3, Z2xZ4, S3, D4, Q8.
std::vector<std::pair<std::string, FiniteGroup>> standard_battery(
    int max_order = 8);

}  // namespace frucht
