#include "frucht/groups.hpp"

#include <algorithm>
#include <random>

#include "frucht/errors.hpp"

namespace frucht {
namespace {

constexpr int kExhaustiveAssociativityLimit = 64;
constexpr int kSampledTriples = 10000;
constexpr std::uint64_t kValidationSeed = 0x517ec1a1u;

// Applies the relabeling sigma to the table: new[sigma(i)][sigma(j)] =
// sigma(old[i][j]).
std::vector<std::vector<int>> relabel(const std::vector<std::vector<int>>& t,
                                      const std::vector<int>& sigma) {
  const int n = static_cast<int>(t.size());
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[sigma[i]][sigma[j]] = sigma[t[i][j]];
  return out;
}

void check_associative_triple(const std::vector<std::vector<int>>& t, int a,
                              int b, int c) {
  if (t[t[a][b]][c] != t[a][t[b][c]]) {
    throw NotAssociativeError("associativity fails at triple (" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              ", " + std::to_string(c) + ")");
  }
}

std::vector<std::vector<int>> product_table(const FiniteGroup& a,
                                            const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::vector<int>> t(na * nb, std::vector<int>(na * nb, 0));
  for (int i = 0; i < na * nb; ++i)
    for (int j = 0; j < na * nb; ++j)
      t[i][j] = a.mul(i / nb, j / nb) * nb + b.mul(i % nb, j % nb);
  return t;
}

// Lexicographic rank <-> permutation helpers for the symmetric family.
std::vector<int> nth_permutation(int n, long rank) {
  std::vector<int> pool(n), out;
  for (int i = 0; i < n; ++i) pool[i] = i;
  long fact = 1;
  for (int i = 2; i < n; ++i) fact *= i;
  for (int i = n - 1; i >= 1; --i) {
    const long idx = rank / fact;
    rank %= fact;
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
    fact /= i;
  }
  out.push_back(pool[0]);
  return out;
}

long permutation_rank(const std::vector<int>& p) {
  const int n = static_cast<int>(p.size());
  long rank = 0, fact = 1;
  for (int i = 2; i <= n - 1; ++i) fact *= i;
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i;
  for (int i = 0; i < n - 1; ++i) {
    const auto it = std::find(pool.begin(), pool.end(), p[i]);
    rank += (it - pool.begin()) * fact;
    pool.erase(it);
    fact /= std::max(1, n - 1 - i);
  }
  return rank;
}

}  // namespace

FiniteGroup FiniteGroup::validate_cayley(
    const std::vector<std::vector<int>>& raw, std::string name) {
  const int n = static_cast<int>(raw.size());
  if (n == 0) throw InvalidInputError("empty Cayley table");
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(raw[i].size()) != n)
      throw InvalidInputError("Cayley table row " + std::to_string(i) +
                              " has length " + std::to_string(raw[i].size()) +
                              ", expected " + std::to_string(n));
    for (int j = 0; j < n; ++j)
      if (raw[i][j] < 0 || raw[i][j] >= n)
        throw InvalidInputError("Cayley entry out of range at cell (" +
                                std::to_string(i) + ", " + std::to_string(j) +
                                ")");
  }

  // Latin square: every row and every column is a permutation.
  for (int i = 0; i < n; ++i) {
    std::vector<char> seen(n, 0);
    for (int j = 0; j < n; ++j) {
      if (seen[raw[i][j]])
        throw NotLatinSquareError("repeated value in row " + std::to_string(i) +
                                  " at cell (" + std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
      seen[raw[i][j]] = 1;
    }
  }
  for (int j = 0; j < n; ++j) {
    std::vector<char> seen(n, 0);
    for (int i = 0; i < n; ++i) {
      if (seen[raw[i][j]])
        throw NotLatinSquareError("repeated value in column " +
                                  std::to_string(j) + " at cell (" +
                                  std::to_string(i) + ", " +
                                  std::to_string(j) + ")");
      seen[raw[i][j]] = 1;
    }
  }

  // Two-sided identity.
  int e = -1;
  for (int i = 0; i < n && e < 0; ++i) {
    bool ok = true;
    for (int j = 0; j < n && ok; ++j)
      ok = raw[i][j] == j && raw[j][i] == j;
    if (ok) e = i;
  }
  if (e < 0) throw NoIdentityError("no two-sided identity element");

  // Associativity: exhaustive for small orders, sampled deterministically
  // above the cutoff.
  if (n <= kExhaustiveAssociativityLimit) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c) check_associative_triple(raw, a, b, c);
  } else {
    std::mt19937_64 rng(kValidationSeed);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int s = 0; s < kSampledTriples; ++s)
      check_associative_triple(raw, pick(rng), pick(rng), pick(rng));
  }

  FiniteGroup g;
  g.name_ = std::move(name);
  if (e == 0) {
    g.table_ = raw;
  } else {
    std::vector<int> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = i;
    std::swap(sigma[0], sigma[e]);
    g.table_ = relabel(raw, sigma);
  }

  g.inverse_.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      if (g.table_[i][j] == 0) {
        if (g.table_[j][i] != 0)
          // One-sided inverse: witnesses non-associativity that sampling
          // missed.  (j', i, j) with i*j = e and j'*i = e violates it.
          throw NotAssociativeError(
              "associativity fails: one-sided inverse at element " +
              std::to_string(i));
        g.inverse_[i] = j;
        break;
      }
  }
  return g;
}

void FiniteGroup::check_handle(int g) const {
  if (g < 0 || g >= order())
    throw InvalidHandleError("element handle " + std::to_string(g) +
                             " outside 0.." + std::to_string(order() - 1));
}

int FiniteGroup::mul(int g, int h) const {
  check_handle(g);
  check_handle(h);
  return table_[g][h];
}

int FiniteGroup::inv(int g) const {
  check_handle(g);
  return inverse_[g];
}

bool FiniteGroup::is_abelian() const {
  for (int i = 0; i < order(); ++i)
    for (int j = i + 1; j < order(); ++j)
      if (table_[i][j] != table_[j][i]) return false;
  return true;
}

FiniteGroup catalog_cyclic(int n) {
  if (n < 1 || n > 128)
    throw ParameterOutOfRangeError("cyclic order must be in 1..128, got " +
                                   std::to_string(n));
  std::vector<std::vector<int>> t(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::validate_cayley(t, "cyclic:" + std::to_string(n));
}

FiniteGroup catalog_dihedral(int n) {
  if (n < 1 || n > 64)
    throw ParameterOutOfRangeError("dihedral parameter must be in 1..64, got " +
                                   std::to_string(n));
  // Element i + n*a is the rotation r^i composed with a-th power of the
  // reflection s; s r^k = r^{-k} s.
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m, 0));
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i)
      for (int b = 0; b < 2; ++b)
        for (int k = 0; k < n; ++k) {
          const int rot = a ? (i + n - k) % n : (i + k) % n;
          t[i + n * a][k + n * b] = rot + n * (a ^ b);
        }
  return FiniteGroup::validate_cayley(t, "dihedral:" + std::to_string(n));
}

FiniteGroup catalog_symmetric(int n) {
  if (n < 1 || n > 5)
    throw ParameterOutOfRangeError("symmetric parameter must be in 1..5, got " +
                                   std::to_string(n));
  long order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::vector<std::vector<int>> perms(order);
  for (long r = 0; r < order; ++r) perms[r] = nth_permutation(n, r);
  // (p * q)(x) = p(q(x)); lexicographic rank 0 is the identity.
  std::vector<std::vector<int>> t(order, std::vector<int>(order, 0));
  for (long i = 0; i < order; ++i)
    for (long j = 0; j < order; ++j) {
      std::vector<int> comp(n);
      for (int x = 0; x < n; ++x) comp[x] = perms[i][perms[j][x]];
      t[i][j] = static_cast<int>(permutation_rank(comp));
    }
  return FiniteGroup::validate_cayley(t, "symmetric:" + std::to_string(n));
}

FiniteGroup catalog_quaternion8() {
  // Elements s*4 + b with sign s in {+,-} and basis b in {1,i,j,k}.
  // basis_mul[b1][b2] = {resulting basis, extra sign}.
  static constexpr int basis_mul[4][4][2] = {
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  std::vector<std::vector<int>> t(8, std::vector<int>(8, 0));
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) {
      const int b = basis_mul[i % 4][j % 4][0];
      const int s = (i / 4) ^ (j / 4) ^ basis_mul[i % 4][j % 4][1];
      t[i][j] = s * 4 + b;
    }
  return FiniteGroup::validate_cayley(t, "quaternion8");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() * b.order() > 4096)
    throw ParameterOutOfRangeError("direct product order exceeds 4096");
  return FiniteGroup::validate_cayley(product_table(a, b),
                                      "product:" + a.name() + "," + b.name());
}

FiniteGroup catalog(const std::string& spec) {
  const auto parse_int = [&spec](const std::string& s) {
    try {
      size_t pos = 0;
      const int v = std::stoi(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UnknownFamilyError("bad parameter in catalog spec: " + spec);
    }
  };
  if (spec.rfind("product:", 0) == 0) {
    const std::string rest = spec.substr(8);
    std::vector<std::string> parts;
    size_t start = 0;
    // Split on commas that separate top-level family specs; family
    // parameters follow a colon, so "cyclic:2,cyclic:4" splits after ":2".
    while (start < rest.size()) {
      size_t comma = rest.find(',', start);
      if (comma == std::string::npos) comma = rest.size();
      parts.push_back(rest.substr(start, comma - start));
      start = comma + 1;
    }
    if (parts.size() < 2)
      throw UnknownFamilyError("product spec needs at least two factors: " +
                               spec);
    FiniteGroup acc = catalog(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i)
      acc = direct_product(acc, catalog(parts[i]));
    return acc;
  }
  if (spec == "quaternion8") return catalog_quaternion8();
  if (spec == "trivial") return catalog_cyclic(1);
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw UnknownFamilyError("unknown group family: " + spec);
  const std::string family = spec.substr(0, colon);
  const int param = parse_int(spec.substr(colon + 1));
  if (family == "cyclic") return catalog_cyclic(param);
  if (family == "dihedral") return catalog_dihedral(param);
  if (family == "symmetric") return catalog_symmetric(param);
  throw UnknownFamilyError("unknown group family: " + family);
}

std::vector<std::pair<std::string, FiniteGroup>> standard_battery(
    int max_order) {
  std::vector<std::pair<std::string, FiniteGroup>> all;
  all.emplace_back("trivial", catalog_cyclic(1));
  for (int n = 2; n <= 8; ++n)
    all.emplace_back("cyclic:" + std::to_string(n), catalog_cyclic(n));
  all.emplace_back("product:cyclic:2,cyclic:2",
                   catalog("product:cyclic:2,cyclic:2"));
  all.emplace_back("product:cyclic:2,cyclic:2,cyclic:2",
                   catalog("product:cyclic:2,cyclic:2,cyclic:2"));
  all.emplace_back("product:cyclic:2,cyclic:4",
                   catalog("product:cyclic:2,cyclic:4"));
  all.emplace_back("symmetric:3", catalog_symmetric(3));
  all.emplace_back("dihedral:4", catalog_dihedral(4));
  all.emplace_back("quaternion8", catalog_quaternion8());

  std::vector<std::pair<std::string, FiniteGroup>> out;
  for (auto& entry : all)
    if (entry.second.order() <= max_order) out.push_back(std::move(entry));
  return out;
}

}  // namespace frucht
