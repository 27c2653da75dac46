#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupwalk/error.hpp"

namespace groupwalk {

// Group elements are 0-based indices into the multiplication table
// throughout the API. File formats, reports and display names use the
// 1-based numbering g_1..g_n.

/// A permutation of [0, n) stored as its image array.
struct Permutation {
  std::vector<int> image;  // image[j] = sigma(j)

  static Permutation identity(int n);

  int size() const { return static_cast<int>(image.size()); }
  int operator()(int j) const { return image[j]; }

  bool is_bijection() const;

  /// (this ∘ other)(j) = this(other(j)); `other` is applied first.
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;

  bool operator==(const Permutation&) const = default;
};

/// A finite multiplication table; a magma, not necessarily a group.
/// Candidates for validation and negative-control fixtures live here.
struct CayleyTable {
  int n = 0;
  std::vector<std::int32_t> table;  // row-major, table[i*n + j] = i*j
  std::vector<std::string> names;   // size 0 or n; no whitespace inside a name

  int at(int i, int j) const { return table[static_cast<std::size_t>(i) * n + j]; }
  void set(int i, int j, int v) { table[static_cast<std::size_t>(i) * n + j] = static_cast<std::int32_t>(v); }
};

/// One violated axiom with its first witness (0-based element indices).
struct GroupViolation {
  std::string axiom;         // latin_row | latin_col | identity | inverse | associativity
  std::vector<int> witness;  // meaning depends on the axiom; may be empty
  std::string detail;        // human-readable, 1-based indices
};

struct GroupValidationReport {
  bool is_group = false;
  bool associativity_checked = true;  // false when skipped by the order limit
  std::vector<GroupViolation> violations;
};

struct ValidateOptions {
  /// The full O(n^3) associativity scan runs only for n <= assoc_order_limit,
  /// unless force_assoc is set.
  int assoc_order_limit = 512;
  bool force_assoc = false;
};

/// Checks the group axioms on a candidate table: rows and columns are
/// permutations (Latin square), a two-sided identity exists, every
/// element has a two-sided inverse, and multiplication is associative.
/// Reports the first witness per violated axiom. Violations are data,
/// not errors.
GroupValidationReport validate_group(const CayleyTable& t, const ValidateOptions& opts = {});

namespace reference {
/// Serial associativity scan; the parallel scan used by validate_group
/// must find the same (lexicographically first) witness.
std::optional<std::array<int, 3>> associativity_witness(const CayleyTable& t);
}  // namespace reference

struct GroupValidationError : Error {
  GroupValidationReport report;
  explicit GroupValidationError(GroupValidationReport r);
};

/// A validated finite group: multiplication table, identity, inverses.
/// Immutable after construction; all operations are pure and values are
/// safe to share between threads.
class FiniteGroup {
 public:
  /// Order cap for table construction (7!); build_symmetric documents
  /// its own cap of 8!.
  static constexpr int kMaxOrder = 5040;

  /// Z_n: element i is the residue i, identity at index 0.
  static FiniteGroup cyclic(int n);

  /// Dihedral group of order 2m: indices [0, m) are the rotations r^i
  /// (identity first), indices [m, 2m) are the reflections s*r^(i-m).
  static FiniteGroup dihedral(int m);

  /// Symmetric group S_k (1 <= k <= 8): all k! permutations of [0, k)
  /// enumerated in lexicographic one-line order, identity first.
  /// Product p*q composes q first: (p*q)(x) = p(q(x)).
  static FiniteGroup symmetric(int k);

  /// Componentwise product; pair (i, j) maps to index i*|h| + j.
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  /// Validates the table and finalizes it into a group. Throws
  /// GroupValidationError (with the report) when any axiom fails.
  static FiniteGroup from_table(CayleyTable t, const ValidateOptions& opts = {});

  int order() const { return t_.n; }
  int identity() const { return identity_; }

  /// Index of g_i * g_j. Throws InvalidParameterError for out-of-range indices.
  int mul(int i, int j) const {
    check_index(i);
    check_index(j);
    return t_.at(i, j);
  }

  int inverse(int i) const {
    check_index(i);
    return inverse_[i];
  }

  /// The left translation sigma_k: j -> index of g_k * g_j. The Cayley
  /// embedding k -> sigma_k is an injective homomorphism into S_n.
  Permutation left_translation(int k) const;

  const CayleyTable& table() const { return t_; }

  /// Display name of element i; defaults to "g<i+1>".
  std::string name(int i) const;

  /// Structural equality: same order and same table.
  bool operator==(const FiniteGroup& o) const {
    return t_.n == o.t_.n && t_.table == o.t_.table;
  }

 private:
  FiniteGroup(CayleyTable t, int identity, std::vector<int> inverse)
      : t_(std::move(t)), identity_(identity), inverse_(std::move(inverse)) {}

  void check_index(int i) const {
    if (i < 0 || i >= t_.n) {
      throw InvalidParameterError("element index " + std::to_string(i + 1) +
                                  " out of range [1," + std::to_string(t_.n) + "]");
    }
  }

  CayleyTable t_;
  int identity_;
  std::vector<int> inverse_;
};

/// Parses the Cayley table text format:
///   - lines starting with '#' are comments; a comment of the form
///     "# names: a b c ..." supplies element display names;
///   - first data line: the order n;
///   - next n data lines: n space-separated entries in [1, n], row i
///     being left multiplication by g_i.
/// The parsed table is validated; the identity is detected as the unique
/// index e whose row and column both equal [1..n].
FiniteGroup parse_cayley_table(const std::string& text, const ValidateOptions& opts = {});

/// Syntax-only parse; returns the raw (possibly non-group) table.
CayleyTable parse_cayley_table_raw(const std::string& text);

/// Emits the exact format accepted by parse_cayley_table.
std::string serialize_cayley_table(const FiniteGroup& g);

/// Same underlying group object or structurally equal tables.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

/// Multiplicative order of element k.
int element_order(const FiniteGroup& g, int k);

}  // namespace groupwalk
