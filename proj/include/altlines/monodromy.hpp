#pragma once

// Brute-force permutation groups for the branch-cycle arguments: which groups
// are generated by product-one tuples of given cycle types, the Jordan-type
// check behind the even-degree families, the quartic trichotomy, and
// Riemann-Hurwitz bookkeeping.

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace altlines {

using CycleType = std::vector<int>;

class Perm {
 public:
  Perm() = default;
  /// images[i] is the image of i, 0-based.
  explicit Perm(std::vector<std::uint8_t> images);
  static Perm identity(int n);
  /// The standard permutation of a cycle type: consecutive cycles on 0, 1, ...
  static Perm of_type(const CycleType& type);

  int size() const { return static_cast<int>(img_.size()); }
  std::uint8_t operator[](int i) const { return img_[static_cast<std::size_t>(i)]; }
  /// (a * b)(i) = a(b(i)).
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  CycleType cycle_type() const;
  bool is_even() const;
  int order() const;
  std::uint32_t key() const;
  friend bool operator==(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint8_t> img_;
};

struct BranchData {
  int n = 0;
  std::vector<CycleType> types;
};

/// Invariants of a permutation group used to name it.
struct GroupFingerprint {
  int degree = 0;
  std::uint64_t order = 0;
  bool abelian = false;
  bool even = false;
  int max_element_order = 0;
  std::uint64_t involutions = 0;
  std::uint64_t derived_order = 0;
  std::string name() const;
  auto operator<=>(const GroupFingerprint&) const = default;
};

/// All elements of the group generated by gens (as keys), by closure.
std::vector<Perm> group_closure(const std::vector<Perm>& gens);
bool is_transitive(const std::vector<Perm>& gens, int n);
GroupFingerprint fingerprint(const std::vector<Perm>& gens, int n);

struct RealizationReport {
  std::set<GroupFingerprint> groups;
  /// Product-one tuples examined, with the first entry fixed up to conjugacy.
  std::uint64_t tuples = 0;
  std::uint64_t transitive = 0;
  /// Always "exhaustive": every product-one tuple is conjugate to one with the
  /// first entry equal to the standard permutation of its type.
  std::string mode = "exhaustive";
};

/// Groups generated by transitive product-one tuples with the given types.
/// With reorder, the types are permuted (a braid move, which preserves the
/// realized groups) so the largest classes are fixed and derived.
RealizationReport realizable_groups(const BranchData& data, bool reorder = true);

/// Every transitive group generated by a product-one triple of types
/// (n-1, 1), (n-1, 1), (3, 1, ..., 1) is A_n. n even, 4 <= n <= 8.
bool jordan_check(int n);

/// 2 g_source - 2 = n (2 g_target - 2) + sum over types of sum (e - 1).
bool riemann_hurwitz(const BranchData& data, int genus_source, int genus_target);

struct TrichotomyRow {
  std::vector<CycleType> types;
  std::set<GroupFingerprint> groups;
  bool genus_zero = false;
};

/// All multisets of three non-identity even cycle types in S_4.
std::vector<TrichotomyRow> quartic_trichotomy();

std::string cycle_string(const CycleType& type);

}  // namespace altlines
