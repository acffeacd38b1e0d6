#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "desc/bitset.hpp"
#include "desc/budgets.hpp"
#include "desc/errors.hpp"
#include "desc/perm.hpp"

namespace desc {

/// A finite monoid on dense element indices 0..n-1, immutable after
/// construction and cheap to copy (shared internals).
///
/// Two storage backends:
///  - dense multiplication table (validated inputs, small constructions);
///  - permutation-backed (elements are packed one-line permutations kept in
///    sorted key order; products are composed and ranked by binary search).
/// Permutation metadata, when present, also names elements for I/O.
class Monoid {
 public:
  Monoid() = default;

  /// Validates identity and associativity exhaustively (O(n^3)).
  static Monoid from_table(int order, std::vector<int32_t> table, int identity);

  /// For constructions that are correct by theorem (products, semidirect
  /// products, pullbacks). Still computes inverses and range-checks entries.
  static Monoid from_table_unchecked(int order, std::vector<int32_t> table, int identity);

  /// Elements must form a composition-closed set containing the identity
  /// permutation; closure is verified only when it is cheap to do so.
  static Monoid from_perms(std::vector<Permutation> elements);

  int order() const { return d_->n; }
  int identity() const { return d_->e; }

  int mul(int i, int j) const {
    const Data& d = *d_;
    if (!d.table.empty()) return d.table[(size_t)i * d.n + j];
    return perm_mul(i, j);
  }

  bool is_group() const { return d_->group; }

  /// Inverse of element i; fails with NotAGroup if it has none.
  int inverse(int i) const;

  /// Inverse or -1.
  int inverse_or_neg(int i) const { return d_->inv[i]; }

  bool has_perm_metadata() const { return !d_->keys.empty(); }
  int perm_degree() const { return d_->degree; }
  Permutation perm(int i) const;
  std::optional<int> index_of_perm(const Permutation& p) const;

  /// Dense table (empty for large permutation-backed monoids).
  const std::vector<int32_t>& table() const { return d_->table; }

  /// Structural equality: same order, identity, and element semantics.
  bool same_as(const Monoid& other) const;

  explicit operator bool() const { return d_ != nullptr; }

 private:
  struct Data {
    int n = 0;
    int e = 0;
    std::vector<int32_t> table;   // row-major n*n; may be empty
    int degree = 0;               // permutation degree when perm-backed
    std::vector<uint64_t> keys;   // sorted packed one-line forms
    std::vector<int32_t> inv;     // two-sided inverse or -1
    bool group = false;
  };

  explicit Monoid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  int perm_mul(int i, int j) const;
  static int perm_mul_data(const Data& d, int i, int j);
  static void finish(Data& d);

  std::shared_ptr<const Data> d_;
};

/// A finite group: a monoid in which every element has a two-sided inverse.
class Group {
 public:
  Group() = default;

  /// Fails with NotAGroup naming a witness element without an inverse.
  explicit Group(Monoid m);

  const Monoid& monoid() const { return m_; }

  int order() const { return m_.order(); }
  int identity() const { return m_.identity(); }
  int mul(int i, int j) const { return m_.mul(i, j); }
  int inv(int i) const { return m_.inverse_or_neg(i); }

  bool same_as(const Group& o) const { return m_.same_as(o.m_); }
  explicit operator bool() const { return bool(m_); }

 private:
  Monoid m_;
};

/// Total map between the carriers of two monoids. Totality and index range
/// are invariants; homomorphism/cocycle properties are checked by dedicated
/// operations.
class ElementMap {
 public:
  ElementMap() = default;
  ElementMap(Monoid domain, Monoid codomain, std::vector<int32_t> values);

  const Monoid& domain() const { return dom_; }
  const Monoid& codomain() const { return cod_; }

  int at(int i) const { return (*v_)[i]; }
  int operator()(int i) const { return (*v_)[i]; }
  int size() const { return (int)v_->size(); }
  const std::vector<int32_t>& values() const { return *v_; }

  bool is_injective() const;
  Bitset image() const;

  bool same_values(const ElementMap& o) const { return *v_ == *o.v_; }
  explicit operator bool() const { return v_ != nullptr; }

 private:
  Monoid dom_, cod_;
  std::shared_ptr<const std::vector<int32_t>> v_;
};

/// Subset of a monoid's carrier closed under multiplication and containing
/// the identity; closed under inverses when the ambient is a group. Also
/// used for submonoids of genuine monoids (units, centers, kernels).
class Subgroup {
 public:
  Subgroup() = default;

  /// Checks identity membership and closure (and inverse closure for group
  /// ambients).
  static Subgroup validated(const Monoid& ambient, Bitset members);

  /// For results that are closed by construction.
  static Subgroup unchecked(Monoid ambient, Bitset members);

  const Monoid& ambient() const { return amb_; }
  const Bitset& members() const { return m_; }
  int order() const { return m_.count(); }
  bool contains(int i) const { return m_.test(i); }
  std::vector<int> element_list() const { return m_.to_list(); }

  bool operator==(const Subgroup& o) const {
    return amb_.same_as(o.amb_) && m_ == o.m_;
  }

  explicit operator bool() const { return bool(amb_); }

 private:
  Monoid amb_;
  Bitset m_;
};

// ---- constructors and core operations ----

/// Validates a user-supplied multiplication table (exhaustive identity and
/// associativity checks).
Monoid validate_monoid(int order, const std::vector<std::vector<int>>& table, int identity);

Group as_group(const Monoid& m);

/// S_n with elements indexed in lexicographic order of one-line notation.
/// Dense table for small orders, permutation-backed beyond.
Group symmetric_group(int degree, const Budgets& budgets = {});

/// Even permutations of a full symmetric group (requires permutation
/// metadata covering all of S_n).
Subgroup alternating_subgroup(const Group& s);

Subgroup subgroup_generated(const Group& g, const std::vector<int>& seeds);
Subgroup submonoid_generated(const Monoid& m, const std::vector<int>& seeds);

/// Complete subgroup list via closure of generated subgroups, sorted by
/// (order, canonical bitset).
std::vector<Subgroup> all_subgroups(const Group& g, const Budgets& budgets = {});

/// {a s a^-1 : s in x}.
Subgroup conjugate_subgroup(const Group& g, int a, const Subgroup& x);

/// Elements with a two-sided inverse.
Subgroup units(const Monoid& m);

/// Elements commuting with everything.
Subgroup center(const Monoid& m);

/// Same carrier, transposed multiplication.
Monoid opposite(const Monoid& m);

bool check_homomorphism(const ElementMap& f);

/// First violation as text, or nullopt if f is a homomorphism.
std::optional<std::string> homomorphism_violation(const ElementMap& f);

Group trivial_group();
Group cyclic_group(int n);

Monoid direct_product(const Monoid& a, const Monoid& b);  // index = i*|b| + j
Group direct_product(const Group& a, const Group& b);

/// The induced group on a subgroup's members plus the inclusion
/// homomorphism. Preserves permutation metadata for perm-backed ambients.
std::pair<Group, ElementMap> subgroup_to_group(const Group& ambient, const Subgroup& s);
std::pair<Monoid, ElementMap> submonoid_to_monoid(const Monoid& ambient, const Subgroup& s);

Subgroup full_subgroup(const Monoid& m);
Subgroup trivial_subgroup(const Monoid& m);

/// Smallest generating set found greedily by ascending index.
std::vector<int> generating_set(const Group& g, const Subgroup& s);

int element_order(const Monoid& m, int i);

/// Exhaustive isomorphism search over identity-fixing bijections, pruned by
/// element-order profiles. Desk-scale orders only.
std::optional<ElementMap> find_isomorphism(const Group& a, const Group& b);

struct PullbackResult {
  Group product;            // K x_M L on pairs (k,l) with f(k)=g(l)
  ElementMap proj_k;        // product -> K
  ElementMap proj_l;        // product -> L
  Group kernel_g;           // Ker(g) as a standalone group
  ElementMap kernel_inclusion;  // Ker(g) -> L
  ElementMap iota;          // Ker(g) -> product, l -> (1_K, l)
  std::vector<std::pair<int32_t, int32_t>> pairs;  // element -> (k,l)
  bool f_image_in_g_image = false;

  int pair_index(int k, int l) const;
};

PullbackResult pullback(const Group& K, const Group& L, const Group& M,
                        const ElementMap& f, const ElementMap& g);

}  // namespace desc
