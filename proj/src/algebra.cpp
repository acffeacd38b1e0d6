#include "desc/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace desc {

namespace {

// Dense tables are kept (alongside permutation keys) up to this order.
constexpr int kDenseTableCap = 1024;

std::string elt(int i) { return "element " + std::to_string(i); }

}  // namespace

// ---- Monoid ----

void Monoid::finish(Data& d) {
  // Two-sided inverses; group iff all present.
  d.inv.assign(d.n, -1);
  if (!d.table.empty()) {
    for (int i = 0; i < d.n; ++i) {
      for (int j = 0; j < d.n; ++j) {
        if (d.table[(size_t)i * d.n + j] == d.e && d.table[(size_t)j * d.n + i] == d.e) {
          d.inv[i] = j;
          break;
        }
      }
    }
  } else {
    for (int i = 0; i < d.n; ++i) {
      Permutation p = Permutation::from_key(d.keys[i], d.degree).inverse();
      uint64_t k = p.key();
      auto it = std::lower_bound(d.keys.begin(), d.keys.end(), k);
      if (it != d.keys.end() && *it == k) d.inv[i] = (int)(it - d.keys.begin());
    }
  }
  d.group = true;
  for (int i = 0; i < d.n; ++i)
    if (d.inv[i] < 0) {
      d.group = false;
      break;
    }
}

Monoid Monoid::from_table(int order, std::vector<int32_t> table, int identity) {
  if (order <= 0) fail(Err::IndexOutOfRange, "order must be positive");
  if ((long long)table.size() != (long long)order * order)
    fail(Err::IndexOutOfRange, "table must have order*order entries");
  for (int32_t v : table)
    if (v < 0 || v >= order) fail(Err::IndexOutOfRange, "table entry " + std::to_string(v) + " out of range");
  if (identity < 0 || identity >= order) fail(Err::IndexOutOfRange, "identity index out of range");

  auto at = [&](int i, int j) { return table[(size_t)i * order + j]; };
  for (int i = 0; i < order; ++i) {
    if (at(identity, i) != i)
      fail(Err::BadIdentity, "identity*" + elt(i) + " = " + elt(at(identity, i)));
    if (at(i, identity) != i)
      fail(Err::BadIdentity, elt(i) + "*identity = " + elt(at(i, identity)));
  }
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j)
      for (int k = 0; k < order; ++k)
        if (at(at(i, j), k) != at(i, at(j, k)))
          fail(Err::NotAssociative, "witness triple (" + std::to_string(i) + "," + std::to_string(j) +
                                        "," + std::to_string(k) + ")");

  return from_table_unchecked(order, std::move(table), identity);
}

Monoid Monoid::from_table_unchecked(int order, std::vector<int32_t> table, int identity) {
  if (order <= 0 || (long long)table.size() != (long long)order * order)
    fail(Err::IndexOutOfRange, "bad table shape");
  auto d = std::make_shared<Data>();
  d->n = order;
  d->e = identity;
  d->table = std::move(table);
  finish(*d);
  return Monoid(std::move(d));
}

Monoid Monoid::from_perms(std::vector<Permutation> elements) {
  if (elements.empty()) fail(Err::IndexOutOfRange, "empty element set");
  int deg = elements[0].degree;
  if (deg > kMaxPackedDegree) fail(Err::DegreeTooLarge, "permutation degree exceeds 16");
  auto d = std::make_shared<Data>();
  d->degree = deg;
  d->keys.reserve(elements.size());
  for (const auto& p : elements) {
    if (p.degree != deg) fail(Err::DomainMismatch, "mixed permutation degrees");
    d->keys.push_back(p.key());
  }
  std::sort(d->keys.begin(), d->keys.end());
  if (std::adjacent_find(d->keys.begin(), d->keys.end()) != d->keys.end())
    fail(Err::IndexOutOfRange, "duplicate permutations");
  d->n = (int)d->keys.size();
  uint64_t idk = Permutation::identity(deg).key();
  auto it = std::lower_bound(d->keys.begin(), d->keys.end(), idk);
  if (it == d->keys.end() || *it != idk) fail(Err::BadIdentity, "identity permutation missing");
  d->e = (int)(it - d->keys.begin());

  // Verify closure when affordable; large sets come from internal closure
  // algorithms and are trusted.
  Monoid m(std::move(d));
  Data& dd = const_cast<Data&>(*m.d_);
  if ((long long)dd.n * dd.n <= 4'000'000) {
    for (int i = 0; i < dd.n; ++i)
      for (int j = 0; j < dd.n; ++j) {
        Permutation p = Permutation::from_key(dd.keys[i], deg).compose(Permutation::from_key(dd.keys[j], deg));
        uint64_t k = p.key();
        auto pos = std::lower_bound(dd.keys.begin(), dd.keys.end(), k);
        if (pos == dd.keys.end() || *pos != k)
          fail(Err::NotClosed, "product of elements " + std::to_string(i) + "," + std::to_string(j) +
                                   " escapes the set");
      }
  }
  if (dd.n <= kDenseTableCap) {
    dd.table.resize((size_t)dd.n * dd.n);
    for (int i = 0; i < dd.n; ++i)
      for (int j = 0; j < dd.n; ++j) dd.table[(size_t)i * dd.n + j] = m.perm_mul(i, j);
  }
  finish(dd);
  return m;
}

int Monoid::perm_mul(int i, int j) const {
  const Data& d = *d_;
  const int deg = d.degree;
  uint64_t a = d.keys[i], b = d.keys[j];
  // res(x) = a(b(x)), packed directly from nibbles.
  uint64_t res = 0;
  for (int x = 0; x < deg; ++x) {
    int bx = (int)((b >> (4 * (deg - 1 - x))) & 0xF);
    int ax = (int)((a >> (4 * (deg - 1 - bx))) & 0xF);
    res = (res << 4) | (uint64_t)ax;
  }
  auto it = std::lower_bound(d.keys.begin(), d.keys.end(), res);
  return (int)(it - d.keys.begin());
}

int Monoid::inverse(int i) const {
  int v = d_->inv[i];
  if (v < 0) fail(Err::NotAGroup, elt(i) + " has no two-sided inverse");
  return v;
}

Permutation Monoid::perm(int i) const {
  if (!has_perm_metadata()) fail(Err::NotASymmetricGroup, "monoid has no permutation metadata");
  return Permutation::from_key(d_->keys[i], d_->degree);
}

std::optional<int> Monoid::index_of_perm(const Permutation& p) const {
  if (!has_perm_metadata() || p.degree != d_->degree) return std::nullopt;
  uint64_t k = p.key();
  auto it = std::lower_bound(d_->keys.begin(), d_->keys.end(), k);
  if (it == d_->keys.end() || *it != k) return std::nullopt;
  return (int)(it - d_->keys.begin());
}

bool Monoid::same_as(const Monoid& other) const {
  if (d_ == other.d_) return true;
  if (!d_ || !other.d_) return false;
  const Data& a = *d_;
  const Data& b = *other.d_;
  if (a.n != b.n || a.e != b.e) return false;
  if (!a.keys.empty() || !b.keys.empty()) return a.degree == b.degree && a.keys == b.keys;
  return a.table == b.table;
}

// ---- Group ----

Group::Group(Monoid m) : m_(std::move(m)) {
  if (!m_.is_group()) {
    for (int i = 0; i < m_.order(); ++i)
      if (m_.inverse_or_neg(i) < 0)
        fail(Err::NotAGroup, elt(i) + " has no two-sided inverse");
  }
}

Group as_group(const Monoid& m) { return Group(m); }

// ---- ElementMap ----

ElementMap::ElementMap(Monoid domain, Monoid codomain, std::vector<int32_t> values)
    : dom_(std::move(domain)), cod_(std::move(codomain)) {
  if ((int)values.size() != dom_.order())
    fail(Err::IndexOutOfRange, "map must assign a value to every domain element");
  for (int32_t v : values)
    if (v < 0 || v >= cod_.order()) fail(Err::IndexOutOfRange, "map value out of codomain range");
  v_ = std::make_shared<const std::vector<int32_t>>(std::move(values));
}

bool ElementMap::is_injective() const {
  Bitset seen(cod_.order());
  for (int32_t v : *v_) {
    if (seen.test(v)) return false;
    seen.set(v);
  }
  return true;
}

Bitset ElementMap::image() const {
  Bitset img(cod_.order());
  for (int32_t v : *v_) img.set(v);
  return img;
}

// ---- Subgroup ----

Subgroup Subgroup::validated(const Monoid& ambient, Bitset members) {
  if (members.size() != ambient.order()) fail(Err::IndexOutOfRange, "member bitset size mismatch");
  if (!members.test(ambient.identity())) fail(Err::BadIdentity, "subset does not contain the identity");
  for (int i = members.first(); i >= 0; i = members.next(i))
    for (int j = members.first(); j >= 0; j = members.next(j))
      if (!members.test(ambient.mul(i, j)))
        fail(Err::NotClosed, "product of elements " + std::to_string(i) + "," + std::to_string(j) +
                                 " escapes the subset");
  if (ambient.is_group()) {
    for (int i = members.first(); i >= 0; i = members.next(i))
      if (!members.test(ambient.inverse_or_neg(i)))
        fail(Err::NotClosed, "inverse of " + elt(i) + " escapes the subset");
  }
  return unchecked(ambient, std::move(members));
}

Subgroup Subgroup::unchecked(Monoid ambient, Bitset members) {
  Subgroup s;
  s.amb_ = std::move(ambient);
  s.m_ = std::move(members);
  return s;
}

// ---- operations ----

Monoid validate_monoid(int order, const std::vector<std::vector<int>>& table, int identity) {
  if ((int)table.size() != order) fail(Err::IndexOutOfRange, "table must have `order` rows");
  std::vector<int32_t> flat;
  flat.reserve((size_t)order * order);
  for (const auto& row : table) {
    if ((int)row.size() != order) fail(Err::IndexOutOfRange, "table rows must have `order` entries");
    for (int v : row) flat.push_back((int32_t)v);
  }
  return Monoid::from_table(order, std::move(flat), identity);
}

Group symmetric_group(int degree, const Budgets& budgets) {
  if (degree < 1) fail(Err::IndexOutOfRange, "degree must be positive");
  int cap = std::min(budgets.symmetric_degree_cap, kMaxPackedDegree);
  if (degree > cap)
    fail(Err::DegreeTooLarge, "degree " + std::to_string(degree) + " exceeds cap " + std::to_string(cap));
  std::vector<Permutation> elems;
  Permutation p = Permutation::identity(degree);
  std::vector<uint8_t> line = p.images;
  do {
    Permutation q;
    q.degree = degree;
    q.images = line;
    elems.push_back(std::move(q));
  } while (std::next_permutation(line.begin(), line.end()));
  return Group(Monoid::from_perms(std::move(elems)));
}

Subgroup alternating_subgroup(const Group& s) {
  const Monoid& m = s.monoid();
  if (!m.has_perm_metadata()) fail(Err::NotASymmetricGroup, "group has no permutation metadata");
  long long factorial = 1;
  for (int i = 2; i <= m.perm_degree(); ++i) factorial *= i;
  if ((long long)m.order() != factorial)
    fail(Err::NotASymmetricGroup, "group is not a full symmetric group");
  Bitset even(m.order());
  for (int i = 0; i < m.order(); ++i)
    if (m.perm(i).sign() == 1) even.set(i);
  return Subgroup::unchecked(m, std::move(even));
}

namespace {

// Closure of a seeded subset under multiplication. For groups this yields
// the generated subgroup (inverses appear as powers).
Bitset closure(const Monoid& m, Bitset start) {
  start.set(m.identity());
  std::vector<int> work = start.to_list();
  std::vector<int> members = work;
  while (!work.empty()) {
    std::vector<int> fresh;
    for (int a : work) {
      for (int b : members) {
        int ab = m.mul(a, b);
        if (!start.test(ab)) {
          start.set(ab);
          fresh.push_back(ab);
        }
        int ba = m.mul(b, a);
        if (!start.test(ba)) {
          start.set(ba);
          fresh.push_back(ba);
        }
      }
    }
    for (int f : fresh) members.push_back(f);
    work = std::move(fresh);
  }
  return start;
}

}  // namespace

Subgroup subgroup_generated(const Group& g, const std::vector<int>& seeds) {
  Bitset start(g.order());
  for (int s : seeds) {
    if (s < 0 || s >= g.order()) fail(Err::IndexOutOfRange, "seed " + std::to_string(s));
    start.set(s);
  }
  return Subgroup::unchecked(g.monoid(), closure(g.monoid(), std::move(start)));
}

Subgroup submonoid_generated(const Monoid& m, const std::vector<int>& seeds) {
  Bitset start(m.order());
  for (int s : seeds) {
    if (s < 0 || s >= m.order()) fail(Err::IndexOutOfRange, "seed " + std::to_string(s));
    start.set(s);
  }
  return Subgroup::unchecked(m, closure(m, std::move(start)));
}

std::vector<Subgroup> all_subgroups(const Group& g, const Budgets& budgets) {
  if (g.order() > budgets.subgroup_enum_order_cap)
    fail(Err::OrderTooLarge, "subgroup enumeration capped at order " +
                                 std::to_string(budgets.subgroup_enum_order_cap));
  const Monoid& m = g.monoid();
  Bitset triv(g.order());
  triv.set(g.identity());

  std::unordered_set<Bitset, BitsetHash> seen;
  std::vector<Bitset> list;
  seen.insert(triv);
  list.push_back(triv);

  // Closure of generated subgroups: extend every known subgroup by every
  // outside element until no new subgroup appears.
  for (size_t head = 0; head < list.size(); ++head) {
    Bitset h = list[head];
    for (int a = 0; a < g.order(); ++a) {
      if (h.test(a)) continue;
      Bitset ext = h;
      ext.set(a);
      Bitset k = closure(m, std::move(ext));
      if (seen.insert(k).second) list.push_back(std::move(k));
    }
  }

  std::sort(list.begin(), list.end(), [](const Bitset& a, const Bitset& b) {
    int ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.lex_less(b);
  });
  std::vector<Subgroup> out;
  out.reserve(list.size());
  for (auto& b : list) out.push_back(Subgroup::unchecked(m, std::move(b)));
  return out;
}

Subgroup conjugate_subgroup(const Group& g, int a, const Subgroup& x) {
  if (!x.ambient().same_as(g.monoid())) fail(Err::AmbientMismatch, "subgroup lives in a different group");
  if (a < 0 || a >= g.order()) fail(Err::IndexOutOfRange, elt(a));
  int ainv = g.inv(a);
  Bitset out(g.order());
  for (int s = x.members().first(); s >= 0; s = x.members().next(s))
    out.set(g.mul(g.mul(a, s), ainv));
  return Subgroup::unchecked(g.monoid(), std::move(out));
}

Subgroup units(const Monoid& m) {
  Bitset u(m.order());
  if (m.is_group()) {
    for (int i = 0; i < m.order(); ++i) u.set(i);
  } else {
    for (int i = 0; i < m.order(); ++i)
      if (m.inverse_or_neg(i) >= 0) u.set(i);
  }
  return Subgroup::unchecked(m, std::move(u));
}

Subgroup center(const Monoid& m) {
  Bitset z(m.order());
  for (int i = 0; i < m.order(); ++i) {
    bool central = true;
    for (int j = 0; j < m.order(); ++j)
      if (m.mul(i, j) != m.mul(j, i)) {
        central = false;
        break;
      }
    if (central) z.set(i);
  }
  return Subgroup::unchecked(m, std::move(z));
}

Monoid opposite(const Monoid& m) {
  const int n = m.order();
  if (n > kDenseTableCap)
    fail(Err::OrderTooLarge, "opposite monoid needs a dense table; order " + std::to_string(n));
  std::vector<int32_t> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[(size_t)i * n + j] = (int32_t)m.mul(j, i);
  return Monoid::from_table_unchecked(n, std::move(t), m.identity());
}

std::optional<std::string> homomorphism_violation(const ElementMap& f) {
  const Monoid& a = f.domain();
  const Monoid& b = f.codomain();
  if (f.at(a.identity()) != b.identity()) return "identity maps to " + elt(f.at(a.identity()));
  for (int i = 0; i < a.order(); ++i)
    for (int j = 0; j < a.order(); ++j)
      if (f.at(a.mul(i, j)) != b.mul(f.at(i), f.at(j)))
        return "f(" + std::to_string(i) + "*" + std::to_string(j) + ") != f(" + std::to_string(i) +
               ")*f(" + std::to_string(j) + ")";
  return std::nullopt;
}

bool check_homomorphism(const ElementMap& f) { return !homomorphism_violation(f).has_value(); }

Group trivial_group() {
  return Group(Monoid::from_table_unchecked(1, {0}, 0));
}

Group cyclic_group(int n) {
  if (n < 1) fail(Err::IndexOutOfRange, "order must be positive");
  std::vector<int32_t> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[(size_t)i * n + j] = (int32_t)((i + j) % n);
  return Group(Monoid::from_table_unchecked(n, std::move(t), 0));
}

Monoid direct_product(const Monoid& a, const Monoid& b) {
  const int na = a.order(), nb = b.order();
  const long long n = (long long)na * nb;
  if (n > kDenseTableCap) fail(Err::OrderTooLarge, "direct product order " + std::to_string(n));
  std::vector<int32_t> t((size_t)n * n);
  auto idx = [&](int i, int j) { return i * nb + j; };
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < nb; ++j1)
      for (int i2 = 0; i2 < na; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          t[(size_t)idx(i1, j1) * n + idx(i2, j2)] = (int32_t)idx(a.mul(i1, i2), b.mul(j1, j2));
  return Monoid::from_table_unchecked((int)n, std::move(t), idx(a.identity(), b.identity()));
}

Group direct_product(const Group& a, const Group& b) {
  return Group(direct_product(a.monoid(), b.monoid()));
}

std::pair<Group, ElementMap> subgroup_to_group(const Group& ambient, const Subgroup& s) {
  if (!s.ambient().same_as(ambient.monoid())) fail(Err::AmbientMismatch, "subgroup of a different group");
  std::vector<int> members = s.element_list();
  const Monoid& m = ambient.monoid();
  Monoid local;
  if (m.has_perm_metadata() && m.table().empty()) {
    std::vector<Permutation> perms;
    perms.reserve(members.size());
    for (int i : members) perms.push_back(m.perm(i));
    local = Monoid::from_perms(std::move(perms));
  } else {
    const int k = (int)members.size();
    std::vector<int32_t> loc(m.order(), -1);
    for (int i = 0; i < k; ++i) loc[members[i]] = (int32_t)i;
    std::vector<int32_t> t((size_t)k * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) {
        int32_t v = loc[m.mul(members[i], members[j])];
        if (v < 0) fail(Err::NotClosed, "subgroup is not closed");
        t[(size_t)i * k + j] = v;
      }
    local = Monoid::from_table_unchecked(k, std::move(t), loc[m.identity()]);
  }
  std::vector<int32_t> incl(members.begin(), members.end());
  return {Group(local), ElementMap(local, m, std::move(incl))};
}

std::pair<Monoid, ElementMap> submonoid_to_monoid(const Monoid& ambient, const Subgroup& s) {
  if (!s.ambient().same_as(ambient)) fail(Err::AmbientMismatch, "submonoid of a different monoid");
  std::vector<int> members = s.element_list();
  const int k = (int)members.size();
  std::vector<int32_t> loc(ambient.order(), -1);
  for (int i = 0; i < k; ++i) loc[members[i]] = (int32_t)i;
  std::vector<int32_t> t((size_t)k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int32_t v = loc[ambient.mul(members[i], members[j])];
      if (v < 0) fail(Err::NotClosed, "subset is not closed");
      t[(size_t)i * k + j] = v;
    }
  Monoid local = Monoid::from_table_unchecked(k, std::move(t), loc[ambient.identity()]);
  std::vector<int32_t> incl(members.begin(), members.end());
  return {local, ElementMap(local, ambient, std::move(incl))};
}

Subgroup full_subgroup(const Monoid& m) {
  return Subgroup::unchecked(m, Bitset(m.order(), true));
}

Subgroup trivial_subgroup(const Monoid& m) {
  Bitset b(m.order());
  b.set(m.identity());
  return Subgroup::unchecked(m, std::move(b));
}

std::vector<int> generating_set(const Group& g, const Subgroup& s) {
  std::vector<int> gens;
  Bitset have(g.order());
  have.set(g.identity());
  for (int a = s.members().first(); a >= 0; a = s.members().next(a)) {
    if (have.test(a)) continue;
    gens.push_back(a);
    Bitset seeded = have;
    seeded.set(a);
    have = closure(g.monoid(), std::move(seeded));
    if (have == s.members()) break;
  }
  return gens;
}

int element_order(const Monoid& m, int i) {
  int ord = 1;
  int x = i;
  while (x != m.identity()) {
    x = m.mul(x, i);
    ++ord;
    if (ord > m.order()) fail(Err::NotAGroup, elt(i) + " generates no identity power");
  }
  return ord;
}

namespace {

bool extend_isomorphism(const Group& a, const Group& b, const std::vector<int>& gens_a,
                        const std::vector<std::vector<int>>& candidates, size_t pos,
                        std::vector<int32_t>& img) {
  if (pos == gens_a.size()) {
    // Close the partial assignment into a full map and verify bijectivity.
    std::vector<int32_t> full(a.order(), -1);
    full[a.identity()] = (int32_t)b.identity();
    std::vector<int> work;
    work.push_back(a.identity());
    for (size_t k = 0; k < gens_a.size(); ++k) {
      if (full[gens_a[k]] == -1) {
        full[gens_a[k]] = img[k];
        work.push_back(gens_a[k]);
      } else if (full[gens_a[k]] != img[k]) {
        return false;
      }
    }
    std::vector<int> members = work;
    while (!work.empty()) {
      std::vector<int> fresh;
      for (int x : work)
        for (int y : members) {
          for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
            int pq = a.mul(p, q);
            int32_t v = (int32_t)b.mul(full[p], full[q]);
            if (full[pq] == -1) {
              full[pq] = v;
              fresh.push_back(pq);
            } else if (full[pq] != v) {
              return false;
            }
          }
        }
      for (int f : fresh) members.push_back(f);
      work = std::move(fresh);
    }
    if ((int)members.size() != a.order()) return false;  // gens_a did not generate
    Bitset hit(b.order());
    for (int32_t v : full) {
      if (v < 0 || hit.test(v)) return false;
      hit.set(v);
    }
    // Full multiplicativity check.
    for (int i = 0; i < a.order(); ++i)
      for (int j = 0; j < a.order(); ++j)
        if (full[a.mul(i, j)] != b.mul(full[i], full[j])) return false;
    img.assign(full.begin(), full.end());
    return true;
  }
  for (int cand : candidates[pos]) {
    img[pos] = (int32_t)cand;
    std::vector<int32_t> saved = img;
    if (extend_isomorphism(a, b, gens_a, candidates, pos + 1, img)) return true;
    img = std::move(saved);
  }
  return false;
}

}  // namespace

std::optional<ElementMap> find_isomorphism(const Group& a, const Group& b) {
  if (a.order() != b.order()) return std::nullopt;
  std::vector<int> orders_a(a.order()), orders_b(b.order());
  for (int i = 0; i < a.order(); ++i) orders_a[i] = element_order(a.monoid(), i);
  for (int i = 0; i < b.order(); ++i) orders_b[i] = element_order(b.monoid(), i);
  {
    std::vector<int> sa = orders_a, sb = orders_b;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> gens = generating_set(a, full_subgroup(a.monoid()));
  std::vector<std::vector<int>> candidates(gens.size());
  for (size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < b.order(); ++i)
      if (orders_b[i] == orders_a[gens[k]]) candidates[k].push_back(i);
  std::vector<int32_t> img(gens.size(), -1);
  if (!extend_isomorphism(a, b, gens, candidates, 0, img)) return std::nullopt;
  return ElementMap(a.monoid(), b.monoid(), std::move(img));
}

// ---- pullback ----

int PullbackResult::pair_index(int k, int l) const {
  for (size_t i = 0; i < pairs.size(); ++i)
    if (pairs[i].first == k && pairs[i].second == l) return (int)i;
  return -1;
}

PullbackResult pullback(const Group& K, const Group& L, const Group& M,
                        const ElementMap& f, const ElementMap& g) {
  if (!f.domain().same_as(K.monoid()) || !f.codomain().same_as(M.monoid()))
    fail(Err::DomainMismatch, "f must map K to M");
  if (!g.domain().same_as(L.monoid()) || !g.codomain().same_as(M.monoid()))
    fail(Err::DomainMismatch, "g must map L to M");
  if (auto v = homomorphism_violation(f)) fail(Err::NotHomomorphism, "f: " + *v);
  if (auto v = homomorphism_violation(g)) fail(Err::NotHomomorphism, "g: " + *v);

  PullbackResult out;
  std::vector<int32_t> pidx((size_t)K.order() * L.order(), -1);
  for (int k = 0; k < K.order(); ++k)
    for (int l = 0; l < L.order(); ++l)
      if (f.at(k) == g.at(l)) {
        pidx[(size_t)k * L.order() + l] = (int32_t)out.pairs.size();
        out.pairs.emplace_back(k, l);
      }
  const int n = (int)out.pairs.size();
  std::vector<int32_t> t((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int k = K.mul(out.pairs[i].first, out.pairs[j].first);
      int l = L.mul(out.pairs[i].second, out.pairs[j].second);
      t[(size_t)i * n + j] = pidx[(size_t)k * L.order() + l];
    }
  int e = pidx[(size_t)K.identity() * L.order() + L.identity()];
  out.product = Group(Monoid::from_table_unchecked(n, std::move(t), e));

  std::vector<int32_t> pk(n), pl(n);
  for (int i = 0; i < n; ++i) {
    pk[i] = out.pairs[i].first;
    pl[i] = out.pairs[i].second;
  }
  out.proj_k = ElementMap(out.product.monoid(), K.monoid(), std::move(pk));
  out.proj_l = ElementMap(out.product.monoid(), L.monoid(), std::move(pl));

  Bitset ker(L.order());
  for (int l = 0; l < L.order(); ++l)
    if (g.at(l) == M.identity()) ker.set(l);
  auto [kg, incl] = subgroup_to_group(L, Subgroup::unchecked(L.monoid(), std::move(ker)));
  out.kernel_g = kg;
  out.kernel_inclusion = incl;
  std::vector<int32_t> iv(kg.order());
  for (int i = 0; i < kg.order(); ++i)
    iv[i] = pidx[(size_t)K.identity() * L.order() + incl.at(i)];
  out.iota = ElementMap(kg.monoid(), out.product.monoid(), std::move(iv));

  out.f_image_in_g_image = f.image().is_subset_of(g.image());
  return out;
}

}  // namespace desc
