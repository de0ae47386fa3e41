#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "growth/integer.hpp"
#include "growth/matrix.hpp"
#include "growth/rewrite.hpp"

namespace growth {

enum class Family {
  trivial,
  cyclic,
  free,
  free_abelian,
  heisenberg,
  klein_bottle,
  surface,
  torus_bundle,
  free_product,
  direct_product_with_Z,
};

std::string family_name(Family f);
Family parse_family(const std::string& name);

/// Declarative description of a group family. `param` holds m (cyclic),
/// n (free, free_abelian) or g (surface); `matrix` is the torus-bundle
/// monodromy; `factors` holds free-product factors, or the single inner group
/// of direct_product_with_Z.
struct GroupSpec {
  Family family = Family::trivial;
  std::int64_t param = 0;
  MatrixZ2 matrix{};
  std::vector<GroupSpec> factors;
  std::optional<std::string> label;

  static GroupSpec trivial();
  static GroupSpec cyclic(std::int64_t m);
  static GroupSpec free(std::int64_t rank);
  static GroupSpec free_abelian(std::int64_t rank);
  static GroupSpec heisenberg();
  static GroupSpec klein_bottle();
  static GroupSpec surface(std::int64_t genus);
  static GroupSpec torus_bundle(const MatrixZ2& a);
  static GroupSpec free_product(std::vector<GroupSpec> factors);
  static GroupSpec direct_product_with_Z(GroupSpec inner);

  const GroupSpec& inner() const { return factors.at(0); }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws InvalidSpec when an invariant of the family is violated.
void validate(const GroupSpec& spec);

struct GroupOrder {
  enum class Kind { finite, infinite };
  Kind kind = Kind::infinite;
  std::uint64_t order = 0;  // meaningful for finite only

  bool is_finite() const { return kind == Kind::finite; }
  static GroupOrder finite(std::uint64_t m) { return {Kind::finite, m}; }
  static GroupOrder infinite() { return {Kind::infinite, 0}; }
  friend bool operator==(const GroupOrder&, const GroupOrder&) = default;
};

GroupOrder group_order(const GroupSpec& spec);

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

struct Element;

// Owning pointer with value semantics, for the recursive payloads.
template <class T>
class Box {
 public:
  Box() : ptr_(std::make_unique<T>()) {}
  explicit Box(T value) : ptr_(std::make_unique<T>(std::move(value))) {}
  Box(const Box& o) : ptr_(std::make_unique<T>(*o.ptr_)) {}
  Box(Box&&) noexcept = default;
  Box& operator=(const Box& o) {
    if (this != &o) ptr_ = std::make_unique<T>(*o.ptr_);
    return *this;
  }
  Box& operator=(Box&&) noexcept = default;

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

 private:
  std::unique_ptr<T> ptr_;
};

namespace payload {

struct Identity {};
struct Residue {
  std::int64_t value = 0;
};
/// Free and surface groups: a freely (resp. Dehn-) reduced word.
struct Word {
  rewrite::Word letters;
};
struct Lattice {
  std::vector<Integer> coords;
};
/// (x, y, z) with (x1,y1,z1)(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2).
struct Heisenberg {
  Integer x, y, z;
};
/// (m, n) with (m1,n1)(m2,n2) = (m1 + (-1)^n1 m2, n1+n2).
struct Klein {
  Integer m, n;
};
/// (v, n) in Z^2 x| Z with (v1,n1)(v2,n2) = (v1 + A^n1 v2, n1+n2).
struct TorusBundle {
  Integer v1, v2, n;
};
struct Syllable;
/// Alternating non-identity syllables.
struct FreeProduct {
  std::vector<Syllable> syllables;
};
/// (n, g) in Z x G.
struct CentralPair {
  Integer n;
  Box<Element> inner;
};

}  // namespace payload

struct Element {
  using Payload = std::variant<payload::Identity, payload::Residue, payload::Word, payload::Lattice,
                               payload::Heisenberg, payload::Klein, payload::TorusBundle,
                               payload::FreeProduct, payload::CentralPair>;
  Payload payload;

  static Element identity_payload() { return {payload::Identity{}}; }
  static Element residue(std::int64_t r) { return {payload::Residue{r}}; }
  static Element word(rewrite::Word w) { return {payload::Word{std::move(w)}}; }
  static Element lattice(std::vector<Integer> coords) { return {payload::Lattice{std::move(coords)}}; }
  static Element heisenberg(Integer x, Integer y, Integer z) {
    return {payload::Heisenberg{std::move(x), std::move(y), std::move(z)}};
  }
  static Element klein(Integer m, Integer n) { return {payload::Klein{std::move(m), std::move(n)}}; }
  static Element torus(Integer v1, Integer v2, Integer n) {
    return {payload::TorusBundle{std::move(v1), std::move(v2), std::move(n)}};
  }
  static Element free_product(std::vector<payload::Syllable> syllables);
  static Element central(Integer n, Element inner);

  template <class T>
  const T& as() const {
    return std::get<T>(payload);
  }
};

struct payload::Syllable {
  std::size_t factor = 0;
  Element value;
};

inline Element Element::free_product(std::vector<payload::Syllable> syllables) {
  return {payload::FreeProduct{std::move(syllables)}};
}

inline Element Element::central(Integer n, Element inner) {
  return {payload::CentralPair{std::move(n), Box<Element>(std::move(inner))}};
}

using ByteKey = std::string;

struct GeneratingSet {
  std::vector<Element> elements;
  bool symmetrized = false;
};

// ---------------------------------------------------------------------------
// Groups
// ---------------------------------------------------------------------------

enum class IntegerMode {
  arbitrary,
  checked128,  // coordinates must stay inside __int128; ArithmeticOverflow otherwise
};

struct GroupOptions {
  IntegerMode integers = IntegerMode::arbitrary;
  std::size_t closure_budget = rewrite::kDefaultClosureBudget;
};

/// Exact arithmetic for one group. Immutable after construction.
class Group {
 public:
  Group(GroupSpec spec, GroupOptions options) : spec_(std::move(spec)), options_(options) {}
  virtual ~Group() = default;
  Group(const Group&) = delete;
  Group& operator=(const Group&) = delete;

  const GroupSpec& spec() const { return spec_; }
  const GroupOptions& options() const { return options_; }
  GroupOrder order() const { return group_order(spec_); }

  virtual Element identity() const = 0;
  virtual Element mul(const Element& a, const Element& b) const = 0;
  virtual Element inv(const Element& a) const = 0;
  virtual GeneratingSet default_generators() const = 0;
  virtual std::string format(const Element& a) const = 0;

  /// Injective on group elements, deterministic across runs.
  ByteKey canonical_key(const Element& a) const {
    ByteKey k;
    append_key(a, k);
    return k;
  }
  virtual void append_key(const Element& a, ByteKey& out) const = 0;

  /// Equal elements always share a coarse key; distinct elements may collide.
  /// Used to bucket the pairwise fallback for surface groups.
  ByteKey coarse_key(const Element& a) const {
    ByteKey k;
    append_coarse_key(a, k);
    return k;
  }
  virtual void append_coarse_key(const Element& a, ByteKey& out) const { append_key(a, out); }

  /// Equality decided without canonical keys where an independent route exists.
  virtual bool equal(const Element& a, const Element& b) const {
    return canonical_key(a) == canonical_key(b);
  }
  bool is_identity(const Element& a) const { return equal(a, identity()); }

  /// True when canonical_key can throw ClosureBudgetExceeded.
  virtual bool keys_may_exceed_budget() const { return false; }

 protected:
  void check_width(const Integer& v) const;

 private:
  GroupSpec spec_;
  GroupOptions options_;
};

using GroupHandle = std::shared_ptr<const Group>;

GroupHandle make_group(const GroupSpec& spec, GroupOptions options = {});

/// S together with the inverses of its members, duplicates and the identity removed.
/// Members keep their order; missing inverses follow in the same order.
GeneratingSet symmetrize(const Group& g, const std::vector<Element>& elements);

}  // namespace growth
