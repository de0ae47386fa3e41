#include "growth/groups.hpp"

#include <array>
#include <unordered_set>

#include "growth/errors.hpp"

namespace growth {

namespace {

const std::array<std::pair<Family, const char*>, 10> kFamilyNames{{
    {Family::trivial, "trivial"},
    {Family::cyclic, "cyclic"},
    {Family::free, "free"},
    {Family::free_abelian, "free_abelian"},
    {Family::heisenberg, "heisenberg"},
    {Family::klein_bottle, "klein_bottle"},
    {Family::surface, "surface"},
    {Family::torus_bundle, "torus_bundle"},
    {Family::free_product, "free_product"},
    {Family::direct_product_with_Z, "direct_product_with_Z"},
}};

void append_varint(ByteKey& out, std::uint64_t v) {
  do {
    auto byte = static_cast<unsigned char>(v & 0x7f);
    v >>= 7;
    if (v != 0) byte |= 0x80;
    out.push_back(static_cast<char>(byte));
  } while (v != 0);
}

void append_word(ByteKey& out, const rewrite::Word& w) {
  for (const auto& x : w) append_varint(out, x.code());
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& [fam, name] : kFamilyNames) {
    if (fam == f) return name;
  }
  return "unknown";
}

Family parse_family(const std::string& name) {
  for (const auto& [fam, n] : kFamilyNames) {
    if (name == n) return fam;
  }
  throw InvalidSpec("unknown group family '" + name + "'");
}

GroupSpec GroupSpec::trivial() { return {}; }

GroupSpec GroupSpec::cyclic(std::int64_t m) {
  GroupSpec s;
  s.family = Family::cyclic;
  s.param = m;
  return s;
}

GroupSpec GroupSpec::free(std::int64_t rank) {
  GroupSpec s;
  s.family = Family::free;
  s.param = rank;
  return s;
}

GroupSpec GroupSpec::free_abelian(std::int64_t rank) {
  GroupSpec s;
  s.family = Family::free_abelian;
  s.param = rank;
  return s;
}

GroupSpec GroupSpec::heisenberg() {
  GroupSpec s;
  s.family = Family::heisenberg;
  return s;
}

GroupSpec GroupSpec::klein_bottle() {
  GroupSpec s;
  s.family = Family::klein_bottle;
  return s;
}

GroupSpec GroupSpec::surface(std::int64_t genus) {
  GroupSpec s;
  s.family = Family::surface;
  s.param = genus;
  return s;
}

GroupSpec GroupSpec::torus_bundle(const MatrixZ2& a) {
  GroupSpec s;
  s.family = Family::torus_bundle;
  s.matrix = a;
  return s;
}

GroupSpec GroupSpec::free_product(std::vector<GroupSpec> factors) {
  GroupSpec s;
  s.family = Family::free_product;
  s.factors = std::move(factors);
  return s;
}

GroupSpec GroupSpec::direct_product_with_Z(GroupSpec inner) {
  GroupSpec s;
  s.family = Family::direct_product_with_Z;
  s.factors.push_back(std::move(inner));
  return s;
}

void validate(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::trivial:
    case Family::heisenberg:
    case Family::klein_bottle:
      return;
    case Family::cyclic:
      if (spec.param < 1) throw InvalidSpec("cyclic(m) needs m >= 1");
      return;
    case Family::free:
    case Family::free_abelian:
      if (spec.param < 1) throw InvalidSpec(family_name(spec.family) + "(n) needs rank n >= 1");
      return;
    case Family::surface:
      if (spec.param < 2) throw InvalidSpec("surface(g) needs genus g >= 2");
      return;
    case Family::torus_bundle: {
      const __int128 det = spec.matrix.det();
      if (det != 1 && det != -1) {
        throw InvalidSpec("torus_bundle matrix " + spec.matrix.to_string() + " has |det| != 1");
      }
      return;
    }
    case Family::free_product:
      if (spec.factors.size() < 2) throw InvalidSpec("free_product needs at least two factors");
      for (const GroupSpec& f : spec.factors) {
        validate(f);
        const GroupOrder o = group_order(f);
        if (o.is_finite() && o.order == 1) throw InvalidSpec("free_product factors must be non-trivial");
      }
      return;
    case Family::direct_product_with_Z:
      if (spec.factors.size() != 1) throw InvalidSpec("direct_product_with_Z needs exactly one inner group");
      validate(spec.factors[0]);
      return;
  }
}

GroupOrder group_order(const GroupSpec& spec) {
  switch (spec.family) {
    case Family::trivial:
      return GroupOrder::finite(1);
    case Family::cyclic:
      return GroupOrder::finite(static_cast<std::uint64_t>(spec.param));
    default:
      return GroupOrder::infinite();
  }
}

void Group::check_width(const Integer& v) const {
  if (options_.integers == IntegerMode::checked128 && !v.fits_int128()) {
    throw ArithmeticOverflow("coordinate " + v.to_string() + " exceeds 128-bit capacity");
  }
}

GeneratingSet symmetrize(const Group& g, const std::vector<Element>& elements) {
  GeneratingSet out;
  out.symmetrized = true;
  std::unordered_set<ByteKey> seen{g.canonical_key(g.identity())};
  for (const Element& e : elements) {
    if (seen.insert(g.canonical_key(e)).second) out.elements.push_back(e);
  }
  const std::size_t originals = out.elements.size();
  for (std::size_t i = 0; i < originals; ++i) {
    Element inv = g.inv(out.elements[i]);
    if (seen.insert(g.canonical_key(inv)).second) out.elements.push_back(std::move(inv));
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class TrivialGroup final : public Group {
 public:
  using Group::Group;
  Element identity() const override { return Element::identity_payload(); }
  Element mul(const Element&, const Element&) const override { return identity(); }
  Element inv(const Element&) const override { return identity(); }
  GeneratingSet default_generators() const override { return {{}, true}; }
  std::string format(const Element&) const override { return "1"; }
  void append_key(const Element&, ByteKey&) const override {}
};

class CyclicGroup final : public Group {
 public:
  CyclicGroup(GroupSpec spec, GroupOptions options)
      : Group(std::move(spec), options), m_(this->spec().param) {}

  Element identity() const override { return Element::residue(0); }
  Element mul(const Element& a, const Element& b) const override {
    const auto s = static_cast<__int128>(a.as<payload::Residue>().value) + b.as<payload::Residue>().value;
    return Element::residue(static_cast<std::int64_t>(s % m_));
  }
  Element inv(const Element& a) const override {
    const std::int64_t r = a.as<payload::Residue>().value;
    return Element::residue(r == 0 ? 0 : m_ - r);
  }
  GeneratingSet default_generators() const override {
    if (m_ == 1) return {{}, true};
    return symmetrize(*this, {Element::residue(1)});
  }
  std::string format(const Element& a) const override {
    return std::to_string(a.as<payload::Residue>().value) + " mod " + std::to_string(m_);
  }
  void append_key(const Element& a, ByteKey& out) const override {
    const std::int64_t r = a.as<payload::Residue>().value;
    if (r != 0) append_varint(out, static_cast<std::uint64_t>(r));
  }

 private:
  std::int64_t m_;
};

class FreeGroup final : public Group {
 public:
  FreeGroup(GroupSpec spec, GroupOptions options)
      : Group(std::move(spec), options), rank_(static_cast<std::uint32_t>(this->spec().param)) {}

  Element identity() const override { return Element::word({}); }
  Element mul(const Element& a, const Element& b) const override {
    return Element::word(rewrite::free_reduce(
        rewrite::concat(a.as<payload::Word>().letters, b.as<payload::Word>().letters)));
  }
  Element inv(const Element& a) const override {
    return Element::word(rewrite::inverse(a.as<payload::Word>().letters));
  }
  GeneratingSet default_generators() const override {
    std::vector<Element> gens;
    for (std::uint32_t i = 0; i < rank_; ++i) gens.push_back(Element::word({{i, false}}));
    return symmetrize(*this, gens);
  }
  std::string format(const Element& a) const override {
    const auto& w = a.as<payload::Word>().letters;
    return w.empty() ? "1" : rewrite::format_word(w);
  }
  void append_key(const Element& a, ByteKey& out) const override {
    append_word(out, a.as<payload::Word>().letters);
  }

 private:
  std::uint32_t rank_;
};

class SurfaceGroup final : public Group {
 public:
  SurfaceGroup(GroupSpec spec, GroupOptions options)
      : Group(std::move(spec), options), relator_(static_cast<int>(this->spec().param)) {}

  const rewrite::SurfaceRelator& relator() const { return relator_; }

  Element identity() const override { return Element::word({}); }
  Element mul(const Element& a, const Element& b) const override {
    return Element::word(rewrite::dehn_reduce(
        rewrite::concat(a.as<payload::Word>().letters, b.as<payload::Word>().letters), relator_));
  }
  Element inv(const Element& a) const override {
    return Element::word(rewrite::inverse(a.as<payload::Word>().letters));
  }
  GeneratingSet default_generators() const override {
    std::vector<Element> gens;
    for (std::uint32_t i = 0; i < relator_.alphabet_size(); ++i) gens.push_back(Element::word({{i, false}}));
    return symmetrize(*this, gens);
  }
  std::string format(const Element& a) const override {
    const auto& w = a.as<payload::Word>().letters;
    return w.empty() ? "1" : rewrite::format_word(w);
  }
  void append_key(const Element& a, ByteKey& out) const override {
    append_word(out, rewrite::surface_canonical(a.as<payload::Word>().letters, relator_,
                                                options().closure_budget));
  }
  // Abelianization: exponent sums per generator.
  void append_coarse_key(const Element& a, ByteKey& out) const override {
    std::vector<std::int64_t> sums(relator_.alphabet_size(), 0);
    for (const auto& x : a.as<payload::Word>().letters) sums[x.generator] += x.inverted ? -1 : 1;
    for (std::int64_t s : sums) Integer(s).append_key(out);
  }
  bool equal(const Element& a, const Element& b) const override {
    return rewrite::dehn_equal(a.as<payload::Word>().letters, b.as<payload::Word>().letters, relator_);
  }
  bool keys_may_exceed_budget() const override { return true; }

 private:
  rewrite::SurfaceRelator relator_;
};

class FreeAbelianGroup final : public Group {
 public:
  FreeAbelianGroup(GroupSpec spec, GroupOptions options)
      : Group(std::move(spec), options), rank_(static_cast<std::size_t>(this->spec().param)) {}

  Element identity() const override { return Element::lattice(std::vector<Integer>(rank_)); }
  Element mul(const Element& a, const Element& b) const override {
    const auto& x = a.as<payload::Lattice>().coords;
    const auto& y = b.as<payload::Lattice>().coords;
    std::vector<Integer> out(rank_);
    for (std::size_t i = 0; i < rank_; ++i) {
      out[i] = x[i] + y[i];
      check_width(out[i]);
    }
    return Element::lattice(std::move(out));
  }
  Element inv(const Element& a) const override {
    std::vector<Integer> out;
    for (const Integer& c : a.as<payload::Lattice>().coords) {
      out.push_back(-c);
      check_width(out.back());
    }
    return Element::lattice(std::move(out));
  }
  GeneratingSet default_generators() const override {
    std::vector<Element> gens;
    for (std::size_t i = 0; i < rank_; ++i) {
      std::vector<Integer> e(rank_);
      e[i] = 1;
      gens.push_back(Element::lattice(std::move(e)));
    }
    return symmetrize(*this, gens);
  }
  std::string format(const Element& a) const override {
    std::string s = "(";
    const auto& c = a.as<payload::Lattice>().coords;
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + c[i].to_string();
    return s + ")";
  }
  void append_key(const Element& a, ByteKey& out) const override {
    for (const Integer& c : a.as<payload::Lattice>().coords) c.append_key(out);
  }

 private:
  std::size_t rank_;
};

class HeisenbergGroup final : public Group {
 public:
  using Group::Group;
  Element identity() const override { return Element::heisenberg(0, 0, 0); }
  Element mul(const Element& a, const Element& b) const override {
    const auto& p = a.as<payload::Heisenberg>();
    const auto& q = b.as<payload::Heisenberg>();
    Element r = Element::heisenberg(p.x + q.x, p.y + q.y, p.z + q.z + p.x * q.y);
    check(r);
    return r;
  }
  Element inv(const Element& a) const override {
    const auto& p = a.as<payload::Heisenberg>();
    Element r = Element::heisenberg(-p.x, -p.y, p.x * p.y - p.z);
    check(r);
    return r;
  }
  GeneratingSet default_generators() const override {
    return symmetrize(*this, {Element::heisenberg(1, 0, 0), Element::heisenberg(0, 1, 0)});
  }
  std::string format(const Element& a) const override {
    const auto& p = a.as<payload::Heisenberg>();
    return "(" + p.x.to_string() + "," + p.y.to_string() + "," + p.z.to_string() + ")";
  }
  void append_key(const Element& a, ByteKey& out) const override {
    const auto& p = a.as<payload::Heisenberg>();
    p.x.append_key(out);
    p.y.append_key(out);
    p.z.append_key(out);
  }

 private:
  void check(const Element& e) const {
    const auto& p = e.as<payload::Heisenberg>();
    check_width(p.x);
    check_width(p.y);
    check_width(p.z);
  }
};

class KleinBottleGroup final : public Group {
 public:
  using Group::Group;
  Element identity() const override { return Element::klein(0, 0); }
  Element mul(const Element& a, const Element& b) const override {
    const auto& p = a.as<payload::Klein>();
    const auto& q = b.as<payload::Klein>();
    Element r = Element::klein(p.n.is_odd() ? p.m - q.m : p.m + q.m, p.n + q.n);
    check_width(r.as<payload::Klein>().m);
    check_width(r.as<payload::Klein>().n);
    return r;
  }
  Element inv(const Element& a) const override {
    const auto& p = a.as<payload::Klein>();
    // m + (-1)^n m' = 0  =>  m' = (-1)^(n+1) m
    Element r = Element::klein(p.n.is_odd() ? p.m : -p.m, -p.n);
    check_width(r.as<payload::Klein>().m);
    check_width(r.as<payload::Klein>().n);
    return r;
  }
  GeneratingSet default_generators() const override {
    return symmetrize(*this, {Element::klein(1, 0), Element::klein(0, 1)});
  }
  std::string format(const Element& a) const override {
    const auto& p = a.as<payload::Klein>();
    return "(" + p.m.to_string() + "," + p.n.to_string() + ")";
  }
  void append_key(const Element& a, ByteKey& out) const override {
    const auto& p = a.as<payload::Klein>();
    p.m.append_key(out);
    p.n.append_key(out);
  }
};

struct Mat2 {
  Integer a, b, c, d;
};

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat_pow(Mat2 base, std::uint64_t e) {
  Mat2 acc{1, 0, 0, 1};
  while (e != 0) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

class TorusBundleGroup final : public Group {
 public:
  static constexpr std::int64_t kCachedPowers = 64;

  TorusBundleGroup(GroupSpec spec, GroupOptions options) : Group(std::move(spec), options) {
    validate(this->spec());
    const MatrixZ2& m = this->spec().matrix;
    forward_ = {m.a, m.b, m.c, m.d};
    // A^-1 = adj(A) / det with det = +-1.
    const std::int64_t det = static_cast<std::int64_t>(m.det());
    backward_ = {Integer(m.d) * det, Integer(-m.b) * det, Integer(-m.c) * det, Integer(m.a) * det};
    powers_.reserve(2 * kCachedPowers + 1);
    for (std::int64_t n = -kCachedPowers; n <= kCachedPowers; ++n) powers_.push_back(compute_power(n));
  }

  Element identity() const override { return Element::torus(0, 0, 0); }
  Element mul(const Element& a, const Element& b) const override {
    const auto& p = a.as<payload::TorusBundle>();
    const auto& q = b.as<payload::TorusBundle>();
    Integer v1 = p.v1;
    Integer v2 = p.v2;
    if (!q.v1.is_zero() || !q.v2.is_zero()) {
      const Mat2 pw = power(p.n);
      v1 += pw.a * q.v1 + pw.b * q.v2;
      v2 += pw.c * q.v1 + pw.d * q.v2;
    }
    Element r = Element::torus(std::move(v1), std::move(v2), p.n + q.n);
    check(r);
    return r;
  }
  // (v, n)^-1 = (-A^-n v, -n)
  Element inv(const Element& a) const override {
    const auto& p = a.as<payload::TorusBundle>();
    const Integer neg = -p.n;
    const Mat2 pw = power(neg);
    Element r = Element::torus(-(pw.a * p.v1 + pw.b * p.v2), -(pw.c * p.v1 + pw.d * p.v2), neg);
    check(r);
    return r;
  }
  GeneratingSet default_generators() const override {
    return symmetrize(*this, {Element::torus(1, 0, 0), Element::torus(0, 1, 0), Element::torus(0, 0, 1)});
  }
  std::string format(const Element& a) const override {
    const auto& p = a.as<payload::TorusBundle>();
    return "((" + p.v1.to_string() + "," + p.v2.to_string() + ")," + p.n.to_string() + ")";
  }
  void append_key(const Element& a, ByteKey& out) const override {
    const auto& p = a.as<payload::TorusBundle>();
    p.v1.append_key(out);
    p.v2.append_key(out);
    p.n.append_key(out);
  }

 private:
  Mat2 compute_power(std::int64_t n) const {
    return n >= 0 ? mat_pow(forward_, static_cast<std::uint64_t>(n))
                  : mat_pow(backward_, static_cast<std::uint64_t>(-n));
  }
  Mat2 power(const Integer& n) const {
    if (!n.fits_int64()) throw ArithmeticOverflow("torus bundle exponent out of range");
    const std::int64_t e = n.to_int64();
    if (e >= -kCachedPowers && e <= kCachedPowers) return powers_[static_cast<std::size_t>(e + kCachedPowers)];
    return compute_power(e);
  }
  void check(const Element& e) const {
    const auto& p = e.as<payload::TorusBundle>();
    check_width(p.v1);
    check_width(p.v2);
    check_width(p.n);
  }

  Mat2 forward_;
  Mat2 backward_;
  std::vector<Mat2> powers_;
};

class FreeProductGroup final : public Group {
 public:
  FreeProductGroup(GroupSpec spec, GroupOptions options) : Group(std::move(spec), options) {
    for (const GroupSpec& f : this->spec().factors) factors_.push_back(make_group(f, options));
  }

  Element identity() const override { return Element::free_product({}); }
  Element mul(const Element& a, const Element& b) const override {
    std::vector<payload::Syllable> out = a.as<payload::FreeProduct>().syllables;
    const auto& rhs = b.as<payload::FreeProduct>().syllables;
    std::size_t i = 0;
    while (i < rhs.size() && !out.empty() && out.back().factor == rhs[i].factor) {
      const Group& f = *factors_[rhs[i].factor];
      Element merged = f.mul(out.back().value, rhs[i].value);
      ++i;
      if (f.is_identity(merged)) {
        out.pop_back();
      } else {
        out.back().value = std::move(merged);
        break;
      }
    }
    out.insert(out.end(), rhs.begin() + static_cast<std::ptrdiff_t>(i), rhs.end());
    return Element::free_product(std::move(out));
  }
  Element inv(const Element& a) const override {
    const auto& s = a.as<payload::FreeProduct>().syllables;
    std::vector<payload::Syllable> out;
    out.reserve(s.size());
    for (auto it = s.rbegin(); it != s.rend(); ++it) out.push_back({it->factor, factors_[it->factor]->inv(it->value)});
    return Element::free_product(std::move(out));
  }
  GeneratingSet default_generators() const override {
    GeneratingSet out{{}, true};
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      for (Element& e : factors_[i]->default_generators().elements) {
        out.elements.push_back(Element::free_product({{i, std::move(e)}}));
      }
    }
    return out;
  }
  std::string format(const Element& a) const override {
    const auto& s = a.as<payload::FreeProduct>().syllables;
    if (s.empty()) return "1";
    std::string out;
    for (const auto& syl : s) {
      if (!out.empty()) out += " * ";
      out += "[" + std::to_string(syl.factor) + ":" + factors_[syl.factor]->format(syl.value) + "]";
    }
    return out;
  }
  // Inner keys are length-prefixed so concatenations stay injective.
  void append_key(const Element& a, ByteKey& out) const override {
    for (const auto& syl : a.as<payload::FreeProduct>().syllables) {
      const ByteKey inner = factors_[syl.factor]->canonical_key(syl.value);
      append_varint(out, syl.factor);
      append_varint(out, inner.size());
      out += inner;
    }
  }
  void append_coarse_key(const Element& a, ByteKey& out) const override {
    for (const auto& syl : a.as<payload::FreeProduct>().syllables) {
      const ByteKey inner = factors_[syl.factor]->coarse_key(syl.value);
      append_varint(out, syl.factor);
      append_varint(out, inner.size());
      out += inner;
    }
  }
  bool equal(const Element& a, const Element& b) const override {
    const auto& x = a.as<payload::FreeProduct>().syllables;
    const auto& y = b.as<payload::FreeProduct>().syllables;
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].factor != y[i].factor || !factors_[x[i].factor]->equal(x[i].value, y[i].value)) return false;
    }
    return true;
  }
  bool keys_may_exceed_budget() const override {
    for (const auto& f : factors_) {
      if (f->keys_may_exceed_budget()) return true;
    }
    return false;
  }

 private:
  std::vector<GroupHandle> factors_;
};

class CentralProductGroup final : public Group {
 public:
  CentralProductGroup(GroupSpec spec, GroupOptions options)
      : Group(std::move(spec), options), inner_(make_group(this->spec().inner(), options)) {}

  Element identity() const override { return Element::central(0, inner_->identity()); }
  Element mul(const Element& a, const Element& b) const override {
    const auto& p = a.as<payload::CentralPair>();
    const auto& q = b.as<payload::CentralPair>();
    Integer n = p.n + q.n;
    check_width(n);
    return Element::central(std::move(n), inner_->mul(*p.inner, *q.inner));
  }
  Element inv(const Element& a) const override {
    const auto& p = a.as<payload::CentralPair>();
    return Element::central(-p.n, inner_->inv(*p.inner));
  }
  GeneratingSet default_generators() const override {
    GeneratingSet out{{}, true};
    out.elements.push_back(Element::central(1, inner_->identity()));
    out.elements.push_back(Element::central(-1, inner_->identity()));
    for (Element& e : inner_->default_generators().elements) out.elements.push_back(Element::central(0, std::move(e)));
    return out;
  }
  std::string format(const Element& a) const override {
    const auto& p = a.as<payload::CentralPair>();
    return "(" + p.n.to_string() + "; " + inner_->format(*p.inner) + ")";
  }
  void append_key(const Element& a, ByteKey& out) const override {
    const auto& p = a.as<payload::CentralPair>();
    p.n.append_key(out);
    inner_->append_key(*p.inner, out);
  }
  void append_coarse_key(const Element& a, ByteKey& out) const override {
    const auto& p = a.as<payload::CentralPair>();
    p.n.append_key(out);
    inner_->append_coarse_key(*p.inner, out);
  }
  bool equal(const Element& a, const Element& b) const override {
    const auto& p = a.as<payload::CentralPair>();
    const auto& q = b.as<payload::CentralPair>();
    return p.n == q.n && inner_->equal(*p.inner, *q.inner);
  }
  bool keys_may_exceed_budget() const override { return inner_->keys_may_exceed_budget(); }

 private:
  GroupHandle inner_;
};

}  // namespace

GroupHandle make_group(const GroupSpec& spec, GroupOptions options) {
  validate(spec);
  switch (spec.family) {
    case Family::trivial:
      return std::make_shared<TrivialGroup>(spec, options);
    case Family::cyclic:
      if (spec.param == 1) return std::make_shared<TrivialGroup>(spec, options);
      return std::make_shared<CyclicGroup>(spec, options);
    case Family::free:
      return std::make_shared<FreeGroup>(spec, options);
    case Family::free_abelian:
      return std::make_shared<FreeAbelianGroup>(spec, options);
    case Family::heisenberg:
      return std::make_shared<HeisenbergGroup>(spec, options);
    case Family::klein_bottle:
      return std::make_shared<KleinBottleGroup>(spec, options);
    case Family::surface:
      return std::make_shared<SurfaceGroup>(spec, options);
    case Family::torus_bundle:
      return std::make_shared<TorusBundleGroup>(spec, options);
    case Family::free_product:
      return std::make_shared<FreeProductGroup>(spec, options);
    case Family::direct_product_with_Z:
      return std::make_shared<CentralProductGroup>(spec, options);
  }
  throw InvalidSpec("unsupported family");
}

}  // namespace growth
