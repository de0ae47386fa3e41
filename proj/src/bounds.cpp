#include "growth/bounds.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "growth/errors.hpp"
#include "growth/numeric.hpp"

namespace growth {

double PowerOfTwo::value() const { return std::pow(2.0, static_cast<double>(num) / static_cast<double>(den)); }

std::string PowerOfTwo::exact_form() const {
  if (num == 1 && den == 2) return "sqrt(2)";
  if (den == 1) return "2^" + std::to_string(num);
  return "2^(" + std::to_string(num) + "/" + std::to_string(den) + ")";
}

namespace {

const std::array<std::pair<Theorem, const char*>, 9> kTheoremNames{{
    {Theorem::surface_4g3, "surface_4g3"},
    {Theorem::surface_2g1, "surface_2g1"},
    {Theorem::bucher_free_product, "bucher_free_product"},
    {Theorem::bucher_harpe_amalgam, "bucher_harpe_amalgam"},
    {Theorem::bucher_harpe_hnn, "bucher_harpe_hnn"},
    {Theorem::osin_polycyclic, "osin_polycyclic"},
    {Theorem::solvable_universal, "solvable_universal"},
    {Theorem::bcg, "bcg"},
    {Theorem::universal_C, "universal_C"},
}};

BoundReport finish(BoundReport r, double value, std::optional<std::string> exact = std::nullopt) {
  r.hypotheses_ok = std::all_of(r.hypotheses.begin(), r.hypotheses.end(), [](const auto& h) { return h.ok; });
  if (r.hypotheses_ok) {
    r.value = value;
    r.exact_form = std::move(exact);
  }
  return r;
}

std::string order_string(const GroupOrder& o) { return o.is_finite() ? std::to_string(o.order) : "inf"; }

}  // namespace

std::string to_string(Theorem t) {
  for (const auto& [th, name] : kTheoremNames) {
    if (th == t) return name;
  }
  return "unknown";
}

Theorem parse_theorem(const std::string& name) {
  for (const auto& [th, n] : kTheoremNames) {
    if (name == n) return th;
  }
  if (name == "osin") return Theorem::osin_polycyclic;
  if (name == "surface") return Theorem::surface_4g3;
  if (name == "free_product") return Theorem::bucher_free_product;
  if (name == "amalgam") return Theorem::bucher_harpe_amalgam;
  if (name == "hnn") return Theorem::bucher_harpe_hnn;
  if (name == "solvable") return Theorem::solvable_universal;
  if (name == "universal") return Theorem::universal_C;
  throw ParseError("unknown theorem '" + name + "'");
}

// ---------------------------------------------------------------------------

QuadraticValue lambda_max(const MatrixZ2& a) {
  const Integer t = Integer::from_int128(a.trace());
  const Integer d = Integer::from_int128(a.det());
  const Integer disc = t * t - d * 4;
  if (disc.sign() >= 0) return {abs(t), 1, disc};
  return {0, 2, d};  // complex pair: |lambda|^2 = det > 0
}

bool satisfies_characteristic(const MatrixZ2& a, const QuadraticValue& lambda) {
  const Integer t = Integer::from_int128(a.trace());
  const Integer d = Integer::from_int128(a.det());
  const Integer disc = t * t - d * 4;
  const Integer& p = lambda.p();
  const Integer& q = lambda.q();
  const Integer& r = lambda.radicand();
  if (disc.sign() < 0) {
    // 4 lambda^2 = p^2 + q^2 r + 2pq sqrt(r) must equal 4 det.
    return sign_of(p * p + q * q * r - d * 4, p * q * 2, r) == 0;
  }
  // 4 (s lambda)^2 - 4 t (s lambda) + 4 d with s = +-1:
  //   (p^2 + q^2 r - 2 s t p + 4d) + (2pq - 2 s t q) sqrt(r)
  for (int s : {1, -1}) {
    const Integer st = t * s;
    if (sign_of(p * p + q * q * r - st * p * 2 + d * 4, p * q * 2 - st * q * 2, r) == 0) return true;
  }
  return false;
}

bool is_hyperbolic(const MatrixZ2& a) {
  const __int128 det = a.det();
  if (det != 1 && det != -1) return false;
  // With |det| = 1 the root moduli multiply to 1, so both differ from 1 iff the largest does.
  return lambda_max(a) != QuadraticValue::integer(1);
}

double osin_value(const QuadraticValue& lambda) {
  const long double l = std::log(lambda.to_long_double());
  return static_cast<double>(std::pow(2.0L, l / (std::log(2.0L) + l)));
}

BoundReport osin_bound(const MatrixZ2& a) {
  BoundReport r;
  r.theorem = Theorem::osin_polycyclic;
  const QuadraticValue lambda = lambda_max(a);
  const __int128 det = a.det();
  r.hypotheses.push_back({"abs_det_one", det == 1 || det == -1,
                          "det = " + std::to_string(static_cast<long long>(det))});
  r.hypotheses.push_back({"no_unit_modulus_eigenvalue", lambda != QuadraticValue::integer(1),
                          "Lambda(A) = " + lambda.to_string()});
  r.notes.push_back("matrix " + a.to_string() + ", Lambda(A) = " + lambda.to_string() + " ~ " +
                    format12(static_cast<double>(lambda.to_long_double())));
  const bool ok = r.hypotheses[0].ok && r.hypotheses[1].ok;
  return finish(std::move(r), ok ? osin_value(lambda) : 0.0,
                "2^(log(" + lambda.to_string() + ")/(log(2)+log(" + lambda.to_string() + ")))");
}

// ---------------------------------------------------------------------------

BoundReport surface_bound(std::int64_t genus) {
  if (genus < 2) throw InvalidGenus("surface bound needs genus >= 2 (genus " + std::to_string(genus) + ")");
  BoundReport r;
  r.theorem = Theorem::surface_4g3;
  r.hypotheses.push_back({"genus_at_least_2", true, "g = " + std::to_string(genus)});
  r.notes.push_back("weaker companion bound 2g-1 = " + std::to_string(2 * genus - 1));
  return finish(std::move(r), static_cast<double>(4 * genus - 3), std::to_string(4 * genus - 3));
}

BoundReport surface_weak_bound(std::int64_t genus) {
  if (genus < 2) throw InvalidGenus("surface bound needs genus >= 2 (genus " + std::to_string(genus) + ")");
  BoundReport r;
  r.theorem = Theorem::surface_2g1;
  r.hypotheses.push_back({"genus_at_least_2", true, "g = " + std::to_string(genus)});
  return finish(std::move(r), static_cast<double>(2 * genus - 1), std::to_string(2 * genus - 1));
}

BoundReport free_product_bound(const std::vector<GroupSpec>& factors) {
  if (factors.size() < 2) throw PreconditionViolation("free product bound needs at least two factors");
  BoundReport r;
  r.theorem = Theorem::bucher_free_product;
  std::vector<GroupOrder> orders;
  for (const GroupSpec& f : factors) orders.push_back(group_order(f));
  // finite orders ascending, infinite last
  std::sort(orders.begin(), orders.end(), [](const GroupOrder& x, const GroupOrder& y) {
    if (x.is_finite() != y.is_finite()) return x.is_finite();
    return x.order < y.order;
  });
  auto at_least = [](const GroupOrder& o, std::uint64_t n) { return !o.is_finite() || o.order >= n; };

  std::string sorted = "sorted orders:";
  for (const auto& o : orders) sorted += " " + order_string(o);
  r.hypotheses.push_back({"G1_order_at_least_2", at_least(orders[0], 2), sorted});
  if (orders.size() == 2) {
    r.hypotheses.push_back({"G2_order_at_least_3", at_least(orders[1], 3), sorted});
  } else {
    const bool rest_nontrivial = std::all_of(orders.begin() + 1, orders.end(),
                                             [&](const GroupOrder& o) { return at_least(o, 2); });
    r.hypotheses.push_back({"G2_order_at_least_3", rest_nontrivial,
                            "G2 regrouped as the free product of the remaining " +
                                std::to_string(orders.size() - 1) + " factors (infinite when non-trivial)"});
  }
  if (orders.size() == 2 && orders[0] == GroupOrder::finite(2) && orders[1] == GroupOrder::finite(2)) {
    r.notes.push_back("Z2 * Z2 is the infinite dihedral group: virtually Z, polynomial growth");
  }
  return finish(std::move(r), kSqrt2.value(), kSqrt2.exact_form());
}

std::string Index::to_string() const { return finite ? std::to_string(*finite) : "inf"; }

BoundReport amalgam_bound(Index g1, Index g2) {
  if ((g1.finite && *g1.finite < 1) || (g2.finite && *g2.finite < 1)) {
    throw PreconditionViolation("subgroup indices must be >= 1");
  }
  BoundReport r;
  r.theorem = Theorem::bucher_harpe_amalgam;
  // inf - 1 = inf; inf * 0 = 0 (an index-1 side collapses the amalgam).
  bool ok;
  if (g1.is_infinite() || g2.is_infinite()) {
    const Index& other = g1.is_infinite() ? g2 : g1;
    ok = other.is_infinite() || *other.finite >= 2;
  } else {
    ok = static_cast<unsigned __int128>(*g1.finite - 1) * (*g2.finite - 1) >= 2;
  }
  r.hypotheses.push_back({"index_product_at_least_2", ok,
                          "([G1:H]-1)([G2:H]-1) with [G1:H] = " + g1.to_string() + ", [G2:H] = " + g2.to_string()});
  return finish(std::move(r), kFourthRoot2.value(), kFourthRoot2.exact_form());
}

BoundReport hnn_bound(Index h, Index k) {
  if ((h.finite && *h.finite < 1) || (k.finite && *k.finite < 1)) {
    throw PreconditionViolation("subgroup indices must be >= 1");
  }
  BoundReport r;
  r.theorem = Theorem::bucher_harpe_hnn;
  const bool ok = h.is_infinite() || k.is_infinite() || *h.finite + *k.finite >= 3;
  r.hypotheses.push_back({"index_sum_at_least_3", ok,
                          "[G:H] + [G:K] with [G:H] = " + h.to_string() + ", [G:K] = " + k.to_string()});
  return finish(std::move(r), kFourthRoot2.value(), kFourthRoot2.exact_form());
}

void BCGConstantTable::set(int n, double a, double c) {
  if (!(c > 0)) throw DomainError("entropy constants must be positive");
  values[{n, a}] = c;
}

std::optional<double> BCGConstantTable::get(int n, double a) const {
  const auto it = values.find({n, a});
  if (it == values.end()) return std::nullopt;
  return it->second;
}

BoundReport bcg_bound(int n, double a, const BCGConstantTable& table) {
  BoundReport r;
  r.theorem = Theorem::bcg;
  const auto c = table.get(n, a);
  const std::string key = "c(" + std::to_string(n) + "," + format12(a) + ")";
  r.hypotheses.push_back({"constant_supplied", c.has_value(), c ? key + " = " + format12(*c) : key + " missing"});
  if (!c) {
    r.notes.push_back("no value for " + key + " in the constant table");
    return finish(std::move(r), 0.0);
  }
  return finish(std::move(r), std::exp(*c), "e^" + format12(*c));
}

BoundReport solvable_universal_bound() {
  BoundReport r;
  r.theorem = Theorem::solvable_universal;
  r.notes.push_back("stored constant; the matrix scan reports the minimal evaluated Osin bound separately");
  return finish(std::move(r), kSixthRoot2.value(), kSixthRoot2.exact_form());
}

std::string ExponentRule::describe() const {
  return "e(d) = 1/(" + format12(slope) + "*d + " + format12(intercept) + ")";
}

TransferResult finite_index_transfer(double omega_sub, int degree, const ExponentRule& rule) {
  if (!(omega_sub >= 1.0)) throw DomainError("omega_sub must be >= 1");
  if (degree < 1) throw DomainError("degree must be >= 1");
  TransferResult r;
  r.exponent = rule.exponent(degree);
  if (!(r.exponent > 0)) throw DomainError("exponent rule must give a positive exponent");
  r.value = std::pow(omega_sub, r.exponent);
  r.rule = rule.describe();
  return r;
}

// ---------------------------------------------------------------------------

ScanReport scan_hyperbolic(int entry_bound) {
  if (entry_bound < 0) throw PreconditionViolation("entry_bound must be >= 0");
  ScanReport rep;
  rep.entry_bound = entry_bound;
  const QuadraticValue two = QuadraticValue::integer(2);
  const std::int64_t b = entry_bound;
  for (std::int64_t a00 = -b; a00 <= b; ++a00) {
    for (std::int64_t a01 = -b; a01 <= b; ++a01) {
      for (std::int64_t a10 = -b; a10 <= b; ++a10) {
        for (std::int64_t a11 = -b; a11 <= b; ++a11) {
          const MatrixZ2 m{a00, a01, a10, a11};
          if (!is_hyperbolic(m)) continue;
          ScanRow row;
          row.matrix = m;
          row.det = static_cast<int>(m.det());
          row.trace = static_cast<std::int64_t>(m.trace());
          row.lambda = lambda_max(m);
          row.lambda_float = static_cast<double>(row.lambda.to_long_double());
          row.osin = osin_value(row.lambda);

          ClassSummary& cls = row.det == 1 ? rep.plus : rep.minus;
          ++cls.count;
          if (!cls.min_lambda || row.lambda < *cls.min_lambda) {
            cls.min_lambda = row.lambda;
            cls.min_lambda_matrix = m;
          }
          if (!cls.min_osin || row.osin < *cls.min_osin) cls.min_osin = row.osin;
          if (row.lambda <= two) {
            ++cls.lambda_at_most_2;
            cls.lambda_at_most_2_flag = true;
          }
          rep.rows.push_back(std::move(row));
        }
      }
    }
  }
  rep.notes.push_back("claim under test: Lambda(A) > 2 for every hyperbolic A in GL(2,Z)");
  for (const ClassSummary* cls : {&rep.plus, &rep.minus}) {
    if (cls->lambda_at_most_2_flag) {
      rep.notes.push_back("det=" + std::to_string(cls->det) + " class contradicts the claim: " +
                          std::to_string(cls->lambda_at_most_2) + " hyperbolic matrices with Lambda <= 2, minimum " +
                          cls->min_lambda->to_string() + " at " + cls->min_lambda_matrix->to_string());
    } else if (cls->count > 0) {
      rep.notes.push_back("det=" + std::to_string(cls->det) + " class consistent with the claim: minimum Lambda " +
                          cls->min_lambda->to_string() + " > 2");
    }
  }
  return rep;
}

}  // namespace growth
