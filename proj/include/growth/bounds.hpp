#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "growth/groups.hpp"
#include "growth/matrix.hpp"
#include "growth/quadratic.hpp"

namespace growth {

// ---------------------------------------------------------------------------
// Constants
// ---------------------------------------------------------------------------

/// 2^(num/den), kept symbolic so constants compare by exponent exactly.
struct PowerOfTwo {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const;
  std::string exact_form() const;  // "sqrt(2)", "2^(1/4)", "2^(1/6)"

  friend std::strong_ordering operator<=>(const PowerOfTwo& a, const PowerOfTwo& b) {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
  friend bool operator==(const PowerOfTwo& a, const PowerOfTwo& b) { return (a <=> b) == 0; }
};

inline constexpr PowerOfTwo kSqrt2{1, 2};        // free products
inline constexpr PowerOfTwo kFourthRoot2{1, 4};  // amalgams and HNN extensions
inline constexpr PowerOfTwo kSixthRoot2{1, 6};   // solvable (torus bundle) branch

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class Theorem {
  surface_4g3,
  surface_2g1,
  bucher_free_product,
  bucher_harpe_amalgam,
  bucher_harpe_hnn,
  osin_polycyclic,
  solvable_universal,
  bcg,
  universal_C,
};

std::string to_string(Theorem t);
Theorem parse_theorem(const std::string& name);  // also accepts "osin", "surface", ...

struct HypothesisCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};

/// `value` is set only when every hypothesis holds.
struct BoundReport {
  Theorem theorem = Theorem::universal_C;
  bool hypotheses_ok = false;
  std::vector<HypothesisCheck> hypotheses;
  std::optional<double> value;
  std::optional<std::string> exact_form;
  std::vector<std::string> notes;
};

// ---------------------------------------------------------------------------
// 2x2 spectra
// ---------------------------------------------------------------------------

/// Largest |lambda| over the roots of x^2 - tr(A) x + det(A). For a complex
/// pair the modulus sqrt(det) is returned.
QuadraticValue lambda_max(const MatrixZ2& a);

/// +lambda_max or -lambda_max is an exact root of the characteristic
/// polynomial (real spectrum), or lambda_max^2 = det (complex pair).
bool satisfies_characteristic(const MatrixZ2& a, const QuadraticValue& lambda);

/// |det A| = 1 and no eigenvalue of modulus 1, decided exactly.
bool is_hyperbolic(const MatrixZ2& a);

/// 2^(ln L / (ln 2 + ln L)) for L = lambda_max(A).
double osin_value(const QuadraticValue& lambda);
BoundReport osin_bound(const MatrixZ2& a);

// ---------------------------------------------------------------------------
// Closed-form bounds
// ---------------------------------------------------------------------------

/// 4g - 3, with the readily derived 2g - 1 recorded alongside. Throws InvalidGenus for g < 2.
BoundReport surface_bound(std::int64_t genus);
BoundReport surface_weak_bound(std::int64_t genus);

/// sqrt(2) when, after sorting factor orders, |G1| >= 2 and |G2| >= 3.
/// Three or more non-trivial factors always qualify: regroup as G1 * (G2 * ... * Gn).
BoundReport free_product_bound(const std::vector<GroupSpec>& factors);

/// Subgroup index, possibly infinite.
struct Index {
  std::optional<std::uint64_t> finite;  // nullopt: infinite

  static Index of(std::uint64_t n) { return {n}; }
  static Index infinite() { return {}; }
  bool is_infinite() const { return !finite.has_value(); }
  std::string to_string() const;
};

/// ([G1:H]-1)([G2:H]-1) >= 2, with inf - 1 = inf and inf * 0 = 0.
BoundReport amalgam_bound(Index g1, Index g2);
/// [G:H] + [G:K] >= 3.
BoundReport hnn_bound(Index h, Index k);

/// User-supplied entropy constants c(n, a) > 0, keyed by (dimension, pinching).
struct BCGConstantTable {
  std::map<std::pair<int, double>, double> values;

  void set(int n, double a, double c);  // DomainError unless c > 0
  std::optional<double> get(int n, double a) const;
};

BoundReport bcg_bound(int n, double a, const BCGConstantTable& table);

/// Literal 2^(1/6) for virtually solvable groups of exponential growth.
BoundReport solvable_universal_bound();

/// Exponent rule e(d) = 1 / (slope * d + intercept); default 1/(2d+1).
struct ExponentRule {
  double slope = 2;
  double intercept = 1;

  double exponent(int degree) const { return 1.0 / (slope * degree + intercept); }
  std::string describe() const;
};

struct TransferResult {
  double value = 1;
  double exponent = 1;
  std::string rule;
};

/// omega_sub^e(degree): a bound for a group containing the bounded one with
/// the given index. DomainError unless omega_sub >= 1 and degree >= 1.
TransferResult finite_index_transfer(double omega_sub, int degree, const ExponentRule& rule = {});

// ---------------------------------------------------------------------------
// Hyperbolic matrix scan
// ---------------------------------------------------------------------------

struct ScanRow {
  MatrixZ2 matrix;
  int det = 0;
  std::int64_t trace = 0;
  QuadraticValue lambda;
  double lambda_float = 0;
  double osin = 0;
};

struct ClassSummary {
  int det = 0;
  std::size_t count = 0;
  std::optional<QuadraticValue> min_lambda;
  std::optional<MatrixZ2> min_lambda_matrix;
  std::optional<double> min_osin;
  std::size_t lambda_at_most_2 = 0;
  bool lambda_at_most_2_flag = false;
};

inline ClassSummary with_det(int det) {
  ClassSummary s;
  s.det = det;
  return s;
}

struct ScanReport {
  int entry_bound = 0;
  std::vector<ScanRow> rows;  // hyperbolic matrices in lexicographic (a,b,c,d) order
  ClassSummary plus = with_det(+1);
  ClassSummary minus = with_det(-1);
  std::vector<std::string> notes;
};

ScanReport scan_hyperbolic(int entry_bound);

}  // namespace growth
