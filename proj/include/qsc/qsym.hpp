#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/composition.hpp"

namespace qsc {

using Coeff = std::int64_t;
using CoeffMap = std::map<Composition, Coeff, GrevlexLess>;

// Overflow-checked coefficient arithmetic; throws std::overflow_error.
Coeff checked_add(Coeff a, Coeff b);
Coeff checked_mul(Coeff a, Coeff b);

// A homogeneous quasisymmetric function in the monomial basis. Zero
// coefficients are never stored.
class MExpr {
 public:
  explicit MExpr(int degree = 0) : degree_(degree) {}
  static MExpr monomial(const Composition& alpha, Coeff c = 1);

  int degree() const noexcept { return degree_; }
  const CoeffMap& coeffs() const noexcept { return coeffs_; }
  Coeff coefficient(const Composition& alpha) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Throws std::invalid_argument if |alpha| != degree().
  void add(const Composition& alpha, Coeff c);

  // Degrees must match unless one side is zero.
  MExpr& operator+=(const MExpr& other);
  MExpr& operator-=(const MExpr& other);
  MExpr& operator*=(Coeff c);
  friend MExpr operator+(MExpr a, const MExpr& b) { return a += b; }
  friend MExpr operator-(MExpr a, const MExpr& b) { return a -= b; }
  friend MExpr operator*(MExpr a, Coeff c) { return a *= c; }
  friend MExpr operator*(Coeff c, MExpr a) { return a *= c; }

  friend bool operator==(const MExpr& a, const MExpr& b) {
    return (a.is_zero() && b.is_zero()) || (a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_);
  }

 private:
  int degree_ = 0;
  CoeffMap coeffs_;
};

enum class Basis {
  Monomial,        // M
  Fundamental,     // F
  YoungQS,         // Young quasisymmetric Schur
  DualImmaculate,  // dual immaculate quasisymmetric
  Immaculate,      // NSym, coefficient data only
  YoungNCSchur,    // NSym, coefficient data only
};

// "monomial", "fundamental", "youngqs", "dualimmaculate", "immaculate", "youngncschur".
std::string to_string(Basis b);
// Also accepts hyphenated CLI spellings ("young-qs", "dual-immaculate", ...)
// and the single letters "M" and "F".
Basis parse_basis(std::string_view name);
bool is_qsym_basis(Basis b);

struct BasisExpansion {
  Basis basis = Basis::Monomial;
  int degree = 0;
  CoeffMap coeffs;

  Coeff coefficient(const Composition& alpha) const;
  void add(const Composition& alpha, Coeff c);
  friend bool operator==(const BasisExpansion&, const BasisExpansion&) = default;
};

// F_alpha as the sum of M_beta over refinements beta of alpha.
MExpr f_to_m(const Composition& alpha);
// Inverse change of basis: M_alpha = sum over refinements beta of
// (-1)^(l(beta) - l(alpha)) F_beta.
BasisExpansion m_to_f(const MExpr& f);

// F-expansions from standard tableaux bucketed by descent set.
BasisExpansion yqs_f_expansion(const Composition& alpha);
BasisExpansion dimm_f_expansion(const Composition& alpha);

// Monomial expansion of a single QSym basis element (M, F, YoungQS or
// DualImmaculate). Cached per composition.
MExpr basis_element(Basis b, const Composition& alpha);
// Monomial expansion of a QSym-side expansion.
MExpr to_mexpr(const BasisExpansion& e);

// Brute-force M-coefficient of gamma in the YoungQS or DualImmaculate
// element indexed by alpha: the number of semistandard fillings of the
// right kind with weight exactly gamma. Throws on |alpha| != |gamma|.
Coeff monomial_coefficient_oracle(Basis b, const Composition& alpha, const Composition& gamma);

// Schur function s_lambda as the sum of YoungQS elements over the distinct
// rearrangements of lambda. Throws for non-partitions.
MExpr schur_m_expansion(const Composition& lambda);

// Product in QSym (overlapping shuffle in M coordinates).
MExpr quasi_shuffle(const MExpr& f, const MExpr& g);

// Exact change of basis into F, YoungQS or DualImmaculate by a rational
// linear solve. Throws std::logic_error if the solution is not integral.
BasisExpansion expand_in(const MExpr& f, Basis target);

// Coefficients constant on rearrangement classes.
bool is_symmetric(const MExpr& f);

// Dual immaculate -> YoungQS by counting DIRTs of shape beta with row strip
// shape reverse(alpha).
BasisExpansion dimm_to_yqs(const Composition& alpha);
// YoungNCSchur -> Immaculate: coefficient of beta is the number of DIRTs of
// shape alpha with row strip shape reverse(beta).
BasisExpansion yns_to_imm(const Composition& alpha);

struct CoefficientWitness {
  Composition alpha;
  Composition beta;
  Coeff value = 0;
};

struct SumRuleWitness {
  Composition alpha;
  Coeff expected = 0;
  Coeff actual = 0;
};

struct AlternatingWitness {
  Composition lambda;
  Composition beta;
  Coeff expected = 0;
  Coeff actual = 0;
};

// Empirical check of the YoungQS -> DualImmaculate expansion conjectures in
// degree n. Findings are reported, never thrown.
struct ConjectureReport {
  int n = 0;
  std::map<Composition, BasisExpansion, GrevlexLess> expansions;  // alpha -> b_{alpha,*}
  std::vector<CoefficientWitness> range_violations;                // b outside {-1,0,1}
  std::vector<SumRuleWitness> sum_rule_violations;
  std::vector<AlternatingWitness> alternating_violations;
  std::size_t distinct_part_partitions_checked = 0;

  bool coefficient_conjecture_holds() const {
    return range_violations.empty() && sum_rule_violations.empty();
  }
  bool alternating_conjecture_holds() const { return alternating_violations.empty(); }
};

ConjectureReport check_conjectures(int n);

// True for (1^k, n-k): every part but the last equals 1.
bool is_hook_shape(const Composition& alpha);

}  // namespace qsc
