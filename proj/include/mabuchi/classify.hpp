#pragma once

#include <string>
#include <vector>

#include "mabuchi/admissible.hpp"
#include "mabuchi/polynomial.hpp"
#include "mabuchi/rational.hpp"
#include "mabuchi/weight.hpp"

namespace mabuchi {

/// b_i = integral over [-1, 1] of x^i p(x).
struct Moments {
  BigRational b0;
  BigRational b1;
  BigRational b2;

  /// b0 b2 - b1^2, positive by Cauchy-Schwarz.
  BigRational gram() const { return b0 * b2 - b1 * b1; }
};

/// Throws InvariantViolation unless b0 > 0, b2 > 0 and b0 b2 - b1^2 > 0.
Moments moments(const Polynomial& p);

/// Coefficients of the projection alpha z + beta of 1 - e^h onto Killing
/// potentials.
struct ProjectionCoefficients {
  BigRational alpha;
  BigRational beta;

  /// max over [-1, 1] of alpha x + beta.
  BigRational max_on_interval() const { return abs(alpha) + beta; }
};

ProjectionCoefficients projection_coefficients(const AdmissibleManifold& m);
ProjectionCoefficients projection_coefficients(const Moments& b, const BigRational& w);

/// Both closed forms of the Mabuchi constant:
///   quotient:    (b0 |F| - b1 F) / (b0 b2 - b1^2)
///   unit offset: 1 + b0 (|F| - (b2 - w b1)) / (b0 b2 - b1^2)
/// with F = b1 - w b0.
struct MabuchiForms {
  BigRational quotient;
  BigRational unit_offset;
  bool agree() const { return quotient == unit_offset; }
};

MabuchiForms mabuchi_forms(const Moments& b, const BigRational& w);

/// Exact Mabuchi constant M_X. Throws InvariantViolation if the two closed
/// forms disagree.
BigRational mabuchi_constant(const AdmissibleManifold& m);

/// integral over [-1, 1] of (x - w) u(x) p(x). Zero iff an admissible soliton
/// for the weight u exists. Throws UnsupportedWeight for exponential weights.
BigRational futaki_pairing(const AdmissibleManifold& m, const Weight& u);

struct ClassificationReport {
  Moments moments;
  BigRational w;
  /// b1 - w b0, the Futaki pairing for u = 1.
  BigRational futaki;
  ProjectionCoefficients projection;
  BigRational mabuchi_constant;
  /// Which closed form produced mabuchi_constant; the other is cross-checked.
  std::string mabuchi_form;
  bool forms_agree = false;
  bool ke_exists = false;
  bool mabuchi_soliton_exists = false;
  /// A Kähler-Ricci soliton exists on every Fano admissible manifold.
  bool kr_soliton_exists = true;
  std::vector<std::string> notes;
};

ClassificationReport classify(const AdmissibleManifold& m);

}  // namespace mabuchi
