#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polystrata/strata.hpp"

namespace polystrata {

using Rational = mpq_class;

/// X^n + c_{n-1} X^{n-1} + ... + c_0.  Coefficients are held in floating
/// point; `exact` is present when the input was rational.
struct MonicPolynomial {
  std::vector<double> coefficients;  // c_0 .. c_{n-1}
  std::optional<std::vector<Rational>> exact;

  static MonicPolynomial from_exact(std::vector<Rational> c);
  static MonicPolynomial from_double(std::vector<double> c);
  /// Ascending coefficients c_0, ..., c_n with c_n = 1, e.g. "1,-2,1".
  /// Entries may be integers, fractions "p/q" or decimals.
  static MonicPolynomial parse(std::string_view text);

  [[nodiscard]] int degree() const { return static_cast<int>(coefficients.size()); }
  [[nodiscard]] std::string to_string() const;
};

struct Normalization {
  MonicPolynomial g;
  double rho = 1;
  double gamma = 0;
};

/// The unique X -> ρX + γ (ρ > 0) taking f to X^n + d_{n-2}X^{n-2} + ...
/// with Σ d_i^2 = 1; g(X) = f(ρX + γ) / ρ^n.  Throws InvalidInput for
/// (X + α)^n and InvariantViolation if bisection fails.
Normalization affine_normalize(const MonicPolynomial& f);

/// f(ρX + γ) / ρ^n.
MonicPolynomial affine_transform(const MonicPolynomial& f, double rho, double gamma);

/// Real roots (strictly increasing) with multiplicities, times elliptic
/// quadratics X^2 + pX + q with p^2 < 4q.
class FactoredPolynomial {
 public:
  struct Root {
    Rational value;
    int multiplicity;
  };
  struct Quadratic {
    Rational p;
    Rational q;
  };

  FactoredPolynomial(std::vector<Root> roots, std::vector<Quadratic> quadratics);
  /// "(x-1)^2 (x-3) (x^2+1)".  Repeated linear factors are combined.
  static FactoredPolynomial parse(std::string_view text);

  [[nodiscard]] const std::vector<Root>& roots() const { return roots_; }
  [[nodiscard]] const std::vector<Quadratic>& quadratics() const { return quadratics_; }
  [[nodiscard]] int degree() const;
  [[nodiscard]] MonicPolynomial expand() const;
  [[nodiscard]] std::string to_string() const;

 private:
  std::vector<Root> roots_;
  std::vector<Quadratic> quadratics_;
};

StratumCell cell_of(const FactoredPolynomial& f);

/// Multiplies by (X^2 + 1)^{(m - n)/2}.
FactoredPolynomial stabilize(const FactoredPolynomial& f, int m);

/// Exact rational from "3", "-1/2", "0.25" or "1e-3".
Rational parse_rational(std::string_view text);

}  // namespace polystrata
