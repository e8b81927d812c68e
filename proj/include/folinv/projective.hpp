#pragma once

#include "folinv/germ.hpp"
#include "folinv/report.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace folinv {

/// Omega = A dx + B dy + C dz with A, B, C homogeneous of degree d + 1 in x, y, z.
struct ProjectiveFoliation {
  Poly A{3}, B{3}, C{3};
  int degree = 0;
};

class EulerViolation : public InvalidInput {
public:
  explicit EulerViolation(const Poly& residual)
      : InvalidInput("Euler condition fails: Ax + By + Cz = " + residual.str()), residual_(residual) {}
  const Poly& residual() const { return residual_; }

private:
  Poly residual_;
};

struct Validation {
  int degree = 0;
  std::vector<std::string> diagnostics;
};

/// Checks homogeneity, equal degrees, the Euler identity and gcd(A, B, C) = 1.
Validation validate(const Poly& A, const Poly& B, const Poly& C);
ProjectiveFoliation make_projective(const Poly& A, const Poly& B, const Poly& C);

enum class Axis { X = 0, Y = 1, Z = 2 };
std::string to_string(Axis a);

/// Rational point of P^2, normalized so its last nonzero coordinate is 1.
struct ProjectivePoint {
  std::array<Rational, 3> coords;
  Axis chart() const;
  std::string str() const;
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

ProjectivePoint make_point(const Rational& a, const Rational& b, const Rational& c);

/// Affine 1-form in the chart where the given coordinate is 1, at the chart origin.
FoliationGerm chart(const ProjectiveFoliation& W, Axis which);

/// Germ at p in the given chart (default: the chart of p's last nonzero coordinate).
FoliationGerm germ_at(const ProjectiveFoliation& W, const ProjectivePoint& p, std::optional<Axis> which = {});
Poly curve_at(const Poly& f, const ProjectivePoint& p, std::optional<Axis> which = {});

/// Omega ^ df = f Theta: every 2-form coefficient of Omega ^ df is divisible by f.
bool invariance_projective(const ProjectiveFoliation& W, const Poly& f);

/// Sum of mu over the listed points against d^2 + d + 1.
CheckReport milnor_sum_certificate(const ProjectiveFoliation& W, const std::vector<ProjectivePoint>& points);

/// Both global Tjurina bounds for an invariant reduced curve containing the listed singular set,
/// the germ of the curve at each point serving as zero divisor.
CheckReport check_global_bound(const ProjectiveFoliation& W, const Poly& curve, const std::vector<ProjectivePoint>& points);

/// Validation report with optional certificate and invariance checks.
CheckReport validation_report(const ProjectiveFoliation& W, const std::optional<Poly>& curve,
                              const std::vector<ProjectivePoint>& points);

} // namespace folinv
