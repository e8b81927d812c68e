#pragma once

#include "folinv/germ.hpp"
#include "folinv/univariate.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace folinv {

/// A component of the exceptional divisor passing through the chart origin,
/// lying on the coordinate line {x = 0} (axis 0) or {y = 0} (axis 1).
struct ExceptionalMarker {
  int axis = 0;
  int component = 0;
  friend bool operator==(const ExceptionalMarker&, const ExceptionalMarker&) = default;
};

struct Chart {
  std::string coordinates;
  FoliationGerm germ;
  std::vector<ExceptionalMarker> exceptional;
};

struct BlowupResult {
  Chart chart1; // x = x1, y = x1*y1, divisor {x1 = 0}
  Chart chart2; // x = x2*y2, y = y2, divisor {y2 = 0}
  int epsilon = 0;
  int removed_power = 0;
};

/// Blows up the origin; new_component labels the exceptional line in both charts.
/// Existing markers are carried to the chart where their strict transform is visible.
BlowupResult blowup(const FoliationGerm& F, const std::vector<ExceptionalMarker>& markers = {},
                    int new_component = 1);

class IrrationalSingularPoint : public std::runtime_error {
public:
  explicit IrrationalSingularPoint(const std::string& factor)
      : std::runtime_error("singular point with irrational coordinate, factor " + factor), factor_(factor) {}
  const std::string& factor() const { return factor_; }

private:
  std::string factor_;
};

/// Parameters t with (0, t) singular on the divisor {x = 0} of chart 1.
std::vector<Rational> singular_points_on_divisor(const Chart& chart1);

/// Same for an arbitrary univariate restriction pair; exposed for testing the abort path.
std::vector<Rational> common_rational_roots(const UniPoly& a, const UniPoly& b);

enum class SingularClass { NondegenerateSimple, SaddleNode, NonSimple };
std::string to_string(SingularClass c);

struct SingularRecord {
  std::string location;
  std::vector<ExceptionalMarker> exceptional;
  /// Linear part of -Q d/dx + P d/dy at the origin, row major.
  std::array<Rational, 4> linear{};
  Rational trace;
  Rational det;
  SingularClass cls = SingularClass::NonSimple;
  bool tangent = false;
  std::string eigen;
};

/// Simple-singularity test on the linear part. A saddle-node is tangent when an
/// invariant exceptional line is tangent to the zero-eigenvalue direction.
SingularRecord classify(const FoliationGerm& F, const std::vector<ExceptionalMarker>& exceptional = {});

struct BlowupNode {
  int id = 0;
  int parent = -1;
  std::string center;
  int multiplicity = 0;
  int epsilon = 0;
  int component = 0;
};

struct Component {
  int id = 0;
  bool dicritical = false;
  std::set<int> neighbors;
  int valence() const { return static_cast<int>(neighbors.size()); }
};

struct ReductionTree {
  std::vector<BlowupNode> blowups;
  std::vector<Component> components;
  std::vector<SingularRecord> leaves;

  std::size_t blowup_count() const { return blowups.size(); }
  /// Every dicritical component meets only non-dicritical ones.
  bool dicriticals_separated() const;
};

class ReductionLimit : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Seidenberg reduction: blows up non-simple points until every singularity is simple.
ReductionTree reduce(const FoliationGerm& F, int max_blowups = 24);

bool second_type_verdict(const ReductionTree& t);
bool generalized_curve_verdict(const ReductionTree& t);

struct DicriticalEntry {
  int component = 0;
  int valence = 0;
  int budget = 0; // 2 - valence
};

std::vector<DicriticalEntry> dicritical_report(const ReductionTree& t);

/// (n-1)(n-2)/2 with n = nu - epsilon, zero when n <= 2.
long long h1_dimension(int nu, int epsilon);

} // namespace folinv
