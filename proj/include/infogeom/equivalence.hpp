#pragma once

#include <optional>
#include <vector>

#include "infogeom/classification.hpp"
#include "infogeom/family.hpp"

namespace infogeom {

inline constexpr double kDefaultEquivalenceTol = 1e-9;

/// The matrix [[1, b, d], [0, a, c], [0, 0, 1]] with a != 0, acting on
/// families by (C, F) -> (C + b F + d, a F + c).
class GroupElement {
 public:
  GroupElement() = default;
  GroupElement(double a, double b, double c, double d);

  static GroupElement identity() { return {}; }

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double d() const { return d_; }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;

 private:
  double a_ = 1.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

FiniteExpFamily act(const GroupElement& g, const FiniteExpFamily& fam);

/// Matrix product g1 * g2, so act(compose(g1, g2), x) == act(g1, act(g2, x)).
GroupElement compose(const GroupElement& g1, const GroupElement& g2);
GroupElement inverse(const GroupElement& g);

/// A witness g with act(g, fam2) == fam1 componentwise within tol, if one
/// exists. (a, c) come from the minimum and maximum of F2; (b, d) from a
/// least-squares fit of C1 - C2 against F2. Throws IncompatibleFamilies when
/// the sizes differ.
std::optional<GroupElement> are_equivalent(const FiniteExpFamily& fam1, const FiniteExpFamily& fam2,
                                           double tol = kDefaultEquivalenceTol);

/// The affine line C^perp + span{F^perp} in the hyperplane orthogonal to
/// (1, ..., 1), stored as a unit direction and the base point closest to the
/// origin. The direction's first entry larger than 1e-12 in magnitude is positive.
struct CanonicalClass {
  std::vector<double> base;
  std::vector<double> direction;
};

CanonicalClass canonical_representative(const FiniteExpFamily& fam);

/// Componentwise comparison of two representatives.
bool same_class(const CanonicalClass& x, const CanonicalClass& y, double tol = kDefaultEquivalenceTol);

/// Whether reduce(fam) is equivalent to B(p), p + 1 being the number of levels.
bool reduced_equivalent_to_binomial(const FiniteExpFamily& fam, double tol = kDefaultEquivalenceTol,
                                    double level_tol = kDefaultLevelTol);

}  // namespace infogeom
