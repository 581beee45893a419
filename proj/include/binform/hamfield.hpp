#pragma once

// Hamiltonian field F = (-f_y, f_x), its divisor D = gcd(f_x, f_y) and the
// reduced field hFld = F / D, plus the orbit partition they induce.

#include <optional>
#include <string>
#include <vector>

#include "binform/mat2.hpp"
#include "binform/polyring.hpp"
#include "binform/realfactor.hpp"
#include "binform/verdict.hpp"

namespace binform {

/// The field P d/dx + Q d/dy.
struct PlanarPolyField {
  BivariatePoly P;
  BivariatePoly Q;
  std::optional<int> degree;  // common total degree when both are homogeneous

  Point eval(Point z) const { return {P.eval(z.x, z.y), Q.eval(z.x, z.y)}; }
};

PlanarPolyField make_field(const BivariatePoly& P, const BivariatePoly& Q);

PlanarPolyField hamiltonian_field(const HomogeneousForm& f);

/// Primitive gcd of f_x and f_y with positive leading coefficient.
HomogeneousForm common_divisor(const HomogeneousForm& f);

/// The components of hFld as forms of degree l + 2k - 1.
struct ReducedComponents {
  HomogeneousForm P;
  HomogeneousForm Q;
  HomogeneousForm D;
};

ReducedComponents reduced_components(const HomogeneousForm& f);
PlanarPolyField reduced_field(const HomogeneousForm& f);

enum class SingularElements { None, OriginOnly };
enum class RegularElements { ParallelLines, LevelSets, LevelSetComponentsAndHalfLines };

struct ZeroSetRay {
  double angle = 0.0;  // in [0, 2 pi)
  double angle_lo = 0.0;
  double angle_hi = 0.0;
  int line = 0;  // index into FactorizationStructure::linear
};

struct PartitionDescription {
  CaseLabel label = CaseLabel::A;
  SingularElements singular = SingularElements::None;
  RegularElements regular = RegularElements::ParallelLines;
  // Sign of f off its zero set in cases C and D, so the regular elements are
  // f^-1(level_sign * c) for c > 0.
  int level_sign = 1;
  std::vector<ZeroSetRay> zero_set_rays;
  // Sign of D relative to prod L_i^(alpha_i - 1) prod Q_j^(beta_j - 1) built
  // from the normalized factors; orbits of hFld run backwards when negative.
  int orientation_sign = 1;
};

PartitionDescription partition_description(const HomogeneousForm& f, const FactorizationStructure& fs);

std::string to_string(SingularElements s);
std::string to_string(RegularElements r);

}  // namespace binform
