#include "binform/hamfield.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "binform/error.hpp"

namespace binform {

namespace {

std::optional<int> common_degree(const BivariatePoly& P, const BivariatePoly& Q) {
  std::set<int> degs = P.total_degrees();
  for (int d : Q.total_degrees()) degs.insert(d);
  if (degs.size() == 1) return *degs.begin();
  return std::nullopt;
}

int predicted_divisor_degree(const FactorizationStructure& fs) {
  int deg = 0;
  for (const auto& lf : fs.linear) deg += lf.multiplicity - 1;
  for (const auto& qf : fs.quadratic) deg += 2 * (qf.multiplicity - 1);
  return deg;
}

}  // namespace

PlanarPolyField make_field(const BivariatePoly& P, const BivariatePoly& Q) {
  return {P, Q, common_degree(P, Q)};
}

PlanarPolyField hamiltonian_field(const HomogeneousForm& f) {
  if (f.degree() == 0) throw Error(ErrorKind::DegreeZero, "Hamiltonian field of a constant form");
  auto [fx, fy] = partials(f);
  return make_field(-to_bivariate(fy), to_bivariate(fx));
}

HomogeneousForm common_divisor(const HomogeneousForm& f) {
  if (f.degree() == 0) throw Error(ErrorKind::DegreeZero, "divisor of a constant form");
  auto [fx, fy] = partials(f);
  HomogeneousForm D = gcd_bivariate(fx, fy);
  const int expected = predicted_divisor_degree(factor_form(f));
  if (D.degree() != expected) {
    throw Error(ErrorKind::Internal, "gcd degree " + std::to_string(D.degree()) +
                                         " disagrees with factorization degree " + std::to_string(expected));
  }
  return D;
}

ReducedComponents reduced_components(const HomogeneousForm& f) {
  HomogeneousForm D = common_divisor(f);
  auto [fx, fy] = partials(f);
  HomogeneousForm P = divide_exact(Rational(-1) * fy, D);
  HomogeneousForm Q = divide_exact(fx, D);
  return {P, Q, D};
}

PlanarPolyField reduced_field(const HomogeneousForm& f) {
  ReducedComponents rc = reduced_components(f);
  PlanarPolyField field{to_bivariate(rc.P), to_bivariate(rc.Q), rc.P.degree()};
  return field;
}

PartitionDescription partition_description(const HomogeneousForm& f, const FactorizationStructure& fs) {
  PartitionDescription pd;
  pd.label = classify_case(fs);
  switch (pd.label) {
    case CaseLabel::A:
      pd.singular = SingularElements::None;
      pd.regular = RegularElements::ParallelLines;
      break;
    case CaseLabel::C:
    case CaseLabel::D:
      pd.singular = SingularElements::OriginOnly;
      pd.regular = RegularElements::LevelSets;
      pd.level_sign = fs.sign;
      break;
    case CaseLabel::B:
    case CaseLabel::E:
      pd.singular = SingularElements::OriginOnly;
      pd.regular = RegularElements::LevelSetComponentsAndHalfLines;
      break;
  }

  if (pd.label != CaseLabel::A) {
    for (int i = 0; i < fs.l(); ++i) {
      const LinearFactor& lf = fs.linear[static_cast<std::size_t>(i)];
      double lo = std::numbers::pi / 2, hi = lo;
      if (!lf.is_axis()) {
        lo = std::atan(lf.root().interval.lo.get_d());
        hi = std::atan(lf.root().interval.hi.get_d());
      }
      double mid = std::atan2(lf.line_direction().y, lf.line_direction().x);
      if (mid < 0) mid += std::numbers::pi;
      if (lo < mid - std::numbers::pi / 2) lo += std::numbers::pi;
      if (hi < mid - std::numbers::pi / 2) hi += std::numbers::pi;
      for (int half = 0; half < 2; ++half) {
        const double shift = half * std::numbers::pi;
        pd.zero_set_rays.push_back({mid + shift, lo + shift, hi + shift, i});
      }
    }
    std::sort(pd.zero_set_rays.begin(), pd.zero_set_rays.end(),
              [](const ZeroSetRay& a, const ZeroSetRay& b) { return a.angle < b.angle; });
  }

  // Compare D with the product of normalized factors at a point off every
  // zero line.
  const HomogeneousForm D = common_divisor(f);
  for (double t = 0.3183098861837907; ; t += 0.1) {
    double prod = 1.0;
    for (const auto& lf : fs.linear) {
      auto [c0, c1] = lf.coefficients();
      prod *= std::pow(c0 + c1 * t, lf.multiplicity - 1);
    }
    for (const auto& qf : fs.quadratic) {
      const auto& q = qf.coeffs_approx;
      prod *= std::pow(q[0] + q[1] * t + q[2] * t * t, qf.multiplicity - 1);
    }
    const double d = D.eval(1.0, t);
    if (std::fabs(prod) > 1e-9 && std::fabs(d) > 1e-9) {
      pd.orientation_sign = (prod > 0) == (d > 0) ? 1 : -1;
      break;
    }
  }
  return pd;
}

std::string to_string(SingularElements s) {
  return s == SingularElements::None ? "none" : "origin";
}

std::string to_string(RegularElements r) {
  switch (r) {
    case RegularElements::ParallelLines:
      return "parallel_lines";
    case RegularElements::LevelSets:
      return "level_sets";
    case RegularElements::LevelSetComponentsAndHalfLines:
      return "level_set_components_and_half_lines";
  }
  return "unknown";
}

}  // namespace binform
