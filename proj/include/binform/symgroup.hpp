#pragma once

// Orientation-preserving linear symmetries h of a binary form, f(h(z)) = f(z).

#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "binform/mat2.hpp"
#include "binform/polyring.hpp"
#include "binform/realfactor.hpp"

namespace binform {

/// Maps h with h^T B h = lambda A: sqrt(lambda) * left * R(theta) * right.
struct TransportFamily {
  Mat2d left;   // B^{-1/2}
  Mat2d right;  // A^{1/2}

  Mat2d member(double theta, double lambda) const;
};

/// Symmetric square root of a symmetric positive definite matrix.
Mat2d spd_sqrt(const Mat2d& m);
Mat2d spd_inv_sqrt(const Mat2d& m);

TransportFamily quadratic_transport(const Mat2d& A, const Mat2d& B);

/// f = c L^alpha. Identity component: N [[a, b], [0, 1]] N^-1 with a > 0,
/// where L(N u) = u_2. For even alpha the group also holds the -id coset.
struct CaseA {
  int alpha = 1;
  bool odd = true;
  Mat2d N;

  Mat2d member(double a, double b) const;
};

/// f = c L1^alpha1 L2^alpha2. Identity component N diag(e^{alpha2 t}, e^{-alpha1 t}) N^-1
/// with the columns of N spanning {L2 = 0} and {L1 = 0}. The finite part is
/// found by substitution.
struct CaseB {
  int alpha1 = 1;
  int alpha2 = 1;
  bool quarter_turn_in_group = false;
  bool minus_identity_in_group = false;
  Mat2d N;
  Mat2d quarter_turn;  // N [[0, 1], [-1, 0]] N^-1

  Mat2d member(double t) const;
};

/// f = c Q^beta. The group is N SO(2) N^-1 with N = A^{-1/2}.
struct CaseC {
  Mat2d N;

  Mat2d member(double theta) const;
};

struct FiniteCyclic {
  int n = 1;
  Mat2d generator;
  double residual = 0.0;
  std::vector<Mat2d> elements;  // generator^m, 0 <= m < n
};

using SymmetryGroup = std::variant<CaseA, CaseB, CaseC, FiniteCyclic>;

std::string_view kind_name(const SymmetryGroup& g);

bool contains_minus_identity(const SymmetryGroup& g);

/// max_i |c_i(f o h) - c_i(f)| / max_i |c_i(f)|.
double invariance_residual(std::span<const double> coeffs, const Mat2d& h);
double invariance_residual(const HomogeneousForm& f, const Mat2d& h);

/// Factor permutation induced by h: h maps {L_i = 0} onto {L_sigma(i) = 0}
/// and Q_j o h^-1 is proportional to Q_tau(j). Entries are -1 when unmatched.
struct PermCandidate {
  std::vector<int> sigma;
  std::vector<int> tau;
};

PermCandidate induced_permutation(const FactorizationStructure& fs, const Mat2d& h);

inline constexpr double kDefaultSymmetryTol = 1e-9;

SymmetryGroup symmetry_group(const HomogeneousForm& f, const FactorizationStructure& fs,
                             double tol = kDefaultSymmetryTol);
/// Factors and refines f first.
SymmetryGroup symmetry_group(const HomogeneousForm& f, double tol = kDefaultSymmetryTol);

int finite_order_of(const Mat2d& h, int max_n, double tol);

/// Brute-force search over SL(2): grid scan of R(phi) diag(e^s, e^-s) R(psi)
/// followed by Levenberg-Marquardt polishing. Sorted by polar angle in [0, 2 pi).
std::vector<Mat2d> oracle_scan(const HomogeneousForm& f, int resolution, double tol);

}  // namespace binform
