#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qclimit/hilbert.hpp"

namespace qclimit::epr {

using Matrix2c = Eigen::Matrix2cd;
using Matrix4c = Eigen::Matrix4cd;

/// Four dichotomic detector operators (Hermitian, squaring to identity).
struct MeasurementSettings {
    Matrix2c A;
    Matrix2c Aprime;
    Matrix2c B;
    Matrix2c Bprime;
};

/// A = sigma_3, B = -sigma_3, A' = sigma_1, B' = -sigma_1: the first pair
/// reads out the basis property, the rotated pair total undecidedness.
MeasurementSettings standard_settings();

/// Throws validation_error unless m is Hermitian and m^2 = 1 (to 1e-10).
void validate_dichotomic(const Eigen::Ref<const hilbert::ComplexMatrix>& m);

/// Coincidence operator of a joint measurement, A (x) B.
Matrix4c coincidence_operator(const Matrix2c& a, const Matrix2c& b);

/// O(a,b) = Re Tr(P rho); throws if the imaginary part exceeds 1e-12.
double expectation(const Eigen::Ref<const hilbert::ComplexMatrix>& coincidence,
                   const hilbert::DensityOperator& rho);

/// Delta = |O(a,b) - O(a,b')| + |O(a',b) + O(a',b')|.
double correlation_delta(const hilbert::DensityOperator& rho, const MeasurementSettings& s);

/// Density matrix carried entirely by the main and anti diagonals:
///
///   [ d0           x1+i y1 ]
///   [    d1  x2+i y2       ]
///   [    x2-i y2  d2       ]
///   [ x1-i y1          d3  ]
///
/// diag = (c11_11, c11_22, c22_11, c22_22); positivity demands
/// x1^2+y1^2 <= d0*d3 and x2^2+y2^2 <= d1*d2.
struct AntiDiagonalFamily {
    std::array<double, 4> diag;
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
};

/// Same parameters placed two rows off the main diagonal:
///
///   [ d0     x1+i y1        ]
///   [    d1          x2+i y2]
///   [ x1-i y1   d2          ]
///   [    x2-i y2        d3  ]
///
/// positivity demands x1^2+y1^2 <= d0*d2 and x2^2+y2^2 <= d1*d3.
struct BlockDiagonalFamily {
    std::array<double, 4> diag;
    double x1 = 0.0;
    double y1 = 0.0;
    double x2 = 0.0;
    double y2 = 0.0;
};

/// Product state rho_U (x) rho_V of two single-system operators.
struct ProductFamily {
    hilbert::DensityOperator u;
    hilbert::DensityOperator v;
};

hilbert::DensityOperator build_antidiagonal(const AntiDiagonalFamily& fam);
hilbert::DensityOperator build_blockdiagonal(const BlockDiagonalFamily& fam);
hilbert::DensityOperator build_product(const ProductFamily& fam);

/// Closed form of Delta for the anti-diagonal family under the standard
/// settings: |-d0+d1+d2-d3| + 2|-x1-x2|.
double antidiagonal_delta_formula(const AntiDiagonalFamily& fam);

/// Upper bound |-d0+d1+d2-d3| + 2(sqrt(d0*d3)+sqrt(d1*d2)) obtained by
/// pushing the off-diagonals to the positivity boundary.
double antidiagonal_bound(const std::array<double, 4>& diag);

/// Closed form of Delta for a product state under the standard settings,
/// written in the factor coefficients.
double separable_delta_formula(const ProductFamily& fam);

enum class FamilyKind { Antidiagonal, BlockDiagonal, Product };

/// Result of maximizing Delta over a family.
struct DeltaMaximum {
    double delta;
    FamilyKind kind;
    std::vector<std::string> param_names;
    std::vector<double> witness;
    long evaluations;
};

/// Deterministic maximization: an exhaustive coarse grid over the family's
/// free parameters (simplex resolution adapted to the budget, off-diagonals
/// at the positivity boundary and interior thirds, y = 0), followed by
/// shrinking-step coordinate refinement around the best grid points until
/// the improvement falls below 1e-9 or the evaluation budget is exhausted.
DeltaMaximum maximize_delta(FamilyKind kind, const MeasurementSettings& s, long budget);

/// det([A, A']); its absolute value measures how non-commuting the two
/// settings are.
std::complex<double> commutator_det(const Matrix2c& a, const Matrix2c& aprime);

/// Monte Carlo mean of single-run products E(a)*E(b): joint outcomes
/// (+-1, +-1) are drawn with probabilities Tr((Pi_i (x) Pi_j) rho) from the
/// settings' eigenprojectors. Reproducible for a fixed seed.
double sample_outcomes(const hilbert::DensityOperator& rho, const Matrix2c& a,
                       const Matrix2c& b, long runs, std::uint64_t seed);

} // namespace qclimit::epr
