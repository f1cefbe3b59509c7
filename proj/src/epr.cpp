#include "qclimit/epr.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "qclimit/errors.hpp"

namespace qclimit::epr {

namespace {

using Complex = std::complex<double>;

/// Slack for positivity checks at the boundary of a family, where rounded
/// square roots may overshoot by a few ulp.
constexpr double kFamilyBoundSlack = 1e-12;
constexpr double kDiagSumTol = 1e-12;

double re_trace_product(const Matrix4c& p, const Matrix4c& m) {
    return p.cwiseProduct(m.transpose()).sum().real();
}

void require_diag_simplex(const std::array<double, 4>& diag, const char* where) {
    double sum = 0.0;
    for (double d : diag) {
        if (!(d >= 0.0))
            throw validation_error(std::string(where) + ": diagonal entries must be non-negative");
        sum += d;
    }
    if (std::abs(sum - 1.0) > kDiagSumTol)
        throw validation_error(std::string(where) + ": diagonal entries must sum to one");
}

Matrix4c antidiagonal_matrix(const std::array<double, 4>& d, double x1, double y1,
                             double x2, double y2) {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = d[0];
    m(1, 1) = d[1];
    m(2, 2) = d[2];
    m(3, 3) = d[3];
    m(0, 3) = Complex(x1, y1);
    m(3, 0) = Complex(x1, -y1);
    m(1, 2) = Complex(x2, y2);
    m(2, 1) = Complex(x2, -y2);
    return m;
}

Matrix4c blockdiagonal_matrix(const std::array<double, 4>& d, double x1, double y1,
                              double x2, double y2) {
    Matrix4c m = Matrix4c::Zero();
    m(0, 0) = d[0];
    m(1, 1) = d[1];
    m(2, 2) = d[2];
    m(3, 3) = d[3];
    m(0, 2) = Complex(x1, y1);
    m(2, 0) = Complex(x1, -y1);
    m(1, 3) = Complex(x2, y2);
    m(3, 1) = Complex(x2, -y2);
    return m;
}

Eigen::Matrix2cd symmetric_qubit(double p, double x) {
    Eigen::Matrix2cd m;
    m << p, x, x, 1.0 - p;
    return m;
}

// --- maximize_delta internals ------------------------------------------

/// Candidate point of one family: a simplex diagonal plus off-diagonal
/// magnitudes expressed as fractions of their positivity boundary (so any
/// value in [-1,1] stays admissible). Product states reuse diag[0]/diag[1]
/// as the two factor populations.
struct FamilyPoint {
    FamilyKind kind = FamilyKind::Antidiagonal;
    std::array<double, 4> diag{};
    double f1 = 0.0;
    double f2 = 0.0;

    Matrix4c matrix() const {
        switch (kind) {
        case FamilyKind::Antidiagonal:
            return antidiagonal_matrix(diag, f1 * std::sqrt(diag[0] * diag[3]), 0.0,
                                       f2 * std::sqrt(diag[1] * diag[2]), 0.0);
        case FamilyKind::BlockDiagonal:
            return blockdiagonal_matrix(diag, f1 * std::sqrt(diag[0] * diag[2]), 0.0,
                                        f2 * std::sqrt(diag[1] * diag[3]), 0.0);
        case FamilyKind::Product: {
            const double p = diag[0];
            const double q = diag[1];
            const Eigen::Matrix2cd u = symmetric_qubit(p, f1 * std::sqrt(p * (1.0 - p)));
            const Eigen::Matrix2cd v = symmetric_qubit(q, f2 * std::sqrt(q * (1.0 - q)));
            Matrix4c m;
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    m.block<2, 2>(2 * i, 2 * j) = u(i, j) * v;
            return m;
        }
        }
        throw validation_error("maximize_delta: unknown family kind");
    }
};

class DeltaEvaluator {
public:
    DeltaEvaluator(const MeasurementSettings& s, long budget)
        : p_ab_(coincidence_operator(s.A, s.B)),
          p_abp_(coincidence_operator(s.A, s.Bprime)),
          p_apb_(coincidence_operator(s.Aprime, s.B)),
          p_apbp_(coincidence_operator(s.Aprime, s.Bprime)),
          budget_(budget) {}

    double operator()(const Matrix4c& rho) {
        ++evaluations_;
        const double o_ab = re_trace_product(p_ab_, rho);
        const double o_abp = re_trace_product(p_abp_, rho);
        const double o_apb = re_trace_product(p_apb_, rho);
        const double o_apbp = re_trace_product(p_apbp_, rho);
        return std::abs(o_ab - o_abp) + std::abs(o_apb + o_apbp);
    }

    long evaluations() const { return evaluations_; }
    bool exhausted() const { return evaluations_ >= budget_; }

private:
    Matrix4c p_ab_, p_abp_, p_apb_, p_apbp_;
    long budget_;
    long evaluations_ = 0;
};

const std::array<double, 7>& boundary_fractions() {
    static const std::array<double, 7> f = {-1.0, -2.0 / 3.0, -1.0 / 3.0, 0.0,
                                            1.0 / 3.0, 2.0 / 3.0, 1.0};
    return f;
}

long simplex_grid_size(int resolution) {
    long count = 0;
    for (int i = 0; i <= resolution; ++i)
        for (int j = 0; i + j <= resolution; ++j)
            count += resolution - i - j + 1;
    return count;
}

int choose_resolution(FamilyKind kind, long budget) {
    const long fraction_combos = 49;
    for (int resolution : {40, 20, 10, 5, 2}) {
        const long grid = kind == FamilyKind::Product
                              ? static_cast<long>(resolution + 1) * (resolution + 1)
                              : simplex_grid_size(resolution);
        if (grid * fraction_combos <= (6 * budget) / 10)
            return resolution;
    }
    return 2;
}

struct ScoredPoint {
    double delta = -1.0;
    FamilyPoint point;
};

/// Keeps the best few grid points (first-found wins ties) as refinement
/// starts.
void offer(std::vector<ScoredPoint>& best, double delta, const FamilyPoint& point) {
    for (size_t k = 0; k < best.size(); ++k) {
        if (delta > best[k].delta) {
            for (size_t i = best.size() - 1; i > k; --i)
                best[i] = best[i - 1];
            best[k] = {delta, point};
            return;
        }
    }
}

void grid_scan(FamilyKind kind, int resolution, DeltaEvaluator& eval,
               std::vector<ScoredPoint>& best) {
    const auto& fractions = boundary_fractions();
    const auto scan_point = [&](const FamilyPoint& base, bool f1_active, bool f2_active) {
        for (double f1 : fractions) {
            if (!f1_active && f1 != 0.0)
                continue;
            for (double f2 : fractions) {
                if (!f2_active && f2 != 0.0)
                    continue;
                if (eval.exhausted())
                    return;
                FamilyPoint p = base;
                p.f1 = f1;
                p.f2 = f2;
                offer(best, eval(p.matrix()), p);
            }
        }
    };

    if (kind == FamilyKind::Product) {
        for (int i = 0; i <= resolution && !eval.exhausted(); ++i) {
            for (int j = 0; j <= resolution && !eval.exhausted(); ++j) {
                FamilyPoint base;
                base.kind = kind;
                const double p = static_cast<double>(i) / resolution;
                const double q = static_cast<double>(j) / resolution;
                base.diag = {p, q, 0.0, 0.0};
                scan_point(base, p > 0.0 && p < 1.0, q > 0.0 && q < 1.0);
            }
        }
        return;
    }

    for (int i = 0; i <= resolution && !eval.exhausted(); ++i) {
        for (int j = 0; i + j <= resolution && !eval.exhausted(); ++j) {
            for (int k = 0; i + j + k <= resolution && !eval.exhausted(); ++k) {
                FamilyPoint base;
                base.kind = kind;
                const double r = resolution;
                base.diag = {i / r, j / r, k / r, (resolution - i - j - k) / r};
                const bool f1_active = kind == FamilyKind::Antidiagonal
                                           ? base.diag[0] * base.diag[3] > 0.0
                                           : base.diag[0] * base.diag[2] > 0.0;
                const bool f2_active = kind == FamilyKind::Antidiagonal
                                           ? base.diag[1] * base.diag[2] > 0.0
                                           : base.diag[1] * base.diag[3] > 0.0;
                scan_point(base, f1_active, f2_active);
            }
        }
    }
}

std::vector<FamilyPoint> coordinate_moves(const FamilyPoint& point, double step) {
    std::vector<FamilyPoint> moves;
    const bool product = point.kind == FamilyKind::Product;
    const int n_diag = product ? 2 : 4;

    for (int i = 0; i < n_diag; ++i) {
        for (double sign : {1.0, -1.0}) {
            FamilyPoint cand = point;
            cand.diag[i] += sign * step;
            if (product) {
                cand.diag[i] = std::clamp(cand.diag[i], 0.0, 1.0);
            } else {
                double sum = 0.0;
                for (double& d : cand.diag) {
                    d = std::max(d, 0.0);
                    sum += d;
                }
                if (sum <= 0.0)
                    continue;
                for (double& d : cand.diag)
                    d /= sum;
            }
            moves.push_back(cand);
        }
    }
    for (double sign : {1.0, -1.0}) {
        FamilyPoint cand = point;
        cand.f1 = std::clamp(cand.f1 + sign * step, -1.0, 1.0);
        moves.push_back(cand);
        cand = point;
        cand.f2 = std::clamp(cand.f2 + sign * step, -1.0, 1.0);
        moves.push_back(cand);
    }
    return moves;
}

ScoredPoint refine(ScoredPoint start, DeltaEvaluator& eval, double initial_step) {
    double step = initial_step;
    while (step >= 1e-10 && !eval.exhausted()) {
        ScoredPoint best_move = start;
        for (const FamilyPoint& cand : coordinate_moves(start.point, step)) {
            if (eval.exhausted())
                break;
            const double delta = eval(cand.matrix());
            if (delta > best_move.delta) {
                best_move.delta = delta;
                best_move.point = cand;
            }
        }
        if (best_move.delta > start.delta + 1e-12)
            start = best_move;
        else
            step *= 0.5;
    }
    return start;
}

} // namespace

MeasurementSettings standard_settings() {
    MeasurementSettings s;
    s.A = hilbert::pauli_z();
    s.B = -hilbert::pauli_z();
    s.Aprime = hilbert::pauli_x();
    s.Bprime = -hilbert::pauli_x();
    return s;
}

void validate_dichotomic(const Eigen::Ref<const hilbert::ComplexMatrix>& m) {
    if (m.rows() != m.cols())
        throw validation_error("dichotomic setting must be square");
    if (hilbert::hermiticity_defect(m) > hilbert::kHermitianInputTol)
        throw validation_error("dichotomic setting must be Hermitian");
    const hilbert::ComplexMatrix square = m * m;
    if ((square - hilbert::identity(m.rows())).cwiseAbs().maxCoeff() > 1e-10)
        throw validation_error("dichotomic setting must square to the identity");
}

Matrix4c coincidence_operator(const Matrix2c& a, const Matrix2c& b) {
    if (hilbert::hermiticity_defect(a) > hilbert::kHermitianInputTol ||
        hilbert::hermiticity_defect(b) > hilbert::kHermitianInputTol)
        throw validation_error("coincidence_operator: settings must be Hermitian");
    return Eigen::kroneckerProduct(a, b);
}

double expectation(const Eigen::Ref<const hilbert::ComplexMatrix>& coincidence,
                   const hilbert::DensityOperator& rho) {
    if (coincidence.rows() != rho.dim() || coincidence.cols() != rho.dim())
        throw validation_error("expectation: dimension mismatch");
    const Complex trace = (coincidence * rho.matrix()).trace();
    if (std::abs(trace.imag()) > 1e-12)
        throw validation_error("expectation: trace has a non-negligible imaginary part");
    return trace.real();
}

double correlation_delta(const hilbert::DensityOperator& rho, const MeasurementSettings& s) {
    validate_dichotomic(s.A);
    validate_dichotomic(s.Aprime);
    validate_dichotomic(s.B);
    validate_dichotomic(s.Bprime);
    const double o_ab = expectation(coincidence_operator(s.A, s.B), rho);
    const double o_abp = expectation(coincidence_operator(s.A, s.Bprime), rho);
    const double o_apb = expectation(coincidence_operator(s.Aprime, s.B), rho);
    const double o_apbp = expectation(coincidence_operator(s.Aprime, s.Bprime), rho);
    return std::abs(o_ab - o_abp) + std::abs(o_apb + o_apbp);
}

hilbert::DensityOperator build_antidiagonal(const AntiDiagonalFamily& fam) {
    require_diag_simplex(fam.diag, "anti-diagonal family");
    if (fam.x1 * fam.x1 + fam.y1 * fam.y1 > fam.diag[0] * fam.diag[3] + kFamilyBoundSlack)
        throw validation_error(
            "anti-diagonal family: x1^2 + y1^2 exceeds the bound c11_11 * c22_22");
    if (fam.x2 * fam.x2 + fam.y2 * fam.y2 > fam.diag[1] * fam.diag[2] + kFamilyBoundSlack)
        throw validation_error(
            "anti-diagonal family: x2^2 + y2^2 exceeds the bound c11_22 * c22_11");
    return hilbert::DensityOperator(
        antidiagonal_matrix(fam.diag, fam.x1, fam.y1, fam.x2, fam.y2));
}

hilbert::DensityOperator build_blockdiagonal(const BlockDiagonalFamily& fam) {
    require_diag_simplex(fam.diag, "block-diagonal family");
    if (fam.x1 * fam.x1 + fam.y1 * fam.y1 > fam.diag[0] * fam.diag[2] + kFamilyBoundSlack)
        throw validation_error(
            "block-diagonal family: x1^2 + y1^2 exceeds the bound c11_11 * c22_11");
    if (fam.x2 * fam.x2 + fam.y2 * fam.y2 > fam.diag[1] * fam.diag[3] + kFamilyBoundSlack)
        throw validation_error(
            "block-diagonal family: x2^2 + y2^2 exceeds the bound c11_22 * c22_22");
    return hilbert::DensityOperator(
        blockdiagonal_matrix(fam.diag, fam.x1, fam.y1, fam.x2, fam.y2));
}

hilbert::DensityOperator build_product(const ProductFamily& fam) {
    return hilbert::DensityOperator(hilbert::kron(fam.u.matrix(), fam.v.matrix()));
}

double antidiagonal_delta_formula(const AntiDiagonalFamily& fam) {
    const auto& d = fam.diag;
    return std::abs(-d[0] + d[1] + d[2] - d[3]) + 2.0 * std::abs(-fam.x1 - fam.x2);
}

double antidiagonal_bound(const std::array<double, 4>& diag) {
    require_diag_simplex(diag, "antidiagonal_bound");
    return std::abs(-diag[0] + diag[1] + diag[2] - diag[3]) +
           2.0 * (std::sqrt(diag[0] * diag[3]) + std::sqrt(diag[1] * diag[2]));
}

double separable_delta_formula(const ProductFamily& fam) {
    const auto& u = fam.u.matrix();
    const auto& v = fam.v.matrix();
    if (u.rows() != 2 || v.rows() != 2)
        throw validation_error("separable_delta_formula: factors must be 2x2");
    const double u_diag = (u(0, 0) - u(1, 1)).real();
    const double u_off = (u(0, 1) + u(1, 0)).real();
    const double v_diag = (v(0, 0) - v(1, 1)).real();
    const double v_off = (v(0, 1) + v(1, 0)).real();
    return std::abs(u_diag * (-v_diag + v_off)) + std::abs(u_off * (-v_diag - v_off));
}

DeltaMaximum maximize_delta(FamilyKind kind, const MeasurementSettings& s, long budget) {
    if (budget < 10000)
        throw validation_error("maximize_delta: budget must be at least 1e4 evaluations");
    validate_dichotomic(s.A);
    validate_dichotomic(s.Aprime);
    validate_dichotomic(s.B);
    validate_dichotomic(s.Bprime);

    DeltaEvaluator eval(s, budget);
    const int resolution = choose_resolution(kind, budget);

    std::vector<ScoredPoint> starts(3);
    for (auto& sp : starts)
        sp.point.kind = kind;
    grid_scan(kind, resolution, eval, starts);

    ScoredPoint best = starts.front();
    for (const ScoredPoint& start : starts) {
        if (start.delta < 0.0)
            continue;
        const ScoredPoint refined = refine(start, eval, 0.5 / resolution);
        if (refined.delta > best.delta)
            best = refined;
    }

    DeltaMaximum out;
    out.delta = best.delta;
    out.kind = kind;
    out.evaluations = eval.evaluations();
    const auto& d = best.point.diag;
    switch (kind) {
    case FamilyKind::Antidiagonal:
        out.param_names = {"c11_11", "c11_22", "c22_11", "c22_22", "x1", "x2"};
        out.witness = {d[0], d[1], d[2], d[3], best.point.f1 * std::sqrt(d[0] * d[3]),
                       best.point.f2 * std::sqrt(d[1] * d[2])};
        break;
    case FamilyKind::BlockDiagonal:
        out.param_names = {"c11_11", "c11_22", "c22_11", "c22_22", "x1", "x2"};
        out.witness = {d[0], d[1], d[2], d[3], best.point.f1 * std::sqrt(d[0] * d[2]),
                       best.point.f2 * std::sqrt(d[1] * d[3])};
        break;
    case FamilyKind::Product:
        out.param_names = {"u11", "u12", "v11", "v12"};
        out.witness = {d[0], best.point.f1 * std::sqrt(d[0] * (1.0 - d[0])), d[1],
                       best.point.f2 * std::sqrt(d[1] * (1.0 - d[1]))};
        break;
    }
    return out;
}

std::complex<double> commutator_det(const Matrix2c& a, const Matrix2c& aprime) {
    if (hilbert::hermiticity_defect(a) > hilbert::kHermitianInputTol ||
        hilbert::hermiticity_defect(aprime) > hilbert::kHermitianInputTol)
        throw validation_error("commutator_det: settings must be Hermitian");
    return (a * aprime - aprime * a).determinant();
}

double sample_outcomes(const hilbert::DensityOperator& rho, const Matrix2c& a,
                       const Matrix2c& b, long runs, std::uint64_t seed) {
    if (runs < 1)
        throw validation_error("sample_outcomes: needs at least one run");
    validate_dichotomic(a);
    validate_dichotomic(b);
    if (rho.dim() != 4)
        throw validation_error("sample_outcomes: state must live on the 4-dimensional space");

    const Matrix2c id = Matrix2c::Identity();
    const Matrix2c proj_a[2] = {0.5 * (id + a), 0.5 * (id - a)};
    const Matrix2c proj_b[2] = {0.5 * (id + b), 0.5 * (id - b)};

    // Joint outcome probabilities, clamped against eigenvalue round-off.
    double prob[4];
    double total = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const Matrix4c joint = Eigen::kroneckerProduct(proj_a[i], proj_b[j]);
            prob[2 * i + j] = std::max(0.0, re_trace_product(joint, Matrix4c(rho.matrix())));
            total += prob[2 * i + j];
        }
    }
    for (double& p : prob)
        p /= total;

    const double sign_a[2] = {1.0, -1.0};
    std::mt19937_64 rng(seed);
    long long sum = 0;
    for (long run = 0; run < runs; ++run) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        double cumulative = 0.0;
        int outcome = 3;
        for (int k = 0; k < 4; ++k) {
            cumulative += prob[k];
            if (u < cumulative) {
                outcome = k;
                break;
            }
        }
        const double product = sign_a[outcome / 2] * sign_a[outcome % 2];
        sum += product > 0.0 ? 1 : -1;
    }
    return static_cast<double>(sum) / static_cast<double>(runs);
}

} // namespace qclimit::epr
