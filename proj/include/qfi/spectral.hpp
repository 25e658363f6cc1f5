// spectral.hpp — Hermitian operators, thermal states, spectral decompositions,
// and Bohr-frequency enumeration. Substrate for every superoperator and spectral sum.

#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qfi/types.hpp"

namespace qfi {

inline constexpr double kHermTol        = 1e-12;  // relative Hermiticity tolerance
inline constexpr double kTraceTol       = 1e-12;
inline constexpr double kDefaultEpsPop  = 1e-12;  // population floor for K^f inversion

// Largest |M - M†| entry and its position.
struct HermitianViolation {
    double value{0.0};
    Index row{0}, col{0};
};

inline HermitianViolation hermitian_violation(const Matrix& m) {
    HermitianViolation v;
    for (Index r = 0; r < m.rows(); ++r)
        for (Index c = 0; c < m.cols(); ++c) {
            const double d = std::abs(m(r, c) - std::conj(m(c, r)));
            if (d > v.value) { v.value = d; v.row = r; v.col = c; }
        }
    return v;
}

// ------------------------------ HermitianOperator ----------------------------

// Validated Hermitian matrix; entries are symmetrized exactly on construction.
struct HermitianOperator {
    Matrix m;

    HermitianOperator() = default;

    explicit HermitianOperator(Matrix entries, const std::string& label = "operator") {
        if (entries.rows() != entries.cols() || entries.rows() == 0)
            throw ValidationError(label + ": matrix must be square and non-empty");
        const double scale = entries.cwiseAbs().maxCoeff();
        const auto v = hermitian_violation(entries);
        if (v.value > kHermTol * std::max(1.0, scale)) {
            std::ostringstream os;
            os << label << ": not Hermitian, worst violation |M-M`|=" << v.value
               << " at row " << v.row << ", column " << v.col;
            throw ValidationError(os.str());
        }
        m = 0.5 * (entries + entries.adjoint());
    }

    Index dim() const { return m.rows(); }
};

// ------------------------------- DensityMatrix -------------------------------

struct DensityMatrix {
    Matrix m;
    double min_eigenvalue{0.0};

    DensityMatrix() = default;

    explicit DensityMatrix(Matrix entries, const std::string& label = "state") {
        HermitianOperator herm(std::move(entries), label);
        const double tr = herm.m.trace().real();
        if (std::abs(tr - 1.0) > kTraceTol)
            throw ValidationError(label + ": trace is " + std::to_string(tr) + ", expected 1");
        Eigen::SelfAdjointEigenSolver<Matrix> es(herm.m);
        if (es.info() != Eigen::Success)
            throw NumericalError(label + ": eigen-solver failed during validation");
        min_eigenvalue = es.eigenvalues().minCoeff();
        if (min_eigenvalue < -kTraceTol)
            throw ValidationError(label + ": negative eigenvalue " +
                                  std::to_string(min_eigenvalue));
        if (min_eigenvalue < 0) {
            // clamp the numerically negative tail and renormalize
            RealVector ev = es.eigenvalues().cwiseMax(0.0);
            ev /= ev.sum();
            m = es.eigenvectors() * ev.asDiagonal().toDenseMatrix().cast<Complex>() *
                es.eigenvectors().adjoint();
            min_eigenvalue = 0.0;
        } else {
            m = std::move(herm.m);
        }
    }

    Index dim() const { return m.rows(); }
};

// ---------------------------- SpectralDecomposition ---------------------------

struct SpectralDecomposition {
    RealVector eigenvalues;  // ascending
    Matrix eigenvectors;     // unitary, columns
    std::string source;

    Index dim() const { return eigenvalues.size(); }

    // Rotate an operator into / out of the eigenbasis.
    Matrix to_eigen(const Matrix& a) const { return eigenvectors.adjoint() * a * eigenvectors; }
    Matrix to_lab(const Matrix& a) const { return eigenvectors * a * eigenvectors.adjoint(); }
};

inline SpectralDecomposition decompose(const HermitianOperator& op,
                                       const std::string& source = "operator") {
    Eigen::SelfAdjointEigenSolver<Matrix> es(op.m);
    if (es.info() != Eigen::Success)
        throw NumericalError("decompose: eigen-solver did not converge for " + source);
    return SpectralDecomposition{es.eigenvalues(), es.eigenvectors(), source};
}

// -------------------------------- ThermalState --------------------------------

// Canonical ensemble rho = e^{-beta H}/Z. Populations are computed in log space
// (shifted by the ground energy) so large beta cannot overflow.
struct ThermalState {
    HermitianOperator hamiltonian;
    double beta{1.0};
    SpectralDecomposition decomp;   // of the Hamiltonian (shared with rho)
    RealVector populations;         // Boltzmann weights, ascending-energy order
    RealVector log_populations;
    double free_energy{0.0};
    double min_population{0.0};
    bool below_floor{false};        // state flagged unusable for K^f inversion

    Index dim() const { return decomp.dim(); }

    DensityMatrix rho() const {
        Matrix m = decomp.eigenvectors * populations.asDiagonal().toDenseMatrix().cast<Complex>() *
                   decomp.eigenvectors.adjoint();
        return DensityMatrix(std::move(m), "thermal state");
    }
};

inline ThermalState thermal_state(const HermitianOperator& h, double beta,
                                  double eps_pop = kDefaultEpsPop) {
    if (!(beta > 0))
        throw ValidationError("thermal_state: beta must be > 0, got " + std::to_string(beta));
    ThermalState ts;
    ts.hamiltonian = h;
    ts.beta = beta;
    ts.decomp = decompose(h, "hamiltonian");
    const Index n = ts.decomp.dim();
    const double e0 = ts.decomp.eigenvalues.minCoeff();

    RealVector logw(n);
    for (Index i = 0; i < n; ++i) logw(i) = -beta * (ts.decomp.eigenvalues(i) - e0);
    const double logz = std::log(logw.array().exp().sum());

    ts.populations.resize(n);
    ts.log_populations.resize(n);
    for (Index i = 0; i < n; ++i) {
        ts.log_populations(i) = logw(i) - logz;
        ts.populations(i) = std::exp(ts.log_populations(i));
    }
    ts.free_energy = e0 - logz / beta;
    ts.min_population = ts.populations.minCoeff();
    ts.below_floor = ts.min_population < eps_pop;
    return ts;
}

// Rebuild a thermal state directly from a full-rank density matrix: the
// eigenbasis of rho plays the role of the energy eigenbasis, with
// E_i = -(1/beta) log p_i (free energy fixed to 0).
inline ThermalState thermal_state_from_density(const DensityMatrix& rho, double beta,
                                               double eps_pop = kDefaultEpsPop) {
    if (!(beta > 0))
        throw ValidationError("thermal_state_from_density: beta must be > 0");
    SpectralDecomposition sd = decompose(HermitianOperator(rho.m, "state"), "state");
    const Index n = sd.dim();
    if (sd.eigenvalues.minCoeff() < eps_pop)
        throw ValidationError("state not thermalizable at finite beta: eigenvalue " +
                              std::to_string(sd.eigenvalues.minCoeff()) +
                              " below floor " + std::to_string(eps_pop));
    ThermalState ts;
    ts.beta = beta;
    // rho eigenvalues ascend; energies descend, so flip to ascending-energy order
    RealVector p(n);
    Matrix v(n, n);
    for (Index i = 0; i < n; ++i) {
        p(i) = sd.eigenvalues(n - 1 - i);
        v.col(i) = sd.eigenvectors.col(n - 1 - i);
    }
    RealVector energies(n);
    for (Index i = 0; i < n; ++i) energies(i) = -std::log(p(i)) / beta;
    Matrix h = v * energies.asDiagonal().toDenseMatrix().cast<Complex>() * v.adjoint();
    ts.hamiltonian = HermitianOperator(std::move(h), "effective hamiltonian");
    ts.decomp = SpectralDecomposition{energies, v, "effective hamiltonian"};
    ts.populations = p;
    ts.log_populations = p.array().log();
    ts.free_energy = 0.0;  // sum_i e^{-beta E_i} = sum_i p_i = 1
    ts.min_population = p.minCoeff();
    ts.below_floor = false;
    return ts;
}

// H = -(1/beta) log rho, with the additive constant fixed so that F = 0.
inline HermitianOperator effective_hamiltonian(const DensityMatrix& rho, double beta,
                                               double eps_pop = kDefaultEpsPop) {
    return thermal_state_from_density(rho, beta, eps_pop).hamiltonian;
}

// --------------------------------- Bohr lines ---------------------------------

// One transition frequency with all (i, j) index pairs whose E_i - E_j lands on it.
struct BohrLine {
    double omega{0.0};
    std::vector<std::pair<int, int>> pairs;
};

// Enumerate all ordered pairs, grouped into lines at omega = (E_i - E_j)/hbar.
// Pairs whose frequencies differ by at most collapse_tol share a line.
inline std::vector<BohrLine> bohr_lines(const SpectralDecomposition& sd,
                                        double collapse_tol, double hbar = 1.0) {
    if (collapse_tol < 0) throw ValidationError("bohr_lines: collapse_tol must be >= 0");
    const Index n = sd.dim();
    struct Entry { double w; int i, j; };
    std::vector<Entry> entries;
    entries.reserve(static_cast<std::size_t>(n * n));
    for (Index i = 0; i < n; ++i)
        for (Index j = 0; j < n; ++j)
            entries.push_back({(sd.eigenvalues(i) - sd.eigenvalues(j)) / hbar,
                               static_cast<int>(i), static_cast<int>(j)});
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.w < b.w; });

    std::vector<BohrLine> lines;
    for (const auto& e : entries) {
        if (lines.empty() || e.w - lines.back().omega > collapse_tol / hbar) {
            lines.push_back(BohrLine{e.w, {}});
        }
        lines.back().pairs.emplace_back(e.i, e.j);
    }
    return lines;
}

// Spec'd default: degeneracy collapse scaled to the spectral range.
inline double default_collapse_tol(const SpectralDecomposition& sd) {
    const double emax = sd.eigenvalues.cwiseAbs().maxCoeff();
    return 1e-9 * std::max(1.0, emax);
}

} // namespace qfi
