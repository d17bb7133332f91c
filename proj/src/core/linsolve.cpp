#include "core/linsolve.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <lapacke.h>

#include <Eigen/Sparse>
#include <unsupported/Eigen/IterativeSolvers>

namespace dewet {

std::vector<double> AssembledSystem::multiply(const std::vector<double>& x) const {
    std::vector<double> y(n, 0.0);
    for (int r = 0; r < n; ++r) {
        double s = 0.0;
        for (int k = row_ptr[r]; k < row_ptr[r + 1]; ++k) {
            s += values[k] * x[col_idx[k]];
        }
        y[r] = s;
    }
    return y;
}

double AssembledSystem::residual_norm(const std::vector<double>& x) const {
    const std::vector<double> ax = multiply(x);
    double s = 0.0;
    for (int r = 0; r < n; ++r) {
        const double d = ax[r] - rhs[r];
        s += d * d;
    }
    return std::sqrt(s);
}

double AssembledSystem::rhs_norm() const {
    double s = 0.0;
    for (double v : rhs) s += v * v;
    return std::sqrt(s);
}

namespace {

// Permutation that interleaves the [x | y | kappa] block layout by node,
// which collapses the matrix to a narrow band (half bandwidth 3).
std::vector<int> node_interleaved_positions(int n) {
    std::vector<int> pos(n);
    if (n < 4 || (n - 1) % 3 != 0) {
        for (int i = 0; i < n; ++i) pos[i] = i;
        return pos;
    }
    const int segments = (n - 1) / 3;
    auto x_pos = [](int i) { return i == 0 ? 0 : 3 * i - 1; };
    auto y_pos = [](int i) { return 3 * i; };
    auto k_pos = [segments](int i) { return i == segments ? 3 * segments : 3 * i + 1; };
    for (int i = 0; i <= segments; ++i) pos[i] = x_pos(i);
    for (int i = 1; i <= segments - 1; ++i) pos[segments + i] = y_pos(i);
    for (int i = 0; i <= segments; ++i) pos[2 * segments + i] = k_pos(i);
    return pos;
}

// Rows are permuted alongside: the x-test row of node i sits at the x slot,
// the y-test row at the y slot and the normal-velocity row at the kappa slot,
// which puts a structurally nonzero entry on every diagonal.
std::vector<int> node_interleaved_row_positions(int n) {
    std::vector<int> pos(n);
    if (n < 4 || (n - 1) % 3 != 0) {
        for (int i = 0; i < n; ++i) pos[i] = i;
        return pos;
    }
    const int segments = (n - 1) / 3;
    auto x_pos = [](int i) { return i == 0 ? 0 : 3 * i - 1; };
    auto y_pos = [](int i) { return 3 * i; };
    auto k_pos = [segments](int i) { return i == segments ? 3 * segments : 3 * i + 1; };
    for (int i = 0; i <= segments; ++i) pos[i] = k_pos(i);
    for (int i = 0; i <= segments; ++i) pos[segments + 1 + i] = x_pos(i);
    for (int i = 1; i <= segments - 1; ++i) pos[2 * segments + 1 + i] = y_pos(i);
    return pos;
}

std::vector<double> solve_banded(const AssembledSystem& sys) {
    const int n = sys.n;
    const std::vector<int> col_pos = node_interleaved_positions(n);
    const std::vector<int> row_pos = node_interleaved_row_positions(n);

    int kl = 0, ku = 0;
    for (int r = 0; r < n; ++r) {
        for (int k = sys.row_ptr[r]; k < sys.row_ptr[r + 1]; ++k) {
            const int d = row_pos[r] - col_pos[sys.col_idx[k]];
            kl = std::max(kl, d);
            ku = std::max(ku, -d);
        }
    }

    const int ldab = 2 * kl + ku + 1;
    std::vector<double> ab(static_cast<std::size_t>(ldab) * n, 0.0);
    std::vector<double> b(n, 0.0);
    std::vector<lapack_int> ipiv(n);
    for (int r = 0; r < n; ++r) {
        const int pr = row_pos[r];
        for (int k = sys.row_ptr[r]; k < sys.row_ptr[r + 1]; ++k) {
            const int pc = col_pos[sys.col_idx[k]];
            ab[static_cast<std::size_t>(pc) * ldab + (kl + ku + pr - pc)] += sys.values[k];
        }
        b[pr] = sys.rhs[r];
    }

    const lapack_int info = LAPACKE_dgbsv(LAPACK_COL_MAJOR, n, kl, ku, 1, ab.data(),
                                          ldab, ipiv.data(), b.data(), n);
    if (info != 0) {
        throw SolveFailedError("banded LU factorization failed (singular to working "
                               "precision, info=" + std::to_string(info) + ")");
    }
    std::vector<double> x(n);
    for (int c = 0; c < n; ++c) x[c] = b[col_pos[c]];
    return x;
}

std::vector<double> solve_gmres(const AssembledSystem& sys) {
    const int n = sys.n;

    // Equilibrate rows first: the velocity rows carry a 1/tau scale that
    // otherwise lets the left-preconditioned residual look converged while
    // the true residual is not.
    std::vector<double> row_scale(n, 1.0);
    for (int r = 0; r < n; ++r) {
        double biggest = 0.0;
        for (int k = sys.row_ptr[r]; k < sys.row_ptr[r + 1]; ++k) {
            biggest = std::max(biggest, std::abs(sys.values[k]));
        }
        if (biggest > 0.0) row_scale[r] = 1.0 / biggest;
    }

    Eigen::SparseMatrix<double> a(n, n);
    {
        std::vector<Eigen::Triplet<double>> trips;
        trips.reserve(sys.values.size());
        for (int r = 0; r < n; ++r) {
            for (int k = sys.row_ptr[r]; k < sys.row_ptr[r + 1]; ++k) {
                trips.emplace_back(r, sys.col_idx[k], row_scale[r] * sys.values[k]);
            }
        }
        a.setFromTriplets(trips.begin(), trips.end());
    }

    Eigen::GMRES<Eigen::SparseMatrix<double>, Eigen::IncompleteLUT<double>> gmres;
    gmres.preconditioner().setDroptol(1e-12);
    gmres.preconditioner().setFillfactor(30);
    gmres.setTolerance(1e-12);
    gmres.set_restart(100);
    gmres.setMaxIterations(20 * n);
    gmres.compute(a);
    if (gmres.info() != Eigen::Success) {
        throw SolveFailedError("GMRES preconditioner setup failed");
    }

    std::vector<double> x(n, 0.0);
    const double b_norm = sys.rhs_norm();
    for (int sweep = 0; sweep < 6; ++sweep) {
        const std::vector<double> ax = sys.multiply(x);
        Eigen::VectorXd r(n);
        double true_residual = 0.0;
        for (int i = 0; i < n; ++i) {
            const double ri = sys.rhs[i] - ax[i];
            true_residual += ri * ri;
            r[i] = row_scale[i] * ri;
        }
        if (std::sqrt(true_residual) <= 1e-12 * (1.0 + b_norm)) {
            return x;
        }
        const Eigen::VectorXd dx = gmres.solve(r);
        if (gmres.info() != Eigen::Success) {
            throw SolveFailedError("GMRES did not converge (error " +
                                   std::to_string(gmres.error()) + ")");
        }
        for (int i = 0; i < n; ++i) x[i] += dx[i];
    }
    if (sys.residual_norm(x) > 1e-10 * (1.0 + b_norm)) {
        throw SolveFailedError("GMRES refinement stalled above the residual target");
    }
    return x;
}

}  // namespace

std::vector<double> solve_linear_system(const AssembledSystem& system,
                                        LinearBackend backend) {
    if (system.n <= 0 || system.rhs.size() != static_cast<std::size_t>(system.n)) {
        throw InvalidArgumentError("malformed linear system");
    }
    switch (backend) {
        case LinearBackend::Direct: return solve_banded(system);
        case LinearBackend::Gmres: return solve_gmres(system);
    }
    throw InvalidArgumentError("unknown linear backend");
}

}  // namespace dewet
