#pragma once

#include <vector>

#include "core/errors.hpp"

namespace dewet {

// Sparse linear system in compressed-row form. For a curve with N segments
// the unknown layout is [x_0..x_N | y_1..y_{N-1} | kappa_0..kappa_N],
// dimension 3N+1, with at most 8 nonzeros per row.
struct AssembledSystem {
    int n = 0;
    std::vector<int> row_ptr;
    std::vector<int> col_idx;
    std::vector<double> values;
    std::vector<double> rhs;

    std::vector<double> multiply(const std::vector<double>& x) const;
    double residual_norm(const std::vector<double>& x) const;  // ||A x - rhs||_2
    double rhs_norm() const;
};

enum class LinearBackend {
    Direct,  // banded LU with partial pivoting (default)
    Gmres,   // restarted GMRES with ILUT preconditioning, rel. tol 1e-12
};

// Solves A x = b; throws SolveFailedError if the factorization breaks down
// or the iteration fails to converge.
std::vector<double> solve_linear_system(const AssembledSystem& system,
                                        LinearBackend backend = LinearBackend::Direct);

}  // namespace dewet
