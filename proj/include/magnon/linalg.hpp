#ifndef MAGNON_LINALG_HPP
#define MAGNON_LINALG_HPP

#include <cblas.h>
#include <lapacke.h>

#include <string>
#include <utility>
#include <vector>

#include "magnon/errors.hpp"

namespace magnon {

// Real symmetric tridiagonal matrix. For the single-excitation chain the
// off-diagonal is the uniform hopping J.
struct SymTridiagonal {
    std::vector<double> diagonal;
    std::vector<double> off_diagonal;

    int size() const { return static_cast<int>(diagonal.size()); }
};

// Full eigensystem; eigenvalues ascending, eigenvectors column-major
// (column j at vectors[j*n .. j*n+n)).
struct TridiagonalEigen {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;
};

inline TridiagonalEigen decompose(const SymTridiagonal& t) {
    TridiagonalEigen eig;
    eig.n = t.size();
    eig.values = t.diagonal;
    std::vector<double> e = t.off_diagonal;
    eig.vectors.resize(static_cast<size_t>(eig.n) * eig.n);
    if (eig.n == 0) return eig;
    if (eig.n == 1) {
        eig.vectors[0] = 1.0;
        return eig;
    }
    lapack_int info = LAPACKE_dstevd(LAPACK_COL_MAJOR, 'V', eig.n, eig.values.data(),
                                     e.data(), eig.vectors.data(), eig.n);
    if (info != 0)
        throw numerical_error("dstevd failed to converge (info=" + std::to_string(info) +
                              ", n=" + std::to_string(eig.n) + ")");
    return eig;
}

// Smallest eigenpair only (O(n^2), used for ground states).
inline std::pair<double, std::vector<double>> lowest_eigenpair(const SymTridiagonal& t) {
    int n = t.size();
    if (n == 0) throw invalid_input("lowest_eigenpair: empty matrix");
    std::vector<double> d = t.diagonal, e = t.off_diagonal, w(n), z(n);
    e.resize(n > 0 ? n : 1);
    lapack_int m = 0;
    std::vector<lapack_int> isuppz(2);
    lapack_int info = LAPACKE_dstevr(LAPACK_COL_MAJOR, 'V', 'I', n, d.data(), e.data(),
                                     0.0, 0.0, 1, 1, 0.0, &m, w.data(), z.data(), n,
                                     isuppz.data());
    if (info != 0 || m < 1)
        throw numerical_error("dstevr failed on lowest eigenpair (info=" +
                              std::to_string(info) + ")");
    return {w[0], std::move(z)};
}

// Dense symmetric eigensystem (projection-oracle sized problems only).
struct DenseEigen {
    int n = 0;
    std::vector<double> values;
    std::vector<double> vectors;  // column-major
};

inline DenseEigen dense_symmetric_eigen(int n, std::vector<double> a_col_major) {
    DenseEigen eig;
    eig.n = n;
    eig.values.resize(n);
    eig.vectors = std::move(a_col_major);
    lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'L', n, eig.vectors.data(), n,
                                     eig.values.data());
    if (info != 0)
        throw numerical_error("dsyevd failed (info=" + std::to_string(info) + ")");
    return eig;
}

// In-place solve of a small dense system A x = b with partial pivoting.
inline std::vector<double> solve_linear_system(int n, std::vector<double> a_col_major,
                                               std::vector<double> b) {
    std::vector<lapack_int> ipiv(n);
    lapack_int info = LAPACKE_dgesv(LAPACK_COL_MAJOR, n, 1, a_col_major.data(), n,
                                    ipiv.data(), b.data(), n);
    if (info != 0)
        throw numerical_error("dgesv: singular or ill-conditioned system (info=" +
                              std::to_string(info) + ")");
    return b;
}

}  // namespace magnon

#endif
