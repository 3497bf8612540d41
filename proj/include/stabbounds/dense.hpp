#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace stabbounds {

using cdouble = std::complex<double>;

// Dense row-major complex matrix. Small dimensions only (cross-checks and the
// SDP path); the symmetric machinery never materializes these above n = 8.
struct CMatrix {
    int dim = 0;
    std::vector<cdouble> a;

    CMatrix() = default;
    explicit CMatrix(int d) : dim(d), a(static_cast<size_t>(d) * d) {}

    cdouble& operator()(int r, int c) { return a[static_cast<size_t>(r) * dim + c]; }
    const cdouble& operator()(int r, int c) const { return a[static_cast<size_t>(r) * dim + c]; }

    static CMatrix identity(int d);
    static CMatrix zero(int d) { return CMatrix(d); }

    CMatrix& operator+=(const CMatrix& o);
    CMatrix& operator-=(const CMatrix& o);
    CMatrix& operator*=(double s);
};

CMatrix operator+(CMatrix l, const CMatrix& r);
CMatrix operator-(CMatrix l, const CMatrix& r);
CMatrix operator*(double s, CMatrix m);
CMatrix matmul(const CMatrix& l, const CMatrix& r);
CMatrix adjoint(const CMatrix& m);
CMatrix kron(const CMatrix& l, const CMatrix& r);
cdouble trace(const CMatrix& m);
double frobenius_norm(const CMatrix& m);
double max_abs_diff(const CMatrix& l, const CMatrix& r);
bool is_hermitian(const CMatrix& m, double tol = 1e-12);

// Real part of <A, B> = tr(A^dagger B); exact inner product for Hermitian args.
double inner_real(const CMatrix& l, const CMatrix& r);

// Partial transpose on the qubits selected by `parties` (bit k set = qubit k+1,
// qubit 1 is the least significant bit of a computational-basis index).
CMatrix partial_transpose_dense(const CMatrix& m, std::uint32_t parties, int n_qubits);

}  // namespace stabbounds
