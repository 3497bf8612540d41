#include "stabbounds/dense.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace stabbounds {

CMatrix CMatrix::identity(int d) {
    CMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = 1.0;
    return m;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
    if (dim != o.dim) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] += o.a[i];
    return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
    if (dim != o.dim) throw std::invalid_argument("matrix dimension mismatch");
    for (size_t i = 0; i < a.size(); ++i) a[i] -= o.a[i];
    return *this;
}

CMatrix& CMatrix::operator*=(double s) {
    for (auto& v : a) v *= s;
    return *this;
}

CMatrix operator+(CMatrix l, const CMatrix& r) { return l += r; }
CMatrix operator-(CMatrix l, const CMatrix& r) { return l -= r; }
CMatrix operator*(double s, CMatrix m) { return m *= s; }

CMatrix matmul(const CMatrix& l, const CMatrix& r) {
    if (l.dim != r.dim) throw std::invalid_argument("matrix dimension mismatch");
    const int d = l.dim;
    CMatrix out(d);
    for (int i = 0; i < d; ++i) {
        for (int k = 0; k < d; ++k) {
            const cdouble lik = l(i, k);
            if (lik == cdouble{}) continue;
            for (int j = 0; j < d; ++j) out(i, j) += lik * r(k, j);
        }
    }
    return out;
}

CMatrix adjoint(const CMatrix& m) {
    CMatrix out(m.dim);
    for (int i = 0; i < m.dim; ++i)
        for (int j = 0; j < m.dim; ++j) out(i, j) = std::conj(m(j, i));
    return out;
}

CMatrix kron(const CMatrix& l, const CMatrix& r) {
    CMatrix out(l.dim * r.dim);
    for (int i = 0; i < l.dim; ++i)
        for (int j = 0; j < l.dim; ++j) {
            const cdouble lij = l(i, j);
            if (lij == cdouble{}) continue;
            for (int p = 0; p < r.dim; ++p)
                for (int q = 0; q < r.dim; ++q)
                    out(i * r.dim + p, j * r.dim + q) = lij * r(p, q);
        }
    return out;
}

cdouble trace(const CMatrix& m) {
    cdouble t = 0.0;
    for (int i = 0; i < m.dim; ++i) t += m(i, i);
    return t;
}

double frobenius_norm(const CMatrix& m) {
    double s = 0.0;
    for (const auto& v : m.a) s += std::norm(v);
    return std::sqrt(s);
}

double max_abs_diff(const CMatrix& l, const CMatrix& r) {
    if (l.dim != r.dim) throw std::invalid_argument("matrix dimension mismatch");
    double worst = 0.0;
    for (size_t i = 0; i < l.a.size(); ++i) worst = std::max(worst, std::abs(l.a[i] - r.a[i]));
    return worst;
}

bool is_hermitian(const CMatrix& m, double tol) {
    for (int i = 0; i < m.dim; ++i)
        for (int j = i; j < m.dim; ++j)
            if (std::abs(m(i, j) - std::conj(m(j, i))) > tol) return false;
    return true;
}

double inner_real(const CMatrix& l, const CMatrix& r) {
    if (l.dim != r.dim) throw std::invalid_argument("matrix dimension mismatch");
    double s = 0.0;
    for (size_t i = 0; i < l.a.size(); ++i)
        s += l.a[i].real() * r.a[i].real() + l.a[i].imag() * r.a[i].imag();
    return s;
}

CMatrix partial_transpose_dense(const CMatrix& m, std::uint32_t parties, int n_qubits) {
    if (m.dim != (1 << n_qubits)) throw std::invalid_argument("dimension is not 2^n");
    const std::uint32_t mask = parties;
    CMatrix out(m.dim);
    for (std::uint32_t r = 0; r < static_cast<std::uint32_t>(m.dim); ++r)
        for (std::uint32_t c = 0; c < static_cast<std::uint32_t>(m.dim); ++c) {
            const std::uint32_t rr = (r & ~mask) | (c & mask);
            const std::uint32_t cc = (c & ~mask) | (r & mask);
            out(static_cast<int>(rr), static_cast<int>(cc)) = m(static_cast<int>(r), static_cast<int>(c));
        }
    return out;
}

}  // namespace stabbounds
