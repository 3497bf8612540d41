#include "stabbounds/sdp.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace stabbounds {

namespace {

constexpr double kEqualityTol = 1e-9;
constexpr double kInteriorMargin = 1e-9;
constexpr double kMuShrink = 0.2;
constexpr double kVariableCap = 1e4;
constexpr int kMaxOuter = 50;
constexpr int kMaxInner = 60;

// ---- small dense helpers ----

bool cholesky(const CMatrix& m, CMatrix& l) {
    const int d = m.dim;
    l = CMatrix(d);
    for (int i = 0; i < d; ++i) {
        cdouble s = m(i, i);
        for (int k = 0; k < i; ++k) s -= l(i, k) * std::conj(l(i, k));
        const double diag = s.real();
        if (diag <= 0.0 || !std::isfinite(diag)) return false;
        const double root = std::sqrt(diag);
        l(i, i) = root;
        for (int j = i + 1; j < d; ++j) {
            cdouble v = m(j, i);
            for (int k = 0; k < i; ++k) v -= l(j, k) * std::conj(l(i, k));
            l(j, i) = v / root;
        }
    }
    return true;
}

// m^{-1} from its Cholesky factor: W = L^{-1}, m^{-1} = W^dagger W.
CMatrix inverse_from_cholesky(const CMatrix& l) {
    const int d = l.dim;
    CMatrix w(d);
    for (int c = 0; c < d; ++c) {
        w(c, c) = 1.0 / l(c, c);
        for (int r = c + 1; r < d; ++r) {
            cdouble s = 0.0;
            for (int k = c; k < r; ++k) s += l(r, k) * w(k, c);
            w(r, c) = -s / l(r, r);
        }
    }
    CMatrix inv(d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            cdouble s = 0.0;
            for (int k = std::max(i, j); k < d; ++k) s += std::conj(w(k, i)) * w(k, j);
            inv(i, j) = s;
        }
    return inv;
}

struct RealMatrix {
    int rows = 0, cols = 0;
    std::vector<double> a;
    RealMatrix() = default;
    RealMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}
    double& operator()(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    double operator()(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Solves the symmetric positive definite system in place; tiny ridge fallback.
std::vector<double> solve_spd(RealMatrix h, std::vector<double> rhs) {
    const int d = h.rows;
    double scale = 0.0;
    for (int i = 0; i < d; ++i) scale = std::max(scale, std::abs(h(i, i)));
    for (int attempt = 0; attempt < 40; ++attempt) {
        RealMatrix l(d, d);
        bool ok = true;
        for (int i = 0; i < d && ok; ++i) {
            double s = h(i, i);
            for (int k = 0; k < i; ++k) s -= l(i, k) * l(i, k);
            if (s <= 0.0 || !std::isfinite(s)) {
                ok = false;
                break;
            }
            l(i, i) = std::sqrt(s);
            for (int j = i + 1; j < d; ++j) {
                double v = h(j, i);
                for (int k = 0; k < i; ++k) v -= l(j, k) * l(i, k);
                l(j, i) = v / l(i, i);
            }
        }
        if (ok) {
            std::vector<double> y(d), x(d);
            for (int i = 0; i < d; ++i) {
                double s = rhs[i];
                for (int k = 0; k < i; ++k) s -= l(i, k) * y[k];
                y[i] = s / l(i, i);
            }
            for (int i = d - 1; i >= 0; --i) {
                double s = y[i];
                for (int k = i + 1; k < d; ++k) s -= l(k, i) * x[k];
                x[i] = s / l(i, i);
            }
            return x;
        }
        const double ridge = std::max(scale, 1.0) * 1e-14 * std::pow(10.0, attempt);
        for (int i = 0; i < d; ++i) h(i, i) += ridge;
    }
    throw std::runtime_error("newton system is numerically singular");
}

// ---- compiled barrier data ----

struct Entry {
    int r, c;
    cdouble w;
};

struct ParamBasis {
    int param;
    std::vector<Entry> entries;
};

struct CompiledBlock {
    int dim = 0;
    CMatrix constant;
    std::vector<ParamBasis> params;
    std::string name;
    bool in_barrier = true;

    CMatrix evaluate(const std::vector<double>& x) const {
        CMatrix m = constant;
        for (const auto& pb : params)
            for (const auto& e : pb.entries) m(e.r, e.c) += x[pb.param] * e.w;
        return m;
    }
};

// Hermitian parameter basis of a d x d variable: d diagonal entries followed
// by (re, im) pairs for r < c in row-major order. d^2 real parameters.
int param_count(int d) { return d * d; }

std::vector<Entry> basis_entries(int d, int local_param) {
    if (local_param < d) return {{local_param, local_param, 1.0}};
    int k = local_param - d;
    const int pair = k / 2;
    const bool imag = k % 2;
    int r = 0, c = 1, left = pair;
    for (r = 0; r < d; ++r) {
        const int row_pairs = d - 1 - r;
        if (left < row_pairs) {
            c = r + 1 + left;
            break;
        }
        left -= row_pairs;
    }
    if (!imag) return {{r, c, 1.0}, {c, r, 1.0}};
    return {{r, c, cdouble(0.0, 1.0)}, {c, r, cdouble(0.0, -1.0)}};
}

std::vector<double> params_from_matrix(const CMatrix& m) {
    const int d = m.dim;
    std::vector<double> p(static_cast<size_t>(param_count(d)), 0.0);
    for (int i = 0; i < d; ++i) p[i] = m(i, i).real();
    int idx = d;
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c) {
            p[idx++] = m(r, c).real();
            p[idx++] = m(r, c).imag();
        }
    return p;
}

CMatrix matrix_from_params(const double* p, int d) {
    CMatrix m(d);
    for (int i = 0; i < d; ++i) m(i, i) = p[i];
    int idx = d;
    for (int r = 0; r < d; ++r)
        for (int c = r + 1; c < d; ++c) {
            m(r, c) = cdouble(p[idx], p[idx + 1]);
            m(c, r) = std::conj(m(r, c));
            idx += 2;
        }
    return m;
}

void pt_map_entry(int& r, int& c, std::uint32_t mask) {
    const int rr = (r & ~static_cast<int>(mask)) | (c & static_cast<int>(mask));
    const int cc = (c & ~static_cast<int>(mask)) | (r & static_cast<int>(mask));
    r = rr;
    c = cc;
}

struct Compiled {
    int num_params = 0;
    std::vector<int> var_base;
    std::vector<double> objective;
    std::vector<CompiledBlock> blocks;
    RealMatrix eq;  // neq x P
    std::vector<double> eq_rhs;
};

Compiled compile(const SdpProblem& problem) {
    Compiled cp;
    const int nv = static_cast<int>(problem.variables.size());
    cp.var_base.resize(nv);
    for (int v = 0; v < nv; ++v) {
        if (problem.variables[v].dim < 1) throw std::invalid_argument("variable dimension must be >= 1");
        cp.var_base[v] = cp.num_params;
        cp.num_params += param_count(problem.variables[v].dim);
    }

    cp.objective.assign(static_cast<size_t>(cp.num_params), 0.0);
    for (int v = 0; v < nv && v < static_cast<int>(problem.objective.size()); ++v) {
        const CMatrix& c = problem.objective[v];
        if (c.dim == 0) continue;
        const int d = problem.variables[v].dim;
        if (c.dim != d) throw std::invalid_argument("objective matrix dimension mismatch");
        for (int p = 0; p < param_count(d); ++p) {
            double s = 0.0;
            for (const auto& e : basis_entries(d, p)) s += (c(e.c, e.r) * e.w).real();
            cp.objective[cp.var_base[v] + p] += s;
        }
    }

    auto add_block = [&](int dim, const CMatrix& constant,
                         const std::vector<SdpProblem::BlockTerm>& terms, std::string name) {
        CompiledBlock block;
        block.dim = dim;
        block.constant = (constant.dim == 0) ? CMatrix(dim) : constant;
        if (block.constant.dim != dim) throw std::invalid_argument("block constant dimension mismatch");
        block.name = std::move(name);
        std::vector<std::vector<Entry>> per_param(static_cast<size_t>(cp.num_params));
        for (const auto& term : terms) {
            if (term.var < 0 || term.var >= nv) throw std::invalid_argument("block term variable index");
            const int d = problem.variables[term.var].dim;
            if (d != dim) throw std::invalid_argument("block term dimension mismatch");
            if (term.pt_mask != 0 && (1 << term.n_qubits) != d)
                throw std::invalid_argument("partial transpose needs a 2^n block");
            for (int p = 0; p < param_count(d); ++p) {
                for (auto e : basis_entries(d, p)) {
                    if (term.pt_mask != 0) pt_map_entry(e.r, e.c, term.pt_mask);
                    e.w *= term.scale;
                    per_param[cp.var_base[term.var] + p].push_back(e);
                }
            }
        }
        for (int p = 0; p < cp.num_params; ++p)
            if (!per_param[p].empty()) block.params.push_back({p, std::move(per_param[p])});
        cp.blocks.push_back(std::move(block));
    };

    for (int v = 0; v < nv; ++v)
        add_block(problem.variables[v].dim, CMatrix(),
                  {SdpProblem::BlockTerm{v, 1.0, 0, 0}}, problem.variables[v].name + " >= 0");
    // Generous caps keep every barrier subproblem bounded.
    for (int v = 0; v < nv; ++v) {
        CMatrix cap = CMatrix::identity(problem.variables[v].dim);
        cap *= kVariableCap;
        add_block(problem.variables[v].dim, cap, {SdpProblem::BlockTerm{v, -1.0, 0, 0}},
                  problem.variables[v].name + " cap");
    }
    for (const auto& blk : problem.psd_blocks) add_block(blk.dim, blk.constant, blk.terms, blk.name);

    const int neq = static_cast<int>(problem.equalities.size());
    cp.eq = RealMatrix(neq, cp.num_params);
    cp.eq_rhs.resize(static_cast<size_t>(neq));
    for (int e = 0; e < neq; ++e) {
        const auto& eq = problem.equalities[e];
        cp.eq_rhs[e] = eq.rhs;
        for (int v = 0; v < nv && v < static_cast<int>(eq.coeff.size()); ++v) {
            const CMatrix& a = eq.coeff[v];
            if (a.dim == 0) continue;
            const int d = problem.variables[v].dim;
            if (a.dim != d) throw std::invalid_argument("equality matrix dimension mismatch");
            for (int p = 0; p < param_count(d); ++p) {
                double s = 0.0;
                for (const auto& ent : basis_entries(d, p)) s += (a(ent.c, ent.r) * ent.w).real();
                cp.eq(e, cp.var_base[v] + p) += s;
            }
        }
    }
    return cp;
}

// ---- equality manifold ----

struct Manifold {
    std::vector<double> x0;  // particular solution
    RealMatrix nullspace;    // P x K
    bool consistent = true;
};

EigenSystem eigen_real(const RealMatrix& m) {
    CMatrix c(m.rows);
    for (int i = 0; i < m.rows; ++i)
        for (int j = 0; j < m.rows; ++j) c(i, j) = m(i, j);
    return eigendecompose(c);
}

Manifold build_manifold(const Compiled& cp, const std::vector<double>& hint) {
    const int P = cp.num_params;
    const int neq = cp.eq.rows;
    Manifold mf;
    mf.x0 = hint;

    if (neq > 0) {
        // Minimum-norm correction of the hint onto E x = b.
        RealMatrix gram(neq, neq);
        for (int i = 0; i < neq; ++i)
            for (int j = i; j < neq; ++j) {
                double s = 0.0;
                for (int p = 0; p < P; ++p) s += cp.eq(i, p) * cp.eq(j, p);
                gram(i, j) = gram(j, i) = s;
            }
        std::vector<double> resid(static_cast<size_t>(neq));
        for (int i = 0; i < neq; ++i) {
            double s = cp.eq_rhs[i];
            for (int p = 0; p < P; ++p) s -= cp.eq(i, p) * hint[p];
            resid[i] = s;
        }
        const EigenSystem es = eigen_real(gram);
        const double lmax = std::max(std::abs(es.values.front()), std::abs(es.values.back()));
        std::vector<double> y(static_cast<size_t>(neq), 0.0);
        for (int k = 0; k < neq; ++k) {
            if (es.values[k] <= lmax * 1e-12) continue;
            double dot = 0.0;
            for (int i = 0; i < neq; ++i) dot += es.vectors(i, k).real() * resid[i];
            const double coeff = dot / es.values[k];
            for (int i = 0; i < neq; ++i) y[i] += coeff * es.vectors(i, k).real();
        }
        for (int p = 0; p < P; ++p) {
            double s = 0.0;
            for (int i = 0; i < neq; ++i) s += cp.eq(i, p) * y[i];
            mf.x0[p] += s;
        }
        double worst = 0.0, bscale = 1.0;
        for (int i = 0; i < neq; ++i) {
            double s = -cp.eq_rhs[i];
            bscale = std::max(bscale, std::abs(cp.eq_rhs[i]));
            for (int p = 0; p < P; ++p) s += cp.eq(i, p) * mf.x0[p];
            worst = std::max(worst, std::abs(s));
        }
        if (worst > kEqualityTol * bscale) {
            mf.consistent = false;
            return mf;
        }

        // Nullspace of E from the small eigenvalues of E^T E.
        RealMatrix g2(P, P);
        for (int i = 0; i < P; ++i)
            for (int j = i; j < P; ++j) {
                double s = 0.0;
                for (int e = 0; e < neq; ++e) s += cp.eq(e, i) * cp.eq(e, j);
                g2(i, j) = g2(j, i) = s;
            }
        const EigenSystem ns = eigen_real(g2);
        const double nmax = std::max(1e-300, std::abs(ns.values.back()));
        std::vector<int> keep;
        for (int k = 0; k < P; ++k)
            if (ns.values[k] <= nmax * 1e-10) keep.push_back(k);
        mf.nullspace = RealMatrix(P, static_cast<int>(keep.size()));
        for (int c = 0; c < static_cast<int>(keep.size()); ++c)
            for (int p = 0; p < P; ++p) mf.nullspace(p, c) = ns.vectors(p, keep[c]).real();

        // Project each null direction exactly off the row space so iterates
        // cannot drift from E x = b.
        for (int c = 0; c < mf.nullspace.cols; ++c) {
            std::vector<double> w(static_cast<size_t>(neq), 0.0);
            for (int i = 0; i < neq; ++i) {
                double s = 0.0;
                for (int p = 0; p < P; ++p) s += cp.eq(i, p) * mf.nullspace(p, c);
                w[i] = s;
            }
            std::vector<double> proj(static_cast<size_t>(neq), 0.0);
            for (int k = 0; k < neq; ++k) {
                if (es.values[k] <= lmax * 1e-12) continue;
                double dot = 0.0;
                for (int i = 0; i < neq; ++i) dot += es.vectors(i, k).real() * w[i];
                const double coeff = dot / es.values[k];
                for (int i = 0; i < neq; ++i) proj[i] += coeff * es.vectors(i, k).real();
            }
            for (int p = 0; p < P; ++p) {
                double s = 0.0;
                for (int i = 0; i < neq; ++i) s += cp.eq(i, p) * proj[i];
                mf.nullspace(p, c) -= s;
            }
        }
    } else {
        mf.nullspace = RealMatrix(P, P);
        for (int p = 0; p < P; ++p) mf.nullspace(p, p) = 1.0;
    }
    return mf;
}

// ---- barrier core ----

struct BarrierState {
    std::vector<double> x;  // full parameter vector
    int outer_iterations = 0;
    bool converged = false;
};

double barrier_value(const Compiled& cp, const std::vector<double>& x, double mu, bool& interior) {
    double value = 0.0;
    interior = true;
    for (int p = 0; p < cp.num_params; ++p) value += cp.objective[p] * x[p] / mu;
    for (const auto& block : cp.blocks) {
        if (!block.in_barrier) continue;
        CMatrix l;
        if (!cholesky(block.evaluate(x), l)) {
            interior = false;
            return 0.0;
        }
        double logdet = 0.0;
        for (int i = 0; i < block.dim; ++i) logdet += std::log(l(i, i).real());
        value -= 2.0 * logdet;
    }
    return value;
}

// Minimizes c.x restricted to x = x0 + N z with every barrier block PD.
// early_stop, when set, may end the outer loop as soon as the current iterate
// satisfies the caller (used by the feasibility phase).
BarrierState barrier_minimize(const Compiled& cp, const Manifold& mf, double total_block_dim,
                              const std::function<bool(const std::vector<double>&)>& early_stop) {
    const int P = cp.num_params;
    const int K = mf.nullspace.cols;
    BarrierState state;
    state.x = mf.x0;

    double mu = 1.0;
    const double mu_floor = 1e-8 / std::max(1.0, total_block_dim);
    for (int outer = 0; outer < kMaxOuter; ++outer) {
        ++state.outer_iterations;
        for (int inner = 0; inner < kMaxInner; ++inner) {
            // Gradient and Hessian of c.x/mu - sum log det over the full
            // parameter space, then reduced through the nullspace basis.
            std::vector<double> grad(static_cast<size_t>(P), 0.0);
            for (int p = 0; p < P; ++p) grad[p] = cp.objective[p] / mu;
            RealMatrix hess(P, P);
            for (const auto& block : cp.blocks) {
                if (!block.in_barrier) continue;
                CMatrix l;
                if (!cholesky(block.evaluate(state.x), l))
                    throw std::runtime_error("barrier iterate left the cone");
                const CMatrix inv = inverse_from_cholesky(l);
                const int np = static_cast<int>(block.params.size());
                for (int a = 0; a < np; ++a) {
                    const auto& pa = block.params[a];
                    double g = 0.0;
                    for (const auto& e : pa.entries) g += (e.w * inv(e.c, e.r)).real();
                    grad[pa.param] -= g;
                    for (int b = a; b < np; ++b) {
                        const auto& pb = block.params[b];
                        cdouble h = 0.0;
                        for (const auto& e1 : pa.entries)
                            for (const auto& e2 : pb.entries)
                                h += e1.w * inv(e1.c, e2.r) * e2.w * inv(e2.c, e1.r);
                        hess(pa.param, pb.param) += h.real();
                        if (b != a) hess(pb.param, pa.param) += h.real();
                    }
                }
            }

            std::vector<double> gz(static_cast<size_t>(K), 0.0);
            for (int k = 0; k < K; ++k) {
                double s = 0.0;
                for (int p = 0; p < P; ++p) s += mf.nullspace(p, k) * grad[p];
                gz[k] = s;
            }
            RealMatrix hn(P, K);
            for (int p = 0; p < P; ++p)
                for (int k = 0; k < K; ++k) {
                    double s = 0.0;
                    for (int q = 0; q < P; ++q) s += hess(p, q) * mf.nullspace(q, k);
                    hn(p, k) = s;
                }
            RealMatrix hz(K, K);
            for (int i = 0; i < K; ++i)
                for (int j = 0; j < K; ++j) {
                    double s = 0.0;
                    for (int p = 0; p < P; ++p) s += mf.nullspace(p, i) * hn(p, j);
                    hz(i, j) = s;
                }

            std::vector<double> neg(gz);
            for (auto& v : neg) v = -v;
            const std::vector<double> dz = solve_spd(std::move(hz), std::move(neg));

            double decrement = 0.0;
            for (int k = 0; k < K; ++k) decrement -= gz[k] * dz[k];
            if (!(decrement > 0.0)) break;

            std::vector<double> dx(static_cast<size_t>(P), 0.0);
            for (int p = 0; p < P; ++p) {
                double s = 0.0;
                for (int k = 0; k < K; ++k) s += mf.nullspace(p, k) * dz[k];
                dx[p] = s;
            }

            bool interior = false;
            const double f0 = barrier_value(cp, state.x, mu, interior);
            double stepsize = 1.0;
            std::vector<double> trial(static_cast<size_t>(P));
            bool moved = false;
            for (int bt = 0; bt < 60; ++bt) {
                for (int p = 0; p < P; ++p) trial[p] = state.x[p] + stepsize * dx[p];
                bool ok = false;
                const double f1 = barrier_value(cp, trial, mu, ok);
                if (ok && f1 <= f0 - 1e-4 * stepsize * decrement) {
                    state.x = trial;
                    moved = true;
                    break;
                }
                stepsize *= 0.5;
            }
            if (!moved) break;
            if (early_stop && early_stop(state.x)) {
                state.converged = true;
                return state;
            }
            if (decrement * 0.5 < 1e-10) break;
        }
        if (early_stop && early_stop(state.x)) {
            state.converged = true;
            return state;
        }
        if (mu < mu_floor) {
            state.converged = true;
            return state;
        }
        mu *= kMuShrink;
    }
    return state;
}

double min_block_eigenvalue(const Compiled& cp, const std::vector<double>& x) {
    double worst = kInteriorMargin * 1000;
    for (const auto& block : cp.blocks) {
        const EigenSystem es = eigendecompose(block.evaluate(x));
        worst = std::min(worst, es.values.front());
    }
    return worst;
}

}  // namespace

// ---- eigensolver ----

EigenSystem eigendecompose(const CMatrix& m) {
    if (m.dim < 1) throw std::invalid_argument("empty matrix");
    if (!is_hermitian(m, 1e-9 * std::max(1.0, frobenius_norm(m))))
        throw std::invalid_argument("matrix is not hermitian");
    const int d = m.dim;
    CMatrix a = m;
    // Symmetrize exactly so rounding in the input cannot bias the sweeps.
    for (int i = 0; i < d; ++i) {
        a(i, i) = a(i, i).real();
        for (int j = i + 1; j < d; ++j) {
            const cdouble v = 0.5 * (a(i, j) + std::conj(a(j, i)));
            a(i, j) = v;
            a(j, i) = std::conj(v);
        }
    }
    CMatrix v = CMatrix::identity(d);

    const double scale = std::max(frobenius_norm(a), 1e-300);
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) off += std::norm(a(p, q));
        if (std::sqrt(off) <= 1e-15 * scale) break;

        for (int p = 0; p < d; ++p)
            for (int q = p + 1; q < d; ++q) {
                const cdouble g = a(p, q);
                const double mag = std::abs(g);
                if (mag <= 1e-18 * scale) continue;

                // Phase rotation making the pivot real, then a real Jacobi
                // rotation annihilating it.
                const cdouble w = g / mag;
                for (int k = 0; k < d; ++k) {
                    a(q, k) *= w;
                    a(k, q) *= std::conj(w);
                    v(k, q) *= std::conj(w);
                }

                const double app = a(p, p).real(), aqq = a(q, q).real(), apq = a(p, q).real();
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int k = 0; k < d; ++k) {
                    const cdouble akp = a(p, k), akq = a(q, k);
                    a(p, k) = c * akp - s * akq;
                    a(q, k) = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const cdouble akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - s * akq;
                    a(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < d; ++k) {
                    const cdouble vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = c * vkp - s * vkq;
                    v(k, q) = s * vkp + c * vkq;
                }
            }
    }

    EigenSystem out;
    out.values.resize(static_cast<size_t>(d));
    std::vector<int> order(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int l, int r) { return a(l, l).real() < a(r, r).real(); });
    out.vectors = CMatrix(d);
    for (int c = 0; c < d; ++c) {
        out.values[c] = a(order[c], order[c]).real();
        for (int r = 0; r < d; ++r) out.vectors(r, c) = v(r, order[c]);
    }
    return out;
}

// ---- solver ----

SdpSolution solve_sdp(const SdpProblem& problem) {
    if (problem.variables.empty()) throw std::invalid_argument("sdp needs at least one variable");
    Compiled cp = compile(problem);

    std::vector<double> hint(static_cast<size_t>(cp.num_params), 0.0);
    for (size_t v = 0; v < problem.variables.size(); ++v) {
        const auto& var = problem.variables[v];
        CMatrix h = var.initial_hint;
        if (h.dim == 0) {
            h = CMatrix::identity(var.dim);
            h *= 0.5;
        }
        if (h.dim != var.dim) throw std::invalid_argument("initial hint dimension mismatch");
        const auto p = params_from_matrix(h);
        std::copy(p.begin(), p.end(), hint.begin() + cp.var_base[v]);
    }

    SdpSolution sol;
    Manifold mf = build_manifold(cp, hint);
    if (!mf.consistent) {
        sol.status = SdpStatus::Infeasible;
        return sol;
    }

    // Blocks with no component along the manifold stay fixed: check them once
    // and keep them out of the barrier.
    double total_dim = 0.0;
    for (auto& block : cp.blocks) {
        double span = 0.0;
        for (const auto& pb : block.params)
            for (int k = 0; k < mf.nullspace.cols; ++k)
                span = std::max(span, std::abs(mf.nullspace(pb.param, k)));
        if (span <= 1e-12) {
            block.in_barrier = false;
            const EigenSystem es = eigendecompose(block.evaluate(mf.x0));
            if (es.values.front() < -1e-9) {
                sol.status = SdpStatus::Infeasible;
                return sol;
            }
        } else {
            total_dim += block.dim;
        }
    }

    // Feasibility phase: minimize t with every block shifted by t, stopping
    // once the shift is comfortably negative.
    {
        double worst = std::numeric_limits<double>::infinity();
        for (const auto& block : cp.blocks) {
            if (!block.in_barrier) continue;
            const EigenSystem es = eigendecompose(block.evaluate(mf.x0));
            worst = std::min(worst, es.values.front());
        }
        if (worst < 1e-6) {
            Compiled phase1 = cp;
            const int tparam = phase1.num_params++;
            phase1.objective.assign(static_cast<size_t>(phase1.num_params), 0.0);
            phase1.objective[tparam] = 1.0;
            for (auto& block : phase1.blocks) {
                if (!block.in_barrier) continue;
                ParamBasis shift;
                shift.param = tparam;
                for (int i = 0; i < block.dim; ++i) shift.entries.push_back({i, i, 1.0});
                block.params.push_back(std::move(shift));
            }
            Manifold mf1;
            mf1.consistent = true;
            mf1.x0 = mf.x0;
            mf1.x0.push_back(std::max(0.0, -worst) + 1.0);
            mf1.nullspace = RealMatrix(phase1.num_params, mf.nullspace.cols + 1);
            for (int p = 0; p < cp.num_params; ++p)
                for (int k = 0; k < mf.nullspace.cols; ++k) mf1.nullspace(p, k) = mf.nullspace(p, k);
            mf1.nullspace(tparam, mf.nullspace.cols) = 1.0;

            const BarrierState fs = barrier_minimize(
                phase1, mf1, total_dim + 1.0,
                [&](const std::vector<double>& x) { return x[tparam] < -1e-4; });
            std::vector<double> candidate(fs.x.begin(), fs.x.end() - 1);
            double margin = std::numeric_limits<double>::infinity();
            for (const auto& block : cp.blocks) {
                if (!block.in_barrier) continue;
                const EigenSystem es = eigendecompose(block.evaluate(candidate));
                margin = std::min(margin, es.values.front());
                if (margin <= kInteriorMargin) break;
            }
            if (margin <= kInteriorMargin) {
                sol.status = SdpStatus::Infeasible;
                sol.outer_iterations = fs.outer_iterations;
                return sol;
            }
            mf.x0 = candidate;
        }
    }

    const BarrierState bs = barrier_minimize(cp, mf, total_dim, nullptr);
    sol.outer_iterations = bs.outer_iterations;
    sol.status = bs.converged ? SdpStatus::Optimal : SdpStatus::MaxIterations;

    sol.values.clear();
    for (size_t v = 0; v < problem.variables.size(); ++v)
        sol.values.push_back(matrix_from_params(bs.x.data() + cp.var_base[v], problem.variables[v].dim));
    sol.objective_value = std::inner_product(cp.objective.begin(), cp.objective.end(), bs.x.begin(), 0.0);
    sol.min_block_eigenvalue = min_block_eigenvalue(cp, bs.x);
    double eqres = 0.0;
    for (int e = 0; e < cp.eq.rows; ++e) {
        double s = -cp.eq_rhs[e];
        for (int p = 0; p < cp.num_params; ++p) s += cp.eq(e, p) * bs.x[p];
        eqres = std::max(eqres, std::abs(s));
    }
    sol.max_equality_residual = eqres;
    return sol;
}

}  // namespace stabbounds
