#include "stabbounds/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace stabbounds {

namespace {

int popcount(QubitMask m) { return std::popcount(m); }

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) throw std::invalid_argument("qubit count must be in [1, 16]");
}

CMatrix single_qubit_dense(bool xb, bool zb) {
    CMatrix m(2);
    if (!xb && !zb) {
        m(0, 0) = 1.0;
        m(1, 1) = 1.0;
    } else if (xb && !zb) {
        m(0, 1) = 1.0;
        m(1, 0) = 1.0;
    } else if (!xb && zb) {
        m(0, 0) = 1.0;
        m(1, 1) = -1.0;
    } else {
        m(0, 1) = cdouble(0.0, -1.0);
        m(1, 0) = cdouble(0.0, 1.0);
    }
    return m;
}

}  // namespace

PauliString::PauliString(int n_qubits) : n(n_qubits) { check_qubit_count(n_qubits); }

PauliString::PauliString(int n_qubits, QubitMask x_bits, QubitMask z_bits, int sign_)
    : n(n_qubits), x(x_bits), z(z_bits), sign(sign_) {
    check_qubit_count(n_qubits);
    const QubitMask allowed = (n_qubits == 32) ? ~QubitMask{0} : ((QubitMask{1} << n_qubits) - 1);
    if ((x & ~allowed) || (z & ~allowed)) throw std::invalid_argument("pauli mask exceeds qubit count");
    if (sign_ != 1 && sign_ != -1) throw std::invalid_argument("sign must be +1 or -1");
}

PauliString PauliString::from_label(std::string_view label, int sign_) {
    const int n = static_cast<int>(label.size());
    check_qubit_count(n);
    QubitMask x = 0, z = 0;
    for (int q = 0; q < n; ++q) {
        switch (label[q]) {
            case 'I': break;
            case 'X': x |= QubitMask{1} << q; break;
            case 'Z': z |= QubitMask{1} << q; break;
            case 'Y':
                x |= QubitMask{1} << q;
                z |= QubitMask{1} << q;
                break;
            default:
                throw std::invalid_argument("pauli label may only contain I, X, Y, Z");
        }
    }
    return PauliString(n, x, z, sign_);
}

bool PauliString::commutes_with(const PauliString& o) const {
    if (n != o.n) throw std::invalid_argument("pauli size mismatch");
    return ((popcount(x & o.z) + popcount(z & o.x)) & 1) == 0;
}

std::string PauliString::label() const {
    std::string s(static_cast<size_t>(n), 'I');
    for (int q = 0; q < n; ++q) {
        const bool xb = (x >> q) & 1, zb = (z >> q) & 1;
        if (xb && zb)
            s[q] = 'Y';
        else if (xb)
            s[q] = 'X';
        else if (zb)
            s[q] = 'Z';
    }
    return s;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
    if (a.n != b.n) throw std::invalid_argument("pauli size mismatch");
    if (!a.commutes_with(b)) throw std::invalid_argument("product of anticommuting paulis is not hermitian");
    // Exponent of i in (i^{x1.z1} sympl_a)(i^{x2.z2} sympl_b) written back in
    // hermitian form i^{x3.z3} sympl_c; even for commuting inputs.
    int g = popcount(a.x & a.z) + popcount(b.x & b.z) + 2 * popcount(a.z & b.x) -
            popcount((a.x ^ b.x) & (a.z ^ b.z));
    g = ((g % 4) + 4) % 4;
    const int phase = (g == 0) ? 1 : -1;
    return PauliString(a.n, a.x ^ b.x, a.z ^ b.z, a.sign * b.sign * phase);
}

int pt_sign(const PauliString& p, QubitMask parties) {
    return (popcount(p.x & p.z & parties) & 1) ? -1 : 1;
}

int dephasing_weight(const PauliString& p) { return popcount(p.x); }

CMatrix to_dense(const PauliString& p) {
    if (p.n > 8) throw std::invalid_argument("dense pauli limited to 8 qubits");
    CMatrix m(1);
    m(0, 0) = 1.0;
    for (int q = 0; q < p.n; ++q) m = kron(single_qubit_dense((p.x >> q) & 1, (p.z >> q) & 1), m);
    return static_cast<double>(p.sign) * m;
}

StabilizerSpec StabilizerSpec::graph(int n, const std::vector<std::pair<int, int>>& edges) {
    check_qubit_count(n);
    StabilizerSpec spec;
    spec.family = Family::Graph;
    spec.n = n;
    spec.edges = edges;
    std::vector<QubitMask> neighbors(static_cast<size_t>(n), 0);
    for (const auto& [a, b] : edges) {
        if (a < 1 || a > n || b < 1 || b > n) throw std::invalid_argument("edge endpoint out of range");
        if (a == b) throw std::invalid_argument("self-loop edge");
        const QubitMask am = QubitMask{1} << (a - 1), bm = QubitMask{1} << (b - 1);
        if (neighbors[a - 1] & bm) throw std::invalid_argument("duplicate edge");
        neighbors[a - 1] |= bm;
        neighbors[b - 1] |= am;
    }
    for (int q = 0; q < n; ++q)
        spec.generators.push_back(PauliString(n, QubitMask{1} << q, neighbors[q]));
    return spec;
}

StabilizerSpec StabilizerSpec::ghz(int n) {
    check_qubit_count(n);
    StabilizerSpec spec;
    spec.family = Family::Ghz;
    spec.n = n;
    const QubitMask all = (n == 32) ? ~QubitMask{0} : ((QubitMask{1} << n) - 1);
    spec.generators.push_back(PauliString(n, all, 0));
    for (int k = 2; k <= n; ++k)
        spec.generators.push_back(PauliString(n, 0, (QubitMask{1} << (k - 2)) | (QubitMask{1} << (k - 1))));
    return spec;
}

StabilizerSpec StabilizerSpec::line_cluster(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return graph(n, edges);
}

StabilizerSpec StabilizerSpec::cycle_cluster(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 qubits");
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return graph(n, edges);
}

PauliString group_element(const StabilizerSpec& spec, std::uint32_t index) {
    if (index >> spec.n) throw std::invalid_argument("group index out of range");
    PauliString p(spec.n);
    for (int k = 0; k < spec.n; ++k)
        if ((index >> k) & 1) p = multiply(p, spec.generators[k]);
    return p;
}

}  // namespace stabbounds
