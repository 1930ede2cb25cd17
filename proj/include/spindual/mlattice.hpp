#pragma once
// Coroot lattice modulo twice itself, eigenlattice images, the cover group of M,
// standard sequences and genuine extension counts.

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "weylb.hpp"

namespace spindual {

/// Element of L/2L in the simple-coroot basis (alpha_1^v, ..., alpha_{n-1}^v, beta^v); bit k = coordinate k.
struct MElt {
    int n = 0;
    std::uint64_t bits = 0;

    MElt operator+(const MElt& o) const { return {n, bits ^ o.bits}; }
    bool is_zero() const { return bits == 0; }
    bool operator==(const MElt&) const = default;
    auto operator<=>(const MElt&) const = default;
};

inline std::string to_string(const MElt& m) {
    std::string s;
    for (int k = 0; k < m.n; ++k) s += ((m.bits >> k) & 1) ? '1' : '0';
    return s;
}

/// Coordinates of x (standard basis, x in the coroot lattice) over the simple coroots.
inline std::vector<long long> coroot_coords(const std::vector<long long>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<long long> c(n);
    long long run = 0;
    for (int k = 0; k + 1 < n; ++k) {
        run += x[k];
        c[k] = run;
    }
    run += x[n - 1];
    if (run % 2) throw std::invalid_argument("vector not in the coroot lattice");
    c[n - 1] = run / 2;
    return c;
}

inline std::vector<long long> coroot_basis_vector(int n, int k) {
    std::vector<long long> v(n, 0);
    if (k + 1 < n) {
        v[k] = 1;
        v[k + 1] = -1;
    } else {
        v[n - 1] = 2;
    }
    return v;
}

inline MElt reduce_mod2(const std::vector<long long>& c) {
    MElt m{static_cast<int>(c.size()), 0};
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c[k] % 2) m.bits |= std::uint64_t{1} << k;
    return m;
}

inline MElt m_of_root(const RootVec& a) {
    const auto cv = coroot(a);
    return reduce_mod2(coroot_coords(std::vector<long long>(cv.begin(), cv.end())));
}

// ---------------------------------------------------------------- F2 subspaces

/// Subspace of F_2^n kept in fully reduced echelon form, pivots = leading bits, descending.
struct F2Space {
    int n = 0;
    std::vector<std::uint64_t> basis;

    static int pivot(std::uint64_t v) { return 63 - std::countl_zero(v); }

    std::uint64_t reduce(std::uint64_t v) const {
        for (auto b : basis)
            if ((v >> pivot(b)) & 1) v ^= b;
        return v;
    }
    bool contains(std::uint64_t v) const { return reduce(v) == 0; }
    int dim() const { return static_cast<int>(basis.size()); }

    void insert(std::uint64_t v) {
        v = reduce(v);
        if (!v) return;
        const int p = pivot(v);
        for (auto& b : basis)
            if ((b >> p) & 1) b ^= v;
        basis.push_back(v);
        std::sort(basis.begin(), basis.end(), std::greater<>());
    }

    bool operator==(const F2Space&) const = default;
};

inline F2Space span(int n, const std::vector<std::uint64_t>& vs) {
    F2Space s{n, {}};
    for (auto v : vs) s.insert(v);
    return s;
}

/// Zassenhaus intersection.
inline F2Space intersect(const F2Space& u, const F2Space& v) {
    const int n = u.n;
    if (2 * n > 64) throw std::out_of_range("rank too large for intersection");
    F2Space big{2 * n, {}};
    for (auto b : u.basis) big.insert((b << n) | b);
    for (auto b : v.basis) big.insert(b << n);
    F2Space out{n, {}};
    const std::uint64_t low = (n == 64) ? ~0ULL : ((std::uint64_t{1} << n) - 1);
    for (auto b : big.basis)
        if ((b >> n) == 0) out.insert(b & low);
    return out;
}

// ---------------------------------------------------------------- exact integer kernels

/// Basis of {x in Z^cols : A x = 0}; saturated because it is read off a unimodular transform.
template <class Int>
std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> a, int cols) {
    const int rows = static_cast<int>(a.size());
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, 0));
    for (int i = 0; i < cols; ++i) u[i][i] = 1;
    auto col_op = [&](int dst, int src, Int f) {  // col dst -= f * col src
        for (int r = 0; r < rows; ++r) a[r][dst] -= f * a[r][src];
        for (int r = 0; r < cols; ++r) u[r][dst] -= f * u[r][src];
    };
    auto col_swap = [&](int x, int y) {
        for (int r = 0; r < rows; ++r) std::swap(a[r][x], a[r][y]);
        for (int r = 0; r < cols; ++r) std::swap(u[r][x], u[r][y]);
    };
    int piv = 0;
    for (int r = 0; r < rows && piv < cols; ++r) {
        for (;;) {
            int best = -1;
            for (int c = piv; c < cols; ++c)
                if (a[r][c] != 0 && (best < 0 || std::abs(a[r][c]) < std::abs(a[r][best]))) best = c;
            if (best < 0) break;
            col_swap(piv, best);
            bool done = true;
            for (int c = piv + 1; c < cols; ++c)
                if (a[r][c] != 0) {
                    col_op(c, piv, a[r][c] / a[r][piv]);
                    if (a[r][c] != 0) done = false;
                }
            if (done) {
                ++piv;
                break;
            }
        }
    }
    std::vector<std::vector<Int>> ker;
    for (int c = piv; c < cols; ++c) {
        std::vector<Int> v(cols);
        for (int r = 0; r < cols; ++r) v[r] = u[r][c];
        ker.push_back(v);
    }
    return ker;
}

struct LatticeSplit {
    F2Space a_plus, a_minus, a_pm;
};

/// Matrix of w on the coroot lattice in simple-coroot coordinates (column k = image of basis k).
inline std::vector<std::vector<long long>> coroot_matrix(const SignedPerm& w) {
    const int n = w.rank();
    std::vector<std::vector<long long>> t(n, std::vector<long long>(n));
    for (int k = 0; k < n; ++k) {
        const auto img = coroot_coords(act(w, coroot_basis_vector(n, k)));
        for (int r = 0; r < n; ++r) t[r][k] = img[r];
    }
    return t;
}

inline F2Space eigen_image(const SignedPerm& tau, int sign) {
    const int n = tau.rank();
    auto t = coroot_matrix(tau);
    for (int i = 0; i < n; ++i) t[i][i] -= sign;
    std::vector<std::uint64_t> vs;
    for (const auto& v : integer_kernel(t, n)) vs.push_back(reduce_mod2(v).bits);
    return span(n, vs);
}

inline LatticeSplit sublattices(const Involution& tau) {
    LatticeSplit s;
    s.a_plus = eigen_image(tau, +1);
    s.a_minus = eigen_image(tau, -1);
    s.a_pm = intersect(s.a_plus, s.a_minus);
    return s;
}

/// Canonical representative of m + A^pm(tau) inside A^-(tau)/A^pm(tau).
inline MElt quotient_class(const MElt& m, const LatticeSplit& s) {
    if (!s.a_minus.contains(m.bits)) throw std::invalid_argument("element outside A^-");
    return {m.n, s.a_pm.reduce(m.bits)};
}

inline MElt quotient_class(const MElt& m, const Involution& tau) { return quotient_class(m, sublattices(tau)); }

inline std::uint64_t component_group_order(const Involution& t) {
    const auto s = sublattices(t);
    return std::uint64_t{1} << (s.a_minus.dim() - s.a_pm.dim());
}

// ---------------------------------------------------------------- the cover group

/// sign * m~_{alpha_1}^{b_1} ... m~_{alpha_n}^{b_n}, generators ordered as the simple roots.
struct MCoverElt {
    MElt m;
    int sign = 1;
    bool operator==(const MCoverElt&) const = default;
};

inline bool generator_long(int n, int k) { return k + 1 < n; }

inline int generator_commutator(int n, int k, int j) {
    return (generator_long(n, k) && generator_long(n, j) && (k == j + 1 || j == k + 1)) ? -1 : 1;
}

inline MCoverElt mcover_mul(const MCoverElt& x, const MCoverElt& y) {
    if (x.m.n != y.m.n) throw std::invalid_argument("rank mismatch");
    const int n = x.m.n;
    int s = x.sign * y.sign;
    for (int j = 0; j < n; ++j) {
        if (!((y.m.bits >> j) & 1)) continue;
        for (int k = j + 1; k < n; ++k)
            if ((x.m.bits >> k) & 1) s *= generator_commutator(n, k, j);
        if (((x.m.bits >> j) & 1) && generator_long(n, j)) s = -s;
    }
    return {{n, x.m.bits ^ y.m.bits}, s};
}

inline MCoverElt mcover_one(int n) { return {{n, 0}, 1}; }

inline MCoverElt mcover_inverse(const MCoverElt& x) {
    // x has order dividing 4, so x^{-1} = x^3.
    return mcover_mul(mcover_mul(x, x), x);
}

/// Lift of m_alpha fixed as the positive canonical word.
inline MCoverElt mtilde(const RootVec& a) { return {m_of_root(a), 1}; }

inline MCoverElt mtilde_simple(int n, int k) { return {{n, std::uint64_t{1} << k}, 1}; }

// ---------------------------------------------------------------- standard sequences and z

inline int q_hat(int q) { return q <= 1 ? 0 : q / 2; }  // ceil((q-1)/2)

struct StdSeq {
    int j = 0, k = 0;  // j long roots alpha, k short roots beta
};

inline std::vector<StdSeq> standard_sequences(int q) {
    std::vector<StdSeq> v;
    const int qh = q_hat(q);
    for (int j = 0; j <= qh; ++j)
        for (int k = 0; k <= j; ++k) v.push_back({j, k});
    return v;
}

inline bool minus_one_in_identity(const StdSeq& s) { return s.j >= 1; }

inline bool minus_one_in_identity(const std::vector<RootVec>& seq) {
    return std::any_of(seq.begin(), seq.end(), [](const RootVec& a) { return is_long(a); });
}

struct ZElement {
    MCoverElt z;
    int square_sign;
    int order;
};

inline int mcover_order(const MCoverElt& x) {
    MCoverElt p = x;
    const auto one = mcover_one(x.m.n);
    for (int k = 1; k <= 8; ++k) {
        if (p == one) return k;
        p = mcover_mul(p, x);
    }
    throw std::logic_error("cover element of unexpected order");
}

/// z for the evenly split reference Cartan: q_hat disjoint long factors e_{2i-1}-e_{2i},
/// the remaining n/2 - q_hat factors short.
inline ZElement z_element(int n, int q) {
    if (n % 2) throw std::invalid_argument("z is defined for even rank only");
    const int qh = q_hat(q);
    if (qh > n / 2) throw std::invalid_argument("q out of range");
    MCoverElt z = mcover_one(n);
    for (int i = 0; i < qh; ++i) z = mcover_mul(z, mtilde_simple(n, 2 * i));
    for (int i = qh; i < n / 2; ++i) z = mcover_mul(z, mtilde_simple(n, n - 1));
    const auto zz = mcover_mul(z, z);
    return {z, zz.sign, mcover_order(z)};
}

/// Root character of delta evaluated at z.
inline int rho_at_z(const RootVec& delta) { return is_long(delta) ? 1 : -1; }

// ---------------------------------------------------------------- genuine extensions

inline int count_genuine_exts(const Involution& t) {
    const auto s = stats(t);
    return (1 << (1 - s.i_b)) * (1 << (s.r_b * (1 - s.r_p)));
}

/// The seven diagram shapes (up to conjugacy) with their extension counts, read independently.
inline int genuine_exts_by_case(const Involution& t) {
    const auto s = stats(t);
    const int n = s.n, ns = s.n_s, nr = s.n_r, nc = s.n_c;
    if (nc == 0 && ns == 0) return n % 2 ? 2 : 4;         // all minus
    if (nc == 0 && nr == 0) return 1;                      // all plus
    if (nc == 0) return nr % 2 ? 1 : 2;                    // plus and minus
    if (nr == 0 && ns > 0) return 1;                       // pairs and plus
    if (ns == 0 && nr > 0) return nr % 2 ? 2 : 4;          // pairs and minus
    if (ns > 0 && nr > 0) return nr % 2 ? 1 : 2;           // all three kinds
    return 2;                                              // pairs only
}

}  // namespace spindual
