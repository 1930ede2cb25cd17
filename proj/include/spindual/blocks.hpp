#pragma once
// Blocks of parameters, their structure tables, intertwining checks and
// multiplicity matrices.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "params.hpp"

namespace spindual {

using IntMatrix = std::vector<std::vector<long long>>;

struct CayleyCell {
    bool defined = false;  // false prints as "*"
    bool up = false;
    std::vector<int> targets;
};

struct Block {
    Setting setting;
    int kappa = 0;
    int chi = 1;
    std::vector<GenuineParam> params;
    std::vector<int> lengths;
    std::vector<RootVec> cross_roots;          // integral simple roots
    std::vector<std::vector<int>> cross;       // [root][row]
    std::vector<RootVec> ext_roots;            // long nonintegral abstract simple roots
    std::vector<std::vector<GenuineParam>> ext;  // [root][row], lands at another family member
    std::vector<RootVec> cayley_roots;         // abstract simple roots
    std::vector<std::vector<CayleyCell>> cayley;  // [root][row]

    int size() const { return static_cast<int>(params.size()); }
    int index_of(const GenuineParam& g) const {
        auto it = std::find(params.begin(), params.end(), g);
        return it == params.end() ? -1 : static_cast<int>(it - params.begin());
    }
};

inline CayleyCell cayley_cell(const GenuineParam& g, const RootVec& a, const Setting& s,
                              const std::vector<GenuineParam>& within) {
    CayleyCell c;
    std::vector<GenuineParam> img;
    const auto type = root_type(g.theta, a);
    if (type == RootType::imaginary && eval_grading(g.theta, g.eps, a) == 1) {
        img = cayley_up(g, a, s);
        c.up = true;
    } else if (type == RootType::real) {
        img = cayley_down(g, a, s);
    }
    c.defined = !img.empty();
    for (const auto& h : img) {
        auto it = std::find(within.begin(), within.end(), h);
        if (it == within.end()) throw std::logic_error("block not closed under Cayley transforms");
        c.targets.push_back(static_cast<int>(it - within.begin()));
    }
    return c;
}

inline Block build_block(const RealForm& form, const InfChar& lambda, int chi) {
    const int n = lambda.rank();
    if (n % 2) throw std::invalid_argument("blocks require even rank");
    Block b;
    b.setting = {form, family(lambda)};
    b.kappa = b.setting.fam.index_of(lambda);
    b.chi = chi;
    b.params = enumerate_params(b.setting, b.kappa, chi);
    if (b.params.empty()) throw std::invalid_argument("empty parameter set");
    const auto& l = b.setting.lambda(b.kappa);
    for (const auto& g : b.params) b.lengths.push_back(length(g));

    b.cross_roots = integral_simple_roots(l);
    for (const auto& a : b.cross_roots) {
        std::vector<int> col;
        for (const auto& g : b.params) {
            const int k = b.index_of(cross_param(a, g, b.setting));
            if (k < 0) throw std::logic_error("block not closed under cross actions");
            col.push_back(k);
        }
        b.cross.push_back(col);
    }
    for (const auto& a : simple_roots(n)) {
        if (is_long(a) && !l.integral_on(a)) {
            b.ext_roots.push_back(a);
            std::vector<GenuineParam> col;
            for (const auto& g : b.params) col.push_back(ext_cross_param(a, g, b.setting));
            b.ext.push_back(col);
        }
        b.cayley_roots.push_back(a);
        std::vector<CayleyCell> col;
        for (const auto& g : b.params) col.push_back(cayley_cell(g, a, b.setting, b.params));
        b.cayley.push_back(col);
    }
    return b;
}

inline Setting block_dual_setting(const Block& b) {
    std::optional<RealForm> form;
    for (const auto& g : b.params) {
        const auto f = dual_group(bigrading_of(g, b.setting));
        if (form && *form != f) throw std::logic_error("dual group varies over the block");
        form = f;
    }
    return {*form, b.setting.fam};
}

inline Block build_dual_block(const Block& b) {
    const auto ds = block_dual_setting(b);
    return build_block(ds.form, b.setting.lambda(b.kappa), -b.chi);
}

struct Report {
    long checks = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    void expect(bool cond, const std::string& what) {
        ++checks;
        if (!cond) violations.push_back(what);
    }
};

inline bool same_set(std::vector<GenuineParam> a, std::vector<GenuineParam> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

inline std::vector<GenuineParam> psi_all(const std::vector<GenuineParam>& v, const Setting& s) {
    std::vector<GenuineParam> out;
    for (const auto& g : v) out.push_back(psi(g, s));
    return out;
}

/// psi against every integral cross action, extended cross action and Cayley transform.
inline Report verify_intertwining(const Block& b, const Block& d) {
    Report r;
    const int n = b.setting.rank();
    const int top = n * (n + 1) / 2;
    const auto& s = b.setting;
    const auto& ds = d.setting;
    for (const auto& g : b.params) {
        const auto h = psi(g, s);
        const std::string tag = describe(g);
        r.expect(d.index_of(h) >= 0, "psi image outside dual block: " + tag);
        r.expect(length(h) == top - length(g), "length not reversed: " + tag);
        r.expect(psi(h, ds) == g, "psi not involutive: " + tag);
        for (const auto& a : positive_roots(n)) {
            if (s.lambda(g.kappa).integral_on(a)) {
                r.expect(psi(cross_param(a, g, s), s) == cross_param(a, h, ds), "cross: " + tag);
            } else if (is_long(a)) {
                r.expect(psi(ext_cross_param(a, g, s), s) == ext_cross_param(a, h, ds), "extended cross: " + tag);
            }
            const auto type = root_type(g.theta, a);
            if (type == RootType::imaginary && eval_grading(g.theta, g.eps, a) == 1) {
                r.expect(same_set(psi_all(cayley_up(g, a, s), s), cayley_down(h, a, ds)), "Cayley up: " + tag);
            } else if (type == RootType::real) {
                const auto down = cayley_down(g, a, s);
                const bool h_nci = eval_grading(h.theta, h.eps, a) == 1;
                r.expect(down.empty() != h_nci, "parity vs noncompactness: " + tag);
                if (h_nci) r.expect(same_set(psi_all(down, s), cayley_up(h, a, ds)), "Cayley down: " + tag);
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------- matrices

inline IntMatrix identity_matrix(int n) {
    IntMatrix m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    const int n = static_cast<int>(a.size());
    IntMatrix c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
            if (a[i][k])
                for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// Exact inverse of an upper unitriangular integer matrix.
inline IntMatrix unitriangular_inverse(const IntMatrix& a) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i) {
        if (a[i][i] != 1) throw std::invalid_argument("matrix not unitriangular");
        for (int j = 0; j < i; ++j)
            if (a[i][j] != 0) throw std::invalid_argument("matrix not upper triangular");
    }
    IntMatrix x = identity_matrix(n);
    for (int j = 0; j < n; ++j)
        for (int i = j - 1; i >= 0; --i) {
            long long v = 0;
            for (int k = i + 1; k <= j; ++k) v += a[i][k] * x[k][j];
            x[i][j] = -v;
        }
    return x;
}

/// Nonzero off-diagonal entries only where the column has strictly larger length.
inline bool length_unitriangular(const IntMatrix& a, const std::vector<int>& len) {
    const int n = static_cast<int>(a.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j && a[i][j] != 1) return false;
            if (i != j && a[i][j] != 0 && len[j] <= len[i]) return false;
        }
    return true;
}

inline bool nonnegative(const IntMatrix& a) {
    for (const auto& row : a)
        for (auto v : row)
            if (v < 0) return false;
    return true;
}

struct MultMatrices {
    IntMatrix M, m;  // indexed by block order
};

inline Report check_mult_invariants(const MultMatrices& mm, const std::vector<int>& len) {
    Report r;
    r.expect(length_unitriangular(mm.M, len), "M not unitriangular in length order");
    r.expect(length_unitriangular(mm.m, len), "m not unitriangular in length order");
    r.expect(nonnegative(mm.m), "m has a negative entry");
    r.expect(multiply(mm.m, mm.M) == identity_matrix(static_cast<int>(len.size())), "m*M is not the identity");
    return r;
}

/// M(g_i, g_j) = (-1)^{l(g_j) - l(g_i)} m(psi g_j, psi g_i).
inline Report verify_duality(const Block& b, const Block& d, const MultMatrices& mb, const MultMatrices& md) {
    Report r;
    const int n = b.size();
    if (d.size() != n) throw std::invalid_argument("index mismatch");
    std::vector<int> to(n);
    for (int i = 0; i < n; ++i) {
        to[i] = d.index_of(psi(b.params[i], b.setting));
        if (to[i] < 0) throw std::invalid_argument("index mismatch");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long long sign = ((b.lengths[j] - b.lengths[i]) % 2 == 0) ? 1 : -1;
            r.expect(mb.M[i][j] == sign * md.m[to[j]][to[i]],
                     "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return r;
}

}  // namespace spindual
