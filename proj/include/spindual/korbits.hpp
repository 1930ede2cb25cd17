#pragma once
// Fibers of orbits over an involution, described through the m(w) calculus.

#include <map>
#include <queue>
#include <stdexcept>
#include <vector>

#include "gradings.hpp"
#include "mlattice.hpp"

namespace spindual {

/// Standard simple system of the imaginary roots: type B on the plus positions,
/// then one root for each interchanged pair.
inline std::vector<RootVec> imaginary_simple_roots(const Involution& t) {
    const int n = t.rank();
    const auto plus = plus_positions(t);
    std::vector<RootVec> out;
    for (std::size_t k = 0; k + 1 < plus.size(); ++k) out.push_back(long_root(n, plus[k], 1, plus[k + 1], -1));
    if (!plus.empty()) out.push_back(unit(n, plus.back()));
    for (auto [i, j] : swapped_pairs(t)) out.push_back(long_root(n, i, 1, j, t.bits[j] ? -1 : 1));
    return out;
}

/// All gradings of t (subsets of the plus positions), in increasing mask order.
inline std::vector<ImGrading> all_gradings(const Involution& t) {
    const auto plus = plus_positions(t);
    std::vector<ImGrading> out;
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << plus.size()); ++sub) {
        ImGrading e;
        for (std::size_t k = 0; k < plus.size(); ++k)
            if ((sub >> k) & 1) e.noncompact |= std::uint64_t{1} << plus[k];
        out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

struct FiberPoint {
    Involution theta;
    ImGrading eps;  // grading carried by this orbit
    MElt mclass;    // canonical coset in A^-(-theta)/A^pm(-theta)
    bool operator==(const FiberPoint&) const = default;
};

class FiberCalculus {
public:
    explicit FiberCalculus(const Involution& t) : theta_(t), split_(sublattices(dualize_involution(t))),
                                                  gens_(imaginary_simple_roots(t)) {}

    const Involution& theta() const { return theta_; }
    const LatticeSplit& split() const { return split_; }
    const std::vector<RootVec>& generators() const { return gens_; }

    FiberPoint base(const ImGrading& e) const { return {theta_, e, {theta_.rank(), 0}}; }

    MElt reduce(const MElt& m) const { return quotient_class(m, split_); }

    /// s_alpha acting on an orbit, alpha imaginary.
    FiberPoint step(const FiberPoint& x, const RootVec& a) const {
        if (root_type(theta_, a) != RootType::imaginary) throw std::invalid_argument("letter is not imaginary");
        FiberPoint y = x;
        if (eval_grading(theta_, x.eps, a)) y.mclass = reduce(x.mclass + m_of_root(a));
        y.eps = cross_grading(reflection(a), theta_, x.eps).eps;
        return y;
    }

    /// w = s_{a_1} ... s_{a_k}; the rightmost letter acts first.
    FiberPoint cross(const FiberPoint& x, const std::vector<RootVec>& word) const {
        FiberPoint y = x;
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = step(y, *it);
        return y;
    }

    bool is_simple_letter(const RootVec& a) const {
        for (const auto& g : gens_)
            if (g == a || g == negate(a)) return true;
        return false;
    }

private:
    Involution theta_;
    LatticeSplit split_;
    std::vector<RootVec> gens_;
};

inline MElt m_theta(const FiberPoint& base, const std::vector<RootVec>& word) {
    FiberCalculus fc(base.theta);
    for (const auto& a : word)
        if (!fc.is_simple_letter(a)) throw std::invalid_argument("letter is not imaginary simple");
    return fc.cross(base, word).mclass;
}

inline FiberPoint cross_fiber(const FiberPoint& x, const std::vector<RootVec>& word) {
    return FiberCalculus(x.theta).cross(x, word);
}

enum class NciType { I, II };

inline NciType nci_type(const FiberPoint& x, const RootVec& a) {
    if (root_type(x.theta, a) != RootType::imaginary || eval_grading(x.theta, x.eps, a) != 1)
        throw std::invalid_argument("root is not noncompact imaginary");
    const auto s = sublattices(dualize_involution(x.theta));
    return s.a_pm.contains(m_of_root(a).bits) ? NciType::II : NciType::I;
}

inline std::uint64_t fiber_order(const Involution& t, const ImGrading& e) {
    const auto s = stats(t);
    return (std::uint64_t{1} << (1 - s.r_b)) * binomial(s.n_s, num_noncompact(e));
}

struct FiberTable {
    Involution theta;
    std::vector<RootVec> generators;
    struct Row {
        MElt mclass;
        ImGrading eps;
        std::vector<int> images;  // one per generator
    };
    std::vector<Row> rows;
};

/// Breadth-first closure of the base orbit under the imaginary simple reflections;
/// rows sorted by coset representative.
inline FiberTable enumerate_fiber(const Involution& t, const ImGrading& e) {
    FiberCalculus fc(t);
    std::map<std::uint64_t, FiberPoint> seen;
    std::queue<FiberPoint> todo;
    const auto start = fc.base(e);
    seen.emplace(start.mclass.bits, start);
    todo.push(start);
    while (!todo.empty()) {
        const auto x = todo.front();
        todo.pop();
        for (const auto& a : fc.generators()) {
            const auto y = fc.step(x, a);
            auto [it, fresh] = seen.emplace(y.mclass.bits, y);
            if (fresh) todo.push(y);
            else if (it->second.eps != y.eps) throw std::logic_error("orbit label carries two gradings");
        }
    }
    FiberTable tab{t, fc.generators(), {}};
    std::map<std::uint64_t, int> index;
    for (const auto& [k, x] : seen) {
        index[k] = static_cast<int>(tab.rows.size());
        tab.rows.push_back({x.mclass, x.eps, {}});
    }
    for (auto& row : tab.rows) {
        const FiberPoint x{t, row.eps, row.mclass};
        for (const auto& a : fc.generators()) row.images.push_back(index.at(fc.step(x, a).mclass.bits));
    }
    return tab;
}

inline std::uint64_t count_orbits_with_grading(const Involution& t, const ImGrading& e) {
    const auto tab = enumerate_fiber(t, e);
    std::uint64_t c = 0;
    for (const auto& r : tab.rows) c += r.eps == e;
    return c;
}

inline std::uint64_t genuine_fiber_order(const Involution& t, const InfChar& lambda) {
    bool any = false;
    for (const auto& e : all_gradings(t)) any = any || is_supportable(t, e, lambda);
    if (!any) return 0;
    const auto s = stats(t, lambda);
    return (std::uint64_t{1} << (1 - s.r_b)) << *s.sym;
}

}  // namespace spindual
