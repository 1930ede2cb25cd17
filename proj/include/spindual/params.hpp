#pragma once
// Genuine parameters as combinatorial data: enumeration, cross actions, Cayley
// transforms, principal classes and the duality map.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "korbits.hpp"

namespace spindual {

// ---------------------------------------------------------------- families

/// Bit i set: coordinate i is strictly half-integral.
inline std::uint64_t fractional_pattern(const InfChar& l) {
    std::uint64_t m = 0;
    for (int i = 0; i < l.rank(); ++i)
        if (!l.integral_at(i)) m |= std::uint64_t{1} << i;
    return m;
}

/// Coordinatewise minimal regular dominant vector with the given pattern, built from the last coordinate up.
inline InfChar canonical_rep(int n, std::uint64_t pattern) {
    std::vector<int> t(n);
    int prev = 0;
    for (int i = n - 1; i >= 0; --i) {
        const bool half = bit(pattern, i);
        int v = prev + 1;
        if ((v % 2 != 0) != half) ++v;
        t[i] = v;
        prev = v;
    }
    return InfChar(t);
}

struct Family {
    std::vector<InfChar> members;  // descending lexicographic order of 2*lambda

    int index_of(const InfChar& l) const {
        const auto pat = fractional_pattern(l);
        for (std::size_t k = 0; k < members.size(); ++k)
            if (fractional_pattern(members[k]) == pat) return static_cast<int>(k);
        throw std::invalid_argument("infinitesimal character outside the family");
    }
    int rank() const { return members.front().rank(); }
    bool operator==(const Family&) const = default;
};

inline Family family(const InfChar& l) {
    const int n = l.rank();
    const int halves = std::popcount(fractional_pattern(l));
    Family f;
    for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << n); ++pat)
        if (std::popcount(pat) == halves) f.members.push_back(canonical_rep(n, pat));
    std::sort(f.members.begin(), f.members.end(), [](const InfChar& a, const InfChar& b) { return a.twice > b.twice; });
    return f;
}

// ---------------------------------------------------------------- parameters

struct GenuineParam {
    Involution theta;
    ImGrading eps;
    int chi = 1;
    int pc = 0;     // principal-class bit; always 0 off even parity
    int kappa = 0;  // family member

    auto key() const { return std::make_tuple(render_diagram(theta), eps.noncompact, -chi, pc, kappa); }
    bool operator==(const GenuineParam& o) const { return key() == o.key(); }
    bool operator<(const GenuineParam& o) const { return key() < o.key(); }
};

/// Ambient data shared by every parameter of one computation.
struct Setting {
    RealForm form;
    Family fam;

    const InfChar& lambda(int kappa) const { return fam.members.at(kappa); }
    int rank() const { return fam.rank(); }
};

inline std::string describe(const GenuineParam& g) {
    return "[" + render_grading(g.theta, g.eps) + "] chi=" + (g.chi > 0 ? "+" : "-") + " pc=" + std::to_string(g.pc) +
           " kappa=" + std::to_string(g.kappa);
}

inline ReGrading eta_of(const GenuineParam& g, const Setting& s) { return derive_eta(g.theta, g.chi, s.lambda(g.kappa)); }

inline AbstractBigrading bigrading_of(const GenuineParam& g, const Setting& s) {
    return {g.theta, g.eps, eta_of(g, s), s.lambda(g.kappa)};
}

/// The parameter's own data must be consistent with the ambient real form and family member.
inline bool is_valid_param(const GenuineParam& g, const Setting& s) {
    const auto& l = s.lambda(g.kappa);
    if (!valid_grading(g.theta, g.eps) || !is_supportable(g.theta, g.eps, l)) return false;
    if (real_form(g.theta, g.eps) != s.form) return false;
    if (auto c = try_central_char(g.theta, g.eps, l); c && *c != g.chi) return false;
    if (g.pc != 0 && !even_parity(g.theta)) return false;
    return g.pc == 0 || g.pc == 1;
}

/// Slot of the parameter inside its (theta, chi) slice: the orbit index when there are
/// no real roots, the extension index otherwise. The principal-class bit differs from it by
/// the flip count when chi = -1.
inline int fiber_slot(const GenuineParam& g) {
    if (!even_parity(g.theta)) return 0;
    return g.pc ^ ((stats(g.theta).flips % 2) & (g.chi < 0 ? 1 : 0));
}

inline int length(const GenuineParam& g) { return length(g.theta); }

inline void sort_params(std::vector<GenuineParam>& v) {
    std::sort(v.begin(), v.end(), [](const GenuineParam& a, const GenuineParam& b) {
        const int la = length(a), lb = length(b);
        if (la != lb) return la < lb;
        return a < b;
    });
}

inline std::vector<GenuineParam> enumerate_params(const Setting& s, int kappa, std::optional<int> chi = std::nullopt) {
    const int n = s.rank();
    if (s.form.p + s.form.q != 2 * n + 1 || s.form.p <= s.form.q || s.form.q < 0)
        throw std::invalid_argument("invalid real form for this rank");
    const auto& l = s.lambda(kappa);
    std::vector<GenuineParam> out;
    for (const auto& t : list_involutions(n, std::max(n, kDefaultRankBound))) {
        const bool even = even_parity(t);
        for (const auto& e : all_gradings(t)) {
            if (real_form(t, e) != s.form || !is_supportable(t, e, l)) continue;
            std::vector<int> chis;
            if (auto c = try_central_char(t, e, l)) chis = {*c};
            else chis = {1, -1};
            for (int c : chis) {
                if (chi && c != *chi) continue;
                for (int pc = 0; pc < (even ? 2 : 1); ++pc) out.push_back({t, e, c, pc, kappa});
            }
        }
    }
    sort_params(out);
    return out;
}

inline std::vector<GenuineParam> slice(const std::vector<GenuineParam>& all, const Involution& t, int chi) {
    std::vector<GenuineParam> v;
    for (const auto& g : all)
        if (g.theta == t && g.chi == chi) v.push_back(g);
    return v;
}

// ---------------------------------------------------------------- physical counts

/// Extensions with central character chi over one orbit: the full count when chi is
/// forced by the grading, half of it otherwise.
inline int extensions_per_chi(const Involution& t) {
    const auto st = stats(t);
    return st.i_b ? count_genuine_exts(t) : count_genuine_exts(t) / 2;
}

/// Orbits x extensions summed over the admissible gradings, independent of the label model.
inline std::uint64_t physical_slice_count(const Involution& t, const Setting& s, int kappa, int chi) {
    const auto& l = s.lambda(kappa);
    std::uint64_t total = 0;
    for (const auto& e : all_gradings(t)) {
        if (real_form(t, e) != s.form || !is_supportable(t, e, l)) continue;
        if (auto c = try_central_char(t, e, l); c && *c != chi) continue;
        const bool compact = s.form.q == 0;
        const std::uint64_t orbits = compact ? 2 : count_orbits_with_grading(t, e);  // formal copy
        total += orbits * extensions_per_chi(t);
    }
    return total;
}

inline std::uint64_t rep_fiber_formula(const Involution& t, const InfChar& l) {
    const auto st = stats(t, l);
    return std::uint64_t{1} << (2 + *st.sym - st.i_b - st.r_b * st.r_p);
}

inline std::uint64_t rep_fiber_chi_formula(const Involution& t) {
    const auto st = stats(t);
    return std::uint64_t{1} << (1 - st.r_b * st.r_p);
}

// ---------------------------------------------------------------- cross actions

inline bool is_integral_root(const RootVec& a, const InfChar& l) { return l.integral_on(a); }

/// Positive roots integral for l that are not sums of two positive integral roots.
inline std::vector<RootVec> integral_simple_roots(const InfChar& l) {
    const int n = l.rank();
    std::vector<RootVec> pos;
    for (const auto& a : positive_roots(n))
        if (l.integral_on(a)) pos.push_back(a);
    std::vector<RootVec> out;
    for (const auto& a : pos) {
        bool dec = false;
        for (const auto& b : pos)
            for (const auto& c : pos)
                if (add(b, c) == a) dec = true;
        if (!dec) out.push_back(a);
    }
    return out;
}

inline int cross_flip(const GenuineParam& g, const Setting& s, const RootVec& a) {
    if (!is_short(a)) return 0;
    const int i = short_index(a);
    switch (root_type(g.theta, a)) {
        case RootType::imaginary: return bit(g.eps.noncompact, i);
        case RootType::real: return bit(eta_of(g, s).parity, i);
        default: return s.lambda(g.kappa).integral_at(i) ? 0 : 1;
    }
}

inline GenuineParam simple_cross(const RootVec& a, const GenuineParam& g, const Setting& s);

/// Integral cross action. A non-simple root goes through s_a = s_b s_c s_b with
/// b simple and c = s_b(a) of smaller height.
inline GenuineParam cross_param(const RootVec& a, const GenuineParam& g, const Setting& s) {
    if (!is_root(a)) throw std::invalid_argument("invalid root");
    if (!s.lambda(g.kappa).integral_on(a)) throw std::invalid_argument("root is not integral");
    const RootVec pos = is_positive(a) ? a : negate(a);
    const auto simple = simple_roots(g.theta.rank());
    if (std::find(simple.begin(), simple.end(), pos) == simple.end()) {
        for (const auto& b : simple) {
            if (dot(pos, coroot(b)) <= 0) continue;
            const auto h = simple_cross(b, g, s);
            return simple_cross(b, cross_param(reflect(b, pos), h, s), s);
        }
        throw std::logic_error("no descending simple root");
    }
    const auto moved = cross_grading(reflection(a), g.theta, g.eps);
    GenuineParam h{moved.theta, moved.eps, g.chi, g.pc, g.kappa};
    if (even_parity(h.theta)) h.pc ^= cross_flip(g, s, a);
    else h.pc = 0;
    return h;
}

inline GenuineParam ext_cross_param(const RootVec& a, const GenuineParam& g, const Setting& s) {
    if (!is_root(a) || !is_long(a)) throw std::invalid_argument("extended cross action needs a long root");
    const auto& l = s.lambda(g.kappa);
    if (l.integral_on(a)) throw std::invalid_argument("root is integral; use the cross action");
    const auto moved = cross_grading(reflection(a), g.theta, g.eps);
    std::vector<int> twice = act(reflection(a), l.twice);
    for (auto& x : twice) x = std::abs(x);
    std::uint64_t pat = 0;
    for (int i = 0; i < l.rank(); ++i)
        if (twice[i] % 2) pat |= std::uint64_t{1} << i;
    const int kappa = s.fam.index_of(canonical_rep(l.rank(), pat));
    return {moved.theta, moved.eps, g.chi, g.pc, kappa};
}

/// Cross action by an abstract simple root: integral cross action or extended cross action.
inline GenuineParam simple_cross(const RootVec& a, const GenuineParam& g, const Setting& s) {
    return s.lambda(g.kappa).integral_on(a) ? cross_param(a, g, s) : ext_cross_param(a, g, s);
}

// ---------------------------------------------------------------- Cayley transforms

inline std::vector<GenuineParam> cayley_up(const GenuineParam& g, const RootVec& a, const Setting& s) {
    if (root_type(g.theta, a) != RootType::imaginary || eval_grading(g.theta, g.eps, a) != 1)
        throw std::invalid_argument("Cayley transform needs a noncompact imaginary root");
    const auto up = cayley_pair(g.theta, g.eps, a);
    GenuineParam h{up.theta, up.eps, g.chi, 0, g.kappa};
    if (!is_valid_param(h, s)) throw std::logic_error("Cayley transform left the parameter set: " + describe(g));
    if (!even_parity(h.theta)) return {h};
    if (is_long(a)) {
        h.pc = g.pc;
        return {h};
    }
    auto h1 = h;
    h1.pc = 1;
    return {h, h1};
}

inline std::vector<GenuineParam> cayley_down(const GenuineParam& g, const RootVec& a, const Setting& s) {
    if (root_type(g.theta, a) != RootType::real) throw std::invalid_argument("inverse Cayley transform needs a real root");
    const auto t = compose(reflection(a), g.theta);
    std::vector<GenuineParam> out;
    for (const auto& e : all_gradings(t)) {
        if (eval_grading(t, e, a) != 1) continue;
        if (cayley_pair(t, e, a) != AbstractPair{g.theta, g.eps}) continue;
        for (int pc = 0; pc < (even_parity(t) ? 2 : 1); ++pc) {
            GenuineParam h{t, e, g.chi, pc, g.kappa};
            if (!is_valid_param(h, s)) continue;
            const auto img = cayley_up(h, a, s);
            if (std::find(img.begin(), img.end(), g) != img.end()) out.push_back(h);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline int real_parity(const GenuineParam& g, const RootVec& a, const Setting& s) {
    return eval_grading(g.theta, eta_of(g, s), s.lambda(g.kappa), a);
}

// ---------------------------------------------------------------- principal classes and duality

struct PrincipalClassLabel {
    int chi = 1;
    int bit = 0;
    bool operator==(const PrincipalClassLabel&) const = default;
    auto operator<=>(const PrincipalClassLabel&) const = default;
};

inline PrincipalClassLabel principal_class(const GenuineParam& g) {
    if (!even_parity(g.theta)) throw std::invalid_argument("principal classes need even parity");
    return {g.chi, g.pc};
}

/// z-value bookkeeping: the label read on the evenly split Cartan equals the slot
/// twisted by chi raised to the flip count.
inline int transported_z_sign(const GenuineParam& g) {
    const int slot_sign = fiber_slot(g) ? -1 : 1;
    const int twist = (stats(g.theta).flips % 2 && g.chi < 0) ? -1 : 1;
    return slot_sign * twist;
}

inline Setting dual_setting(const GenuineParam& g, const Setting& s) {
    return {dual_group(bigrading_of(g, s)), s.fam};
}

inline GenuineParam psi(const GenuineParam& g, const Setting& s) {
    if (s.rank() % 2) throw std::invalid_argument("duality requires even rank");
    const auto eta = eta_of(g, s);
    return {dualize_involution(g.theta), ImGrading{eta.parity}, -g.chi, g.pc, g.kappa};
}

}  // namespace spindual
