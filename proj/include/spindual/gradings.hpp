#pragma once
// Imaginary and real gradings, supportability, real forms, central characters
// and the dual bigrading.

#include <bit>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "weylb.hpp"

namespace spindual {

/// Bit i set: the short imaginary root e_i is noncompact.
struct ImGrading {
    std::uint64_t noncompact = 0;
    bool operator==(const ImGrading&) const = default;
    auto operator<=>(const ImGrading&) const = default;
};

/// Bit i set: the short real root e_i satisfies the parity condition.
struct ReGrading {
    std::uint64_t parity = 0;
    bool operator==(const ReGrading&) const = default;
    auto operator<=>(const ReGrading&) const = default;
};

struct RealForm {
    int p = 0, q = 0;
    bool operator==(const RealForm&) const = default;
    auto operator<=>(const RealForm&) const = default;
};

inline std::string to_string(const RealForm& f) { return "(" + std::to_string(f.p) + "," + std::to_string(f.q) + ")"; }

inline bool bit(std::uint64_t m, int i) { return (m >> i) & 1; }

inline std::uint64_t mask_of(const std::vector<int>& pos) {
    std::uint64_t m = 0;
    for (int i : pos) m |= std::uint64_t{1} << i;
    return m;
}

inline int short_index(const RootVec& a) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i]) return static_cast<int>(i);
    return -1;
}

inline std::pair<int, int> long_indices(const RootVec& a) {
    int i = -1, j = -1;
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a[k]) (i < 0 ? i : j) = static_cast<int>(k);
    return {i, j};
}

inline bool valid_grading(const Involution& t, const ImGrading& e) {
    return (e.noncompact & ~mask_of(plus_positions(t))) == 0;
}

inline int eval_grading(const Involution& t, const ImGrading& e, const RootVec& a) {
    if (root_type(t, a) != RootType::imaginary) throw std::invalid_argument("root is not imaginary");
    if (is_short(a)) return bit(e.noncompact, short_index(a));
    auto [i, j] = long_indices(a);
    if (t.perm[i] == i) return bit(e.noncompact, i) ^ bit(e.noncompact, j);
    return 1;  // sum of two interchanged short complex roots
}

inline int eval_grading(const Involution& t, const ReGrading& h, const InfChar& lambda, const RootVec& a) {
    if (root_type(t, a) != RootType::real) throw std::invalid_argument("root is not real");
    if (is_short(a)) return bit(h.parity, short_index(a));
    return lambda.integral_on(a) ? 0 : 1;
}

inline int num_noncompact(const ImGrading& e) { return std::popcount(e.noncompact); }
inline int num_parity(const ReGrading& h) { return std::popcount(h.parity); }

// ---------------------------------------------------------------- text

/// Diagram with noncompact plus signs written as "n".
inline std::string render_grading(const Involution& t, const ImGrading& e) {
    std::string out;
    int k = 0;
    std::string d = render_diagram(t);
    for (std::size_t pos = 0; pos <= d.size(); ++pos) {
        if (pos == d.size() || d[pos] == ' ') continue;
        std::size_t end = d.find(' ', pos);
        if (end == std::string::npos) end = d.size();
        std::string tok = d.substr(pos, end - pos);
        if (tok == "+" && bit(e.noncompact, k)) tok = "n";
        if (!out.empty()) out += ' ';
        out += tok;
        ++k;
        pos = end;
    }
    return out;
}

/// One symbol per coordinate ("+" compact, "n" or U+2295 noncompact; other coordinates
/// any diagram token), or one symbol per plus position. Symbols are whitespace separated
/// tokens when the text contains spaces, single characters otherwise.
inline ImGrading parse_grading(const Involution& t, const std::string& text) {
    static const std::string oplus = "\xE2\x8A\x95";
    auto code = [](const std::string& tok) {
        if (tok == "+") return 0;
        if (tok == "n" || tok == "N" || tok == oplus) return 1;
        return 2;
    };
    std::vector<int> sym;  // 0 compact, 1 noncompact, 2 other
    if (text.find(' ') != std::string::npos) {
        std::istringstream in(text);
        std::string tok;
        while (in >> tok) sym.push_back(code(tok));
    } else {
        for (std::size_t i = 0; i < text.size(); ++i) {
            if (text.compare(i, oplus.size(), oplus) == 0) {
                sym.push_back(1);
                i += oplus.size() - 1;
            } else {
                sym.push_back(code(std::string(1, text[i])));
            }
        }
    }
    const auto plus = plus_positions(t);
    ImGrading e;
    if (static_cast<int>(sym.size()) == t.rank()) {
        for (int i = 0; i < t.rank(); ++i) {
            const bool is_plus = t.perm[i] == i && !t.bits[i];
            if (is_plus != (sym[i] != 2)) throw std::invalid_argument("grading does not fit the involution");
            if (sym[i] == 1) e.noncompact |= std::uint64_t{1} << i;
        }
    } else if (sym.size() == plus.size()) {
        for (std::size_t k = 0; k < plus.size(); ++k) {
            if (sym[k] == 2) throw std::invalid_argument("malformed grading");
            if (sym[k] == 1) e.noncompact |= std::uint64_t{1} << plus[k];
        }
    } else {
        throw std::invalid_argument("malformed grading");
    }
    return e;
}

// ---------------------------------------------------------------- operations

struct AbstractPair {
    Involution theta;
    ImGrading eps;
    bool operator==(const AbstractPair&) const = default;
};

/// (w x eps)(alpha) = eps(w^{-1} alpha) on the imaginary roots of w theta w^{-1}.
inline AbstractPair cross_grading(const SignedPerm& w, const Involution& t, const ImGrading& e) {
    AbstractPair out{conjugate(w, t), {}};
    const auto winv = inverse(w);
    for (int i : plus_positions(out.theta)) {
        const auto src = act(winv, unit(t.rank(), i));
        if (bit(e.noncompact, short_index(src))) out.eps.noncompact |= std::uint64_t{1} << i;
    }
    return out;
}

inline AbstractPair cayley_pair(const Involution& t, const ImGrading& e, const RootVec& a) {
    if (root_type(t, a) != RootType::imaginary || eval_grading(t, e, a) != 1)
        throw std::invalid_argument("root is not noncompact imaginary");
    AbstractPair out{compose(reflection(a), t), {}};
    const int n = t.rank();
    for (int i : plus_positions(out.theta)) {
        const int flip = is_root(add(a, unit(n, i))) ? 1 : 0;
        if (bit(e.noncompact, i) ^ flip) out.eps.noncompact |= std::uint64_t{1} << i;
    }
    return out;
}

inline RealForm real_form(const Involution& t, const ImGrading& e) {
    const auto s = stats(t);
    const int nn = num_noncompact(e), ncp = s.n_s - nn;
    const int base = s.n_r + s.n_c;
    return {2 * std::max(nn, ncp) + base + (nn <= ncp ? 1 : 0), 2 * std::min(nn, ncp) + base + (nn > ncp ? 1 : 0)};
}

inline bool is_supportable(const Involution& t, const ImGrading& e, const InfChar& lambda) {
    for (const auto& a : positive_roots(t.rank())) {
        if (!is_long(a)) continue;
        const auto type = root_type(t, a);
        if (type == RootType::imaginary) {
            if (lambda.integral_on(a) != (eval_grading(t, e, a) == 0)) return false;
        } else if (type == RootType::complex) {
            const auto ca = coroot(a);
            const auto tca = act(t, ca);
            const bool lhs = lambda.pairs_integrally(add(ca, tca));
            const bool rhs = dot(a, tca) == 0;
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Sign of the central character, read from a short imaginary root when one exists.
inline std::optional<int> try_central_char(const Involution& t, const ImGrading& e, const InfChar& lambda) {
    const auto plus = plus_positions(t);
    if (plus.empty()) return std::nullopt;
    const int nr = static_cast<int>(minus_positions(t).size());
    const int i = plus.front();
    const int ex = (lambda.integral_at(i) ? 1 : 0) + bit(e.noncompact, i) + nr;
    return ex % 2 ? -1 : 1;
}

inline int central_char(const Involution& t, const ImGrading& e, const InfChar& lambda) {
    auto c = try_central_char(t, e, lambda);
    if (!c) throw std::invalid_argument("central character undetermined: no short imaginary root");
    return *c;
}

/// Real grading matching the central character chi on the short real roots.
inline ReGrading derive_eta(const Involution& t, int chi, const InfChar& lambda) {
    const int ns = static_cast<int>(plus_positions(t).size());
    ReGrading h;
    for (int i : minus_positions(t)) {
        const int v = (1 + (lambda.integral_at(i) ? 1 : 0) + ns + (chi < 0 ? 1 : 0)) % 2;
        if (v) h.parity |= std::uint64_t{1} << i;
    }
    return h;
}

/// chi recovered from a short real root and its parity value.
inline std::optional<int> central_char_from_real(const Involution& t, const ReGrading& h, const InfChar& lambda) {
    const auto minus = minus_positions(t);
    if (minus.empty()) return std::nullopt;
    const int ns = static_cast<int>(plus_positions(t).size());
    const int i = minus.front();
    const int ex = 1 + (lambda.integral_at(i) ? 1 : 0) + bit(h.parity, i) + ns;
    return ex % 2 ? -1 : 1;
}

struct AbstractBigrading {
    Involution theta;
    ImGrading eps;
    ReGrading eta;
    InfChar lambda;
    bool operator==(const AbstractBigrading&) const = default;
};

inline AbstractBigrading make_bigrading(const Involution& t, const ImGrading& e, int chi, const InfChar& lambda) {
    return {t, e, derive_eta(t, chi, lambda), lambda};
}

inline AbstractBigrading dual_bigrading(const AbstractBigrading& b) {
    return {dualize_involution(b.theta), ImGrading{b.eta.parity}, ReGrading{b.eps.noncompact}, b.lambda};
}

inline RealForm dual_group(const AbstractBigrading& b) {
    if (b.theta.rank() % 2) throw std::invalid_argument("dual group requires even rank");
    const auto s = stats(b.theta);
    const int np = num_parity(b.eta), nnp = s.n_r - np;
    const int base = s.n_s + s.n_c;
    return {2 * std::max(np, nnp) + base + (np <= nnp ? 1 : 0), 2 * std::min(np, nnp) + base + (np > nnp ? 1 : 0)};
}

/// Grading axioms on every pair of roots whose sum is a root.
inline bool check_grading_axioms(const Involution& t, const ImGrading& e) {
    const int n = t.rank();
    const auto roots = all_roots(n);
    for (const auto& a : roots) {
        if (root_type(t, a) != RootType::imaginary) continue;
        if (eval_grading(t, e, a) != eval_grading(t, e, negate(a))) return false;
        for (const auto& b : roots) {
            if (root_type(t, b) != RootType::imaginary) continue;
            const auto c = add(a, b);
            if (!is_root(c)) continue;
            if (eval_grading(t, e, c) != (eval_grading(t, e, a) ^ eval_grading(t, e, b))) return false;
        }
    }
    return true;
}

inline bool check_grading_axioms(const Involution& t, const ReGrading& h, const InfChar& lambda) {
    const int n = t.rank();
    const auto roots = all_roots(n);
    for (const auto& a : roots) {
        if (root_type(t, a) != RootType::real) continue;
        for (const auto& b : roots) {
            if (root_type(t, b) != RootType::real) continue;
            const auto c = add(a, b);
            if (!is_root(c)) continue;
            if (eval_grading(t, h, lambda, c) != (eval_grading(t, h, lambda, a) ^ eval_grading(t, h, lambda, b)))
                return false;
        }
    }
    return true;
}

}  // namespace spindual
