#pragma once
// Type B signed permutations, roots, involutions and their statistics.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace spindual {

struct SignedPerm {
    // perm[i] is the 0-based image of coordinate i; bits[j] is the sign bit
    // attached to target coordinate j, so w.e_i = (-1)^bits[perm[i]] e_perm[i].
    std::vector<std::uint8_t> bits;
    std::vector<int> perm;

    int rank() const { return static_cast<int>(perm.size()); }

    static SignedPerm identity(int n) {
        SignedPerm w;
        w.bits.assign(n, 0);
        w.perm.resize(n);
        std::iota(w.perm.begin(), w.perm.end(), 0);
        return w;
    }
    static SignedPerm minus_one(int n) {
        SignedPerm w = identity(n);
        std::fill(w.bits.begin(), w.bits.end(), 1);
        return w;
    }

    auto operator<=>(const SignedPerm&) const = default;
    bool operator==(const SignedPerm&) const = default;
};

using Involution = SignedPerm;
using RootVec = std::vector<int>;

inline void require_rank(const SignedPerm& a, const SignedPerm& b) {
    if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
}

inline bool is_valid(const SignedPerm& w) {
    const int n = w.rank();
    if (n < 1 || static_cast<int>(w.bits.size()) != n) return false;
    std::vector<char> seen(n, 0);
    for (int x : w.perm) {
        if (x < 0 || x >= n || seen[x]) return false;
        seen[x] = 1;
    }
    return std::all_of(w.bits.begin(), w.bits.end(), [](auto b) { return b <= 1; });
}

/// Group law: act(compose(a,b), v) == act(a, act(b, v)).
inline SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
    require_rank(a, b);
    const int n = a.rank();
    SignedPerm c;
    c.perm.resize(n);
    c.bits.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        const int mid = b.perm[i];
        const int tgt = a.perm[mid];
        c.perm[i] = tgt;
        c.bits[tgt] = a.bits[tgt] ^ b.bits[mid];
    }
    return c;
}

inline SignedPerm inverse(const SignedPerm& w) {
    const int n = w.rank();
    SignedPerm v;
    v.perm.resize(n);
    v.bits.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        v.perm[w.perm[i]] = i;
        v.bits[i] = w.bits[w.perm[i]];
    }
    return v;
}

inline SignedPerm conjugate(const SignedPerm& w, const SignedPerm& x) {
    return compose(compose(w, x), inverse(w));
}

/// Works for any arithmetic coordinate type (roots, doubled characters, rationals).
template <class T>
std::vector<T> act(const SignedPerm& w, const std::vector<T>& v) {
    if (static_cast<int>(v.size()) != w.rank()) throw std::invalid_argument("length mismatch");
    std::vector<T> out(v.size());
    for (int i = 0; i < w.rank(); ++i) {
        const int j = w.perm[i];
        out[j] = w.bits[j] ? -v[i] : v[i];
    }
    return out;
}

inline bool is_involution(const SignedPerm& w) {
    return compose(w, w) == SignedPerm::identity(w.rank());
}

inline Involution dualize_involution(const Involution& t) {
    Involution d = t;
    for (auto& b : d.bits) b ^= 1;
    return d;
}

// ---------------------------------------------------------------- roots

inline int nonzeros(const RootVec& a) {
    return static_cast<int>(std::count_if(a.begin(), a.end(), [](int x) { return x != 0; }));
}

inline bool is_root(const RootVec& a) {
    int nz = 0;
    for (int x : a) {
        if (x < -1 || x > 1) return false;
        nz += x != 0;
    }
    return nz == 1 || nz == 2;
}

inline bool is_short(const RootVec& a) { return nonzeros(a) == 1; }
inline bool is_long(const RootVec& a) { return nonzeros(a) == 2; }

inline bool is_positive(const RootVec& a) {
    for (int x : a)
        if (x != 0) return x > 0;
    return false;
}

inline RootVec negate(RootVec a) {
    for (auto& x : a) x = -x;
    return a;
}

inline RootVec abs_root(const RootVec& a) { return is_positive(a) ? a : negate(a); }

inline RootVec coroot(const RootVec& a) {
    if (!is_root(a)) throw std::invalid_argument("invalid root");
    RootVec c = a;
    if (is_short(a))
        for (auto& x : c) x *= 2;
    return c;
}

inline int dot(const std::vector<int>& a, const std::vector<int>& b) {
    int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline RootVec add(const RootVec& a, const RootVec& b) {
    RootVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}

inline RootVec unit(int n, int i, int s = 1) {
    RootVec r(n, 0);
    r[i] = s;
    return r;
}

inline RootVec long_root(int n, int i, int si, int j, int sj) {
    RootVec r(n, 0);
    r[i] = si;
    r[j] = sj;
    return r;
}

inline std::vector<RootVec> positive_roots(int n) {
    std::vector<RootVec> out;
    for (int i = 0; i < n; ++i) out.push_back(unit(n, i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            out.push_back(long_root(n, i, 1, j, -1));
            out.push_back(long_root(n, i, 1, j, 1));
        }
    return out;
}

inline std::vector<RootVec> all_roots(int n) {
    auto out = positive_roots(n);
    const std::size_t k = out.size();
    for (std::size_t i = 0; i < k; ++i) out.push_back(negate(out[i]));
    return out;
}

/// alpha_1..alpha_{n-1} = e_i - e_{i+1}, then beta = e_n.
inline std::vector<RootVec> simple_roots(int n) {
    std::vector<RootVec> out;
    for (int i = 0; i + 1 < n; ++i) out.push_back(long_root(n, i, 1, i + 1, -1));
    out.push_back(unit(n, n - 1));
    return out;
}

/// s_alpha(v) = v - (v, alpha^vee) alpha
inline std::vector<int> reflect(const RootVec& alpha, const std::vector<int>& v) {
    const auto c = coroot(alpha);
    const int k = dot(v, c);
    std::vector<int> out = v;
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= k * alpha[i];
    return out;
}

inline SignedPerm reflection(const RootVec& alpha) {
    const int n = static_cast<int>(alpha.size());
    SignedPerm w = SignedPerm::identity(n);
    for (int i = 0; i < n; ++i) {
        const auto img = reflect(alpha, unit(n, i));
        for (int j = 0; j < n; ++j)
            if (img[j] != 0) {
                w.perm[i] = j;
                w.bits[j] = img[j] < 0;
            }
    }
    return w;
}

enum class RootType { imaginary, real, complex };

inline const char* to_string(RootType t) {
    switch (t) {
        case RootType::imaginary: return "imaginary";
        case RootType::real: return "real";
        default: return "complex";
    }
}

inline RootType root_type(const Involution& t, const RootVec& a) {
    if (!is_root(a) || static_cast<int>(a.size()) != t.rank()) throw std::invalid_argument("invalid root");
    const auto img = act(t, a);
    if (img == a) return RootType::imaginary;
    if (img == negate(a)) return RootType::real;
    return RootType::complex;
}

// ---------------------------------------------------------------- diagrams

inline std::string render_diagram(const Involution& t) {
    std::string out;
    for (int i = 0; i < t.rank(); ++i) {
        if (i) out += ' ';
        const int j = t.perm[i];
        if (j == i) {
            out += t.bits[i] ? "-" : "+";
        } else if (t.bits[j]) {
            out += "(" + std::to_string(j + 1) + ")";
        } else {
            out += std::to_string(j + 1);
        }
    }
    return out;
}

inline Involution parse_diagram(const std::string& text) {
    std::string norm;
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 minus sign
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            norm += " - ";
            i += 2;
        } else if (text[i] == '(') {
            norm += " (";
        } else if (text[i] == ')') {
            norm += ") ";
        } else if (text[i] == '+' || text[i] == '-') {
            norm += ' ';
            norm += text[i];
            norm += ' ';
        } else {
            norm += text[i];
        }
    }
    std::istringstream in(norm);
    std::vector<std::string> toks;
    for (std::string tok; in >> tok;) toks.push_back(tok);
    const int n = static_cast<int>(toks.size());
    if (n == 0) throw std::invalid_argument("malformed diagram: empty");
    Involution t = SignedPerm::identity(n);
    for (int i = 0; i < n; ++i) {
        std::string tok = toks[i];
        if (tok == "+") continue;
        if (tok == "-") {
            t.bits[i] = 1;
            continue;
        }
        bool neg = false;
        if (tok.front() == '(') {
            if (tok.back() != ')' || tok.size() < 3) throw std::invalid_argument("malformed diagram token: " + tok);
            tok = tok.substr(1, tok.size() - 2);
            neg = true;
        }
        if (!std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; }))
            throw std::invalid_argument("malformed diagram token: " + toks[i]);
        const int j = std::stoi(tok) - 1;
        if (j < 0 || j >= n || j == i) throw std::invalid_argument("malformed diagram index: " + toks[i]);
        t.perm[i] = j;
        t.bits[j] = neg;
    }
    if (!is_valid(t) || !is_involution(t)) throw std::invalid_argument("diagram is not an involution: " + text);
    return t;
}

// ---------------------------------------------------------------- enumeration and counting

inline constexpr int kDefaultRankBound = 8;

inline std::vector<Involution> list_involutions(int n, int bound = kDefaultRankBound) {
    if (n < 1) throw std::invalid_argument("rank must be positive");
    if (n > bound) throw std::out_of_range("rank exceeds enumeration bound");
    std::vector<Involution> out;
    Involution cur = SignedPerm::identity(n);
    std::vector<char> used(n, 0);
    auto rec = [&](auto&& self, int i) -> void {
        while (i < n && used[i]) ++i;
        if (i == n) {
            out.push_back(cur);
            return;
        }
        used[i] = 1;
        for (int b = 0; b < 2; ++b) {
            cur.perm[i] = i;
            cur.bits[i] = b;
            self(self, i + 1);
        }
        for (int j = i + 1; j < n; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            for (int b = 0; b < 2; ++b) {
                cur.perm[i] = j;
                cur.perm[j] = i;
                cur.bits[i] = cur.bits[j] = b;
                self(self, i + 1);
            }
            cur.perm[j] = j;
            cur.bits[j] = 0;
            used[j] = 0;
        }
        cur.perm[i] = i;
        cur.bits[i] = 0;
        used[i] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

inline std::uint64_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline std::uint64_t weyl_order(int n) { return (std::uint64_t{1} << n) * factorial(n); }

inline std::uint64_t num_conjugacy_classes(int n) {
    std::uint64_t s = 0;
    for (int k = 0; 2 * k <= n; ++k) s += n - 2 * k + 1;
    return s;
}

inline std::uint64_t class_size(int n, int n_c, int n_s) {
    if (n_c < 0 || n_s < 0 || n_c % 2 || n_c + n_s > n) throw std::invalid_argument("invalid class invariants");
    return factorial(n) / (factorial(n - n_c) * factorial(n_c / 2)) * binomial(n - n_c, n_s);
}

struct InfChar {
    std::vector<int> twice;  // 2*lambda_i

    InfChar() = default;
    explicit InfChar(std::vector<int> t) : twice(std::move(t)) {
        if (twice.empty()) throw std::invalid_argument("empty infinitesimal character");
        for (std::size_t i = 0; i < twice.size(); ++i) {
            if (twice[i] <= 0) throw std::invalid_argument("infinitesimal character not positive");
            if (i && twice[i] >= twice[i - 1]) throw std::invalid_argument("infinitesimal character not regular dominant");
        }
    }
    int rank() const { return static_cast<int>(twice.size()); }
    bool integral_at(int i) const { return twice[i] % 2 == 0; }
    /// (lambda, alpha^vee) is an integer
    bool integral_on(const RootVec& alpha) const { return dot(twice, coroot(alpha)) % 2 == 0; }
    /// (lambda, v) is an integer, v arbitrary integer vector
    bool pairs_integrally(const std::vector<int>& v) const { return dot(twice, v) % 2 == 0; }
    bool operator==(const InfChar&) const = default;
    auto operator<=>(const InfChar&) const = default;
};

inline std::string to_string(const InfChar& l) {
    std::string s;
    for (int i = 0; i < l.rank(); ++i) {
        if (i) s += ',';
        s += l.twice[i] % 2 ? std::to_string(l.twice[i]) + "/2" : std::to_string(l.twice[i] / 2);
    }
    return s;
}

/// One half-integer written as "3/2", "1.5" or "2".
inline int parse_twice(std::string s) {
    auto whole = [](const std::string& t) {
        if (t.empty() || t.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument("bad number: " + t);
        return std::stoi(t);
    };
    s.erase(0, s.find_first_not_of(' '));
    s.erase(s.find_last_not_of(' ') + 1);
    if (auto k = s.find('/'); k != std::string::npos) {
        if (s.substr(k + 1) != "2") throw std::invalid_argument("not a half-integer: " + s);
        return whole(s.substr(0, k));
    }
    if (auto k = s.find('.'); k != std::string::npos) {
        std::string frac = s.substr(k + 1);
        while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
        if (frac != "5" && frac != "0") throw std::invalid_argument("not a half-integer: " + s);
        return 2 * whole(s.substr(0, k)) + (frac == "5" ? 1 : 0);
    }
    return 2 * whole(s);
}

inline InfChar parse_inf_char(const std::string& text) {
    std::vector<int> t;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(',', pos);
        if (end == std::string::npos) end = text.size();
        t.push_back(parse_twice(text.substr(pos, end - pos)));
        pos = end + 1;
    }
    return InfChar(t);
}

struct InvStats {
    int n = 0, n_s = 0, n_r = 0, n_c = 0;
    int i_b = 0, r_b = 0, i_p = 0, r_p = 0;
    int flips = 0;  // f_theta
    int length = 0;
    std::optional<int> n_int, n_half, sym;
};

inline std::vector<int> plus_positions(const Involution& t) {
    std::vector<int> v;
    for (int i = 0; i < t.rank(); ++i)
        if (t.perm[i] == i && !t.bits[i]) v.push_back(i);
    return v;
}

inline std::vector<int> minus_positions(const Involution& t) {
    std::vector<int> v;
    for (int i = 0; i < t.rank(); ++i)
        if (t.perm[i] == i && t.bits[i]) v.push_back(i);
    return v;
}

/// Pairs (i, j), i < j, interchanged by t.
inline std::vector<std::pair<int, int>> swapped_pairs(const Involution& t) {
    std::vector<std::pair<int, int>> v;
    for (int i = 0; i < t.rank(); ++i)
        if (t.perm[i] > i) v.emplace_back(i, t.perm[i]);
    return v;
}

inline int length(const Involution& t) {
    const int n = t.rank();
    int neg = 0;
    for (const auto& a : positive_roots(n))
        if (!is_positive(act(t, a))) ++neg;
    int minus_dim = 0;
    for (int i = 0; i < n; ++i) {
        const int j = t.perm[i];
        if (j == i) minus_dim += t.bits[i];
        else if (j > i) minus_dim += 1;
    }
    return (neg + minus_dim) / 2;
}

inline std::pair<int, int> conjugacy_invariants(const Involution& t) {
    return {2 * static_cast<int>(swapped_pairs(t).size()), static_cast<int>(plus_positions(t).size())};
}

inline InvStats stats(const Involution& t, const std::optional<InfChar>& lambda = std::nullopt) {
    InvStats s;
    s.n = t.rank();
    s.n_s = static_cast<int>(plus_positions(t).size());
    s.n_r = static_cast<int>(minus_positions(t).size());
    s.n_c = s.n - s.n_s - s.n_r;
    s.i_b = s.n_s > 0;
    s.r_b = s.n_r > 0;
    s.i_p = s.n_s % 2;
    s.r_p = s.n_r % 2;
    for (auto [i, j] : swapped_pairs(t)) s.flips += t.bits[j];
    s.length = length(t);
    if (lambda) {
        if (lambda->rank() != s.n) throw std::invalid_argument("rank mismatch");
        int ni = 0;
        for (int i : plus_positions(t)) ni += lambda->integral_at(i);
        s.n_int = ni;
        s.n_half = s.n_s - ni;
        s.sym = (s.n_s > 0 && ni == s.n_s - ni) ? 1 : 0;
    }
    return s;
}

inline bool even_parity(const Involution& t) {
    const auto s = stats(t);
    return s.n_s % 2 == 0 && s.n_r % 2 == 0;
}

struct CentralizerOrders {
    std::uint64_t w_i, w_r, w_c;
};

inline CentralizerOrders centralizer_factor_orders(const Involution& t) {
    const auto s = stats(t);
    const int k = s.n_c / 2;
    return {(std::uint64_t{1} << s.n_s) * factorial(s.n_s) * (std::uint64_t{1} << k),
            (std::uint64_t{1} << s.n_r) * factorial(s.n_r) * (std::uint64_t{1} << k), factorial(k)};
}

}  // namespace spindual
