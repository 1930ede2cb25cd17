#pragma once
// Embedded golden datasets and the comparisons run against them.

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "blocks.hpp"

namespace spindual {

namespace golden_text {

// Block rows: golden index, length, cross image, beta cell, alpha cell, then the
// parameter the row is identified with (grading diagram and principal-class bit).
// Dual rows carry no identification; they are matched through psi.
inline constexpr std::string_view spin32_block = R"(fixture spin32_block
form 3 2
lambda 3/2,1
chi +
cross_root 0 1 inferred
beta 1 -1
alpha 0 1
table B
row 0 len 0 cross 1 beta 2 alpha 4 ident + n pc 0
row 1 len 0 cross 0 beta 3 alpha 4 ident + n pc 1
row 2 len 1 cross 5 beta 0 alpha * ident 2 1 pc 0
row 3 len 1 cross 6 beta 1 alpha * ident 2 1 pc 1
row 4 len 1 cross 4 beta * alpha 1,0 ident n - pc 0
row 5 len 2 cross 2 beta 7 alpha * ident (2) (1) pc 0
row 6 len 2 cross 3 beta 8 alpha * ident (2) (1) pc 1
row 7 len 3 cross 7 beta 5 alpha * ident - - pc 0
row 8 len 3 cross 8 beta 6 alpha * ident - - pc 1
table B'
row 8 len 0 cross 8 beta 6 alpha *
row 7 len 0 cross 7 beta 5 alpha *
row 6 len 1 cross 3 beta 8 alpha *
row 5 len 1 cross 2 beta 7 alpha *
row 4 len 2 cross 4 beta * alpha 1,0
row 3 len 2 cross 6 beta 1 alpha *
row 2 len 2 cross 5 beta 0 alpha *
row 1 len 3 cross 0 beta 3 alpha 4
row 0 len 3 cross 1 beta 2 alpha 4
matrix M B order 0 1 2 3 4 5 6 7 8
1 0 -1 0 -1 1 1 0 -1
0 1 0 -1 -1 1 1 -1 0
0 0 1 0 0 -1 0 0 0
0 0 0 1 0 0 -1 0 0
0 0 0 0 1 -1 -1 0 0
0 0 0 0 0 1 0 -1 0
0 0 0 0 0 0 1 0 -1
0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 1
matrix m B' order 8 7 6 5 4 3 2 1 0
1 0 1 0 0 0 0 0 1
0 1 0 1 0 0 0 1 0
0 0 1 0 1 1 0 1 1
0 0 0 1 1 0 1 1 1
0 0 0 0 1 0 0 1 1
0 0 0 0 0 1 0 1 0
0 0 0 0 0 0 1 0 1
0 0 0 0 0 0 0 1 0
0 0 0 0 0 0 0 0 1
end
)";

// Fiber rows: index, coset word in m_a1 m_a2 m_a3 m_b, grading, images under a1 a2 a3 b.
inline constexpr std::string_view spin54_fiber = R"(fixture spin54_fiber
form 5 4
theta + + + +
generators a1 a2 a3 b
frow 0 word e grading ++nn images 0 1 0 2
frow 1 word a2 grading +n+n images 3 0 4 5
frow 2 word b grading ++nn images 2 5 2 0
frow 3 word a1 a2 grading n++n images 1 3 6 7
frow 4 word a2 a3 grading +nn+ images 6 4 1 4
frow 5 word a2 b grading +n+n images 7 2 8 1
frow 6 word a1 a2 a3 grading n+n+ images 4 9 3 6
frow 7 word a1 a2 b grading n++n images 5 7 10 3
frow 8 word a2 a3 b grading +nn+ images 10 8 5 8
frow 9 word a1 a3 grading nn++ images 9 6 9 9
frow 10 word a1 a2 a3 b grading n+n+ images 8 11 7 10
frow 11 word a1 a3 b grading nn++ images 11 10 11 11
end
)";

inline constexpr std::uint64_t spin32_block_fnv = 0x14e829cee1fcb1f8ull;
inline constexpr std::uint64_t spin54_fiber_fnv = 0x24980da2ede375ceull;

}  // namespace golden_text

inline std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

struct GoldenCell {
    bool defined = false;
    std::vector<int> targets;
};

struct GoldenRow {
    int index = 0;
    int length = 0;
    int cross = 0;
    GoldenCell beta, alpha;
    std::string ident;  // grading diagram, empty when absent
    int pc = 0;
};

struct GoldenFiberRow {
    int index = 0;
    std::vector<std::string> word;
    std::string grading;
    std::vector<int> images;
};

struct GoldenMatrix {
    std::vector<int> order;  // row k of values is golden index order[k]
    IntMatrix values;

    /// Entry addressed by golden indices.
    long long at(int i, int j) const {
        return values[position(i)][position(j)];
    }
    int position(int i) const {
        for (std::size_t k = 0; k < order.size(); ++k)
            if (order[k] == i) return static_cast<int>(k);
        throw std::out_of_range("index not in matrix order");
    }
};

struct GoldenFixture {
    std::string name;
    std::map<std::string, std::string> meta;
    std::map<std::string, std::vector<GoldenRow>> tables;
    std::map<std::string, GoldenMatrix> matrices;
    std::vector<GoldenFiberRow> fiber;
};

namespace detail {

inline GoldenCell parse_cell(const std::string& tok) {
    GoldenCell c;
    if (tok == "*") return c;
    c.defined = true;
    std::stringstream ss(tok);
    std::string part;
    while (std::getline(ss, part, ',')) c.targets.push_back(std::stoi(part));
    return c;
}

inline void expect_word(std::istringstream& in, const char* w) {
    std::string tok;
    if (!(in >> tok) || tok != w) throw std::runtime_error(std::string("corrupt fixture: expected ") + w);
}

inline void check_block_fixture(const GoldenFixture& f) {
    for (const auto& [name, rows] : f.tables) {
        const int n = static_cast<int>(rows.size());
        std::vector<int> seen(n, 0);
        for (const auto& r : rows) {
            if (r.index < 0 || r.index >= n || seen[r.index]++) throw std::runtime_error("corrupt fixture: row index");
            auto in_range = [&](int k) { return k >= 0 && k < n; };
            bool ok = in_range(r.cross);
            for (const auto* c : {&r.beta, &r.alpha})
                for (int k : c->targets) ok = ok && in_range(k);
            if (!ok) throw std::runtime_error("corrupt fixture: table entry out of range");
        }
        for (const auto& r : rows)
            for (const auto& s : rows)
                if (s.index == r.cross && s.cross != r.index)
                    throw std::runtime_error("corrupt fixture: cross column is not an involution");
    }
    for (const auto& [name, mat] : f.matrices) {
        const int n = static_cast<int>(mat.order.size());
        if (static_cast<int>(mat.values.size()) != n) throw std::runtime_error("corrupt fixture: matrix shape");
        for (const auto& row : mat.values)
            if (static_cast<int>(row.size()) != n) throw std::runtime_error("corrupt fixture: matrix shape");
        try {
            unitriangular_inverse(mat.values);
        } catch (const std::invalid_argument&) {
            throw std::runtime_error("corrupt fixture: matrix not unitriangular");
        }
    }
}

inline void check_fiber_fixture(const GoldenFixture& f) {
    const int n = static_cast<int>(f.fiber.size());
    for (int k = 0; k < n; ++k) {
        const auto& r = f.fiber[k];
        if (r.index != k) throw std::runtime_error("corrupt fixture: row index");
        for (std::size_t j = 0; j < r.images.size(); ++j) {
            const int t = r.images[j];
            if (t < 0 || t >= n || f.fiber[t].images.at(j) != k)
                throw std::runtime_error("corrupt fixture: simple reflection does not act as an involution");
        }
    }
}

}  // namespace detail

/// Parse fixture text; the checksum is compared when expected is nonzero.
inline GoldenFixture parse_golden(std::string_view text, std::uint64_t expected = 0) {
    if (expected && fnv1a(text) != expected) throw std::runtime_error("corrupt fixture: checksum mismatch");
    GoldenFixture f;
    std::istringstream all{std::string(text)};
    std::string line, current;
    GoldenMatrix* mat = nullptr;
    std::string mat_name;
    bool ended = false;
    while (std::getline(all, line)) {
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string head;
        in >> head;
        if (mat && static_cast<int>(mat->values.size()) < static_cast<int>(mat->order.size())) {
            std::istringstream nums(line);
            std::vector<long long> row;
            long long v;
            while (nums >> v) row.push_back(v);
            if (!nums.eof()) throw std::runtime_error("corrupt fixture: matrix row");
            mat->values.push_back(row);
            continue;
        }
        if (head == "fixture") {
            in >> f.name;
        } else if (head == "table") {
            in >> current;
            f.tables[current];
        } else if (head == "row") {
            GoldenRow r;
            std::string b, a;
            in >> r.index;
            detail::expect_word(in, "len");
            in >> r.length;
            detail::expect_word(in, "cross");
            in >> r.cross;
            detail::expect_word(in, "beta");
            in >> b;
            detail::expect_word(in, "alpha");
            in >> a;
            if (!in) throw std::runtime_error("corrupt fixture: table row");
            r.beta = detail::parse_cell(b);
            r.alpha = detail::parse_cell(a);
            std::string tok;
            if (in >> tok) {
                if (tok != "ident") throw std::runtime_error("corrupt fixture: table row");
                while (in >> tok && tok != "pc") r.ident += (r.ident.empty() ? "" : " ") + tok;
                if (!(in >> r.pc)) throw std::runtime_error("corrupt fixture: table row");
            }
            f.tables.at(current).push_back(r);
        } else if (head == "matrix") {
            in >> mat_name;
            std::string where;
            in >> where;
            detail::expect_word(in, "order");
            GoldenMatrix m;
            int k;
            while (in >> k) m.order.push_back(k);
            mat = &(f.matrices[mat_name + " " + where] = m);
        } else if (head == "frow") {
            GoldenFiberRow r;
            in >> r.index;
            detail::expect_word(in, "word");
            std::string tok;
            while (in >> tok && tok != "grading")
                if (tok != "e") r.word.push_back(tok);
            in >> r.grading;
            detail::expect_word(in, "images");
            int k;
            while (in >> k) r.images.push_back(k);
            if (r.grading.empty()) throw std::runtime_error("corrupt fixture: fiber row");
            f.fiber.push_back(r);
        } else if (head == "end") {
            ended = true;
        } else {
            std::string rest;
            std::getline(in >> std::ws, rest);
            f.meta[head] = rest;
        }
    }
    if (!ended || f.name.empty()) throw std::runtime_error("corrupt fixture: truncated");
    if (!f.tables.empty()) detail::check_block_fixture(f);
    if (!f.fiber.empty()) detail::check_fiber_fixture(f);
    return f;
}

inline GoldenFixture load_golden(const std::string& name) {
    if (name == "spin32_block") return parse_golden(golden_text::spin32_block, golden_text::spin32_block_fnv);
    if (name == "spin54_fiber") return parse_golden(golden_text::spin54_fiber, golden_text::spin54_fiber_fnv);
    throw std::invalid_argument("unknown fixture: " + name);
}

// ---------------------------------------------------------------- helpers

inline std::vector<int> parse_ints(const std::string& s) {
    std::istringstream in(s);
    std::vector<int> v;
    int k;
    while (in >> k) v.push_back(k);
    return v;
}

inline InfChar fixture_lambda(const GoldenFixture& f) { return parse_inf_char(f.meta.at("lambda")); }

inline RealForm fixture_form(const GoldenFixture& f) {
    const auto v = parse_ints(f.meta.at("form"));
    return {v.at(0), v.at(1)};
}

inline RootVec fixture_root(const GoldenFixture& f, const std::string& key) {
    auto v = parse_ints(f.meta.at(key));
    v.resize(fixture_lambda(f).rank());
    return v;
}

inline Block golden_block(const GoldenFixture& f) {
    return build_block(fixture_form(f), fixture_lambda(f), f.meta.at("chi") == "-" ? -1 : 1);
}

/// Golden index -> block row, read from the identification column.
inline std::vector<int> identify_rows(const GoldenFixture& f, const Block& b) {
    const auto& rows = f.tables.at("B");
    std::vector<int> to(rows.size(), -1);
    for (const auto& r : rows) {
        std::string diag = r.ident;
        for (auto& c : diag)
            if (c == 'n') c = '+';
        const auto t = parse_diagram(diag);
        const GenuineParam g{t, parse_grading(t, r.ident), b.chi, r.pc, b.kappa};
        to[r.index] = b.index_of(g);
    }
    return to;
}

/// Golden dual index -> dual block row, through delta_i = psi(gamma_i).
inline std::vector<int> identify_dual_rows(const Block& b, const Block& d, const std::vector<int>& gamma) {
    std::vector<int> to(gamma.size(), -1);
    for (std::size_t i = 0; i < gamma.size(); ++i)
        if (gamma[i] >= 0) to[i] = d.index_of(psi(b.params[gamma[i]], b.setting));
    return to;
}

inline int root_column(const std::vector<RootVec>& roots, const RootVec& a) {
    for (std::size_t k = 0; k < roots.size(); ++k)
        if (roots[k] == a) return static_cast<int>(k);
    return -1;
}

/// Compare one golden table with a block under the row map golden index -> block row.
inline Report compare_structure(const std::vector<GoldenRow>& rows, const Block& b, const std::vector<int>& to,
                                const RootVec& cross_root, const RootVec& beta, const RootVec& alpha) {
    Report r;
    r.expect(static_cast<int>(rows.size()) == b.size(), "block size");
    for (int x : to) r.expect(x >= 0, "row without a matching parameter");
    if (!r.ok()) return r;
    const int cc = root_column(b.cross_roots, cross_root);
    const int cb = root_column(b.cayley_roots, beta), ca = root_column(b.cayley_roots, alpha);
    r.expect(cc >= 0 && cb >= 0 && ca >= 0, "missing column");
    if (!r.ok()) return r;
    auto cell_ok = [&](const GoldenCell& g, const CayleyCell& c) {
        if (g.defined != c.defined) return false;
        std::vector<int> want;
        for (int k : g.targets) want.push_back(to[k]);
        std::vector<int> got = c.targets;
        std::sort(want.begin(), want.end());
        std::sort(got.begin(), got.end());
        return want == got;
    };
    for (const auto& g : rows) {
        const int i = to[g.index];
        const std::string tag = "row " + std::to_string(g.index);
        r.expect(b.lengths[i] == g.length, tag + " length");
        r.expect(b.cross[cc][i] == to[g.cross], tag + " cross");
        r.expect(cell_ok(g.beta, b.cayley[cb][i]), tag + " beta");
        r.expect(cell_ok(g.alpha, b.cayley[ca][i]), tag + " alpha");
    }
    return r;
}

/// Integral simple roots whose cross column reproduces the golden one.
inline std::vector<RootVec> matching_cross_roots(const std::vector<GoldenRow>& rows, const Block& b,
                                                 const std::vector<int>& to) {
    std::vector<RootVec> out;
    for (std::size_t c = 0; c < b.cross_roots.size(); ++c) {
        bool ok = true;
        for (const auto& g : rows) ok = ok && b.cross[c][to[g.index]] == to[g.cross];
        if (ok) out.push_back(b.cross_roots[c]);
    }
    return out;
}

/// Matrix in golden index order transported to block order.
inline IntMatrix to_block_order(const GoldenMatrix& g, const std::vector<int>& to) {
    const int n = static_cast<int>(g.order.size());
    IntMatrix out(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[to[i]][to[j]] = g.at(i, j);
    return out;
}

inline IntMatrix inverse_in_order(const GoldenMatrix& g, const std::vector<int>& to) {
    GoldenMatrix inv{g.order, unitriangular_inverse(g.values)};
    return to_block_order(inv, to);
}

/// Multiplicity matrices for the shipped example blocks. Other blocks have no source.
inline MultMatrices klv_matrices(const Block& blk) {
    const auto f = load_golden("spin32_block");
    const auto b = golden_block(f);
    const auto gamma = identify_rows(f, b);
    if (blk.params == b.params && blk.chi == b.chi && blk.setting.form == b.setting.form) {
        const auto& M = f.matrices.at("M B");
        return {to_block_order(M, gamma), inverse_in_order(M, gamma)};
    }
    const auto d = build_dual_block(b);
    if (blk.params == d.params && blk.chi == d.chi && blk.setting.form == d.setting.form) {
        const auto delta = identify_dual_rows(b, d, gamma);
        const auto& m = f.matrices.at("m B'");
        return {inverse_in_order(m, delta), to_block_order(m, delta)};
    }
    throw std::invalid_argument("no multiplicity data for this block");
}

/// Signed antitranspose identity read directly off the two golden matrices.
inline Report golden_antitranspose(const GoldenFixture& f) {
    Report r;
    const auto& M = f.matrices.at("M B");
    const auto& m = f.matrices.at("m B'");
    std::map<int, int> len;
    for (const auto& row : f.tables.at("B")) len[row.index] = row.length;
    const int n = static_cast<int>(M.order.size());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const long long sign = (len[j] - len[i]) % 2 ? -1 : 1;
            r.expect(M.at(i, j) == sign * m.at(j, i), "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
    return r;
}

// ---------------------------------------------------------------- fiber fixture

inline MElt fixture_word_class(const std::vector<std::string>& word, const std::vector<std::string>& names,
                               const std::vector<RootVec>& gens) {
    MElt m{static_cast<int>(gens.front().size()), 0};
    for (const auto& w : word) {
        const auto it = std::find(names.begin(), names.end(), w);
        if (it == names.end()) throw std::runtime_error("corrupt fixture: unknown letter " + w);
        m = m + m_of_root(gens[it - names.begin()]);
    }
    return m;
}

/// Golden fiber rows against the breadth-first fiber over the same base orbit.
inline Report compare_fiber(const GoldenFixture& f) {
    Report r;
    const auto t = parse_diagram(f.meta.at("theta"));
    std::vector<std::string> names;
    {
        std::istringstream in(f.meta.at("generators"));
        std::string s;
        while (in >> s) names.push_back(s);
    }
    const auto& base = f.fiber.front();
    const auto tab = enumerate_fiber(t, parse_grading(t, base.grading));
    r.expect(tab.rows.size() == f.fiber.size(), "fiber size");
    r.expect(tab.generators.size() == names.size(), "generator count");
    if (!r.ok()) return r;
    FiberCalculus fc(t);
    std::vector<int> to;
    for (const auto& g : f.fiber) {
        const auto cls = fc.reduce(fixture_word_class(g.word, names, tab.generators));
        int k = -1;
        for (std::size_t i = 0; i < tab.rows.size(); ++i)
            if (tab.rows[i].mclass == cls) k = static_cast<int>(i);
        to.push_back(k);
        r.expect(k >= 0, "row " + std::to_string(g.index) + " has no orbit");
    }
    if (!r.ok()) return r;
    std::vector<int> sorted = to;
    std::sort(sorted.begin(), sorted.end());
    r.expect(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), "two rows share an orbit");
    for (const auto& g : f.fiber) {
        const auto& row = tab.rows[to[g.index]];
        const std::string tag = "row " + std::to_string(g.index);
        r.expect(row.eps == parse_grading(t, g.grading), tag + " grading");
        for (std::size_t j = 0; j < names.size(); ++j) r.expect(row.images[j] == to[g.images[j]], tag + " image");
    }
    return r;
}

}  // namespace spindual
