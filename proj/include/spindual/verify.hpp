#pragma once
// Verification suites shared by the acceptance runner and the command line.

#include <chrono>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "parallel.hpp"

namespace spindual {

struct SuiteResult {
    int id = 0;
    std::string title;
    Report report;
    double ms = 0;
    double limit_ms = 0;  // 0: no time limit
    std::string detail;

    bool pass() const { return report.ok() && (limit_ms <= 0 || ms < limit_ms); }
};

template <class Fn>
SuiteResult timed(int id, std::string title, double limit_ms, Fn body) {
    SuiteResult r{id, std::move(title), {}, 0, limit_ms, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(r);
    } catch (const std::exception& e) {
        r.report.expect(false, std::string("exception: ") + e.what());
    }
    r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline void merge(Report& into, const Report& from, const std::string& prefix = "") {
    into.checks += from.checks;
    for (const auto& v : from.violations) into.violations.push_back(prefix + v);
}

// ---------------------------------------------------------------- brute force oracles

inline std::vector<SignedPerm> all_signed_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPerm> out;
    do {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
            SignedPerm w = SignedPerm::identity(n);
            w.perm = p;
            for (int i = 0; i < n; ++i) w.bits[i] = (m >> i) & 1;
            out.push_back(w);
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Conjugacy classes of involutions found by explicit conjugation: class minimum -> size.
inline std::map<SignedPerm, std::uint64_t> brute_involution_classes(int n) {
    const auto group = all_signed_perms(n);
    std::map<SignedPerm, std::uint64_t> classes;
    for (const auto& w : group) {
        if (!(compose(w, w) == SignedPerm::identity(n))) continue;
        SignedPerm least = w;
        for (const auto& x : group) least = std::min(least, conjugate(x, w));
        ++classes[least];
    }
    return classes;
}

/// Every (setting, family member) at rank n: one canonical vector per pattern, every real form.
struct Sample {
    Setting setting;
    int kappa;
};

inline std::vector<Sample> all_samples(int n, bool noncompact_only) {
    std::vector<Sample> out;
    for (std::uint64_t pat = 0; pat < (std::uint64_t{1} << n); ++pat) {
        const auto l = canonical_rep(n, pat);
        const auto fam = family(l);
        for (int q = noncompact_only ? 1 : 0; q <= n; ++q) out.push_back({{{2 * n + 1 - q, q}, fam}, fam.index_of(l)});
    }
    return out;
}

// ---------------------------------------------------------------- fixture criteria

inline SuiteResult criterion_block() {
    return timed(1, "block reproduction: P(3,2) at lambda=(3/2,1)", 1000, [](SuiteResult& r) {
        const auto f = load_golden("spin32_block");
        const auto b = golden_block(f);
        r.report.expect(b.size() == 9, "expected 9 parameters, got " + std::to_string(b.size()));
        auto lens = b.lengths;
        std::sort(lens.begin(), lens.end());
        r.report.expect(lens == std::vector<int>{0, 0, 1, 1, 1, 2, 2, 3, 3}, "length multiset");
        std::set<RealForm> duals;
        for (const auto& g : b.params) duals.insert(dual_group(bigrading_of(g, b.setting)));
        r.report.expect(duals == std::set<RealForm>{{3, 2}}, "dual group is not (3,2)");
        r.detail = "size " + std::to_string(b.size()) + ", dual " + to_string(*duals.begin());
    });
}

inline SuiteResult criterion_structure() {
    return timed(2, "structure tables of B and B'", 1000, [](SuiteResult& r) {
        const auto f = load_golden("spin32_block");
        const auto b = golden_block(f);
        const auto d = build_dual_block(b);
        const auto gamma = identify_rows(f, b);
        const auto delta = identify_dual_rows(b, d, gamma);
        const auto cr = fixture_root(f, "cross_root"), beta = fixture_root(f, "beta"), alpha = fixture_root(f, "alpha");
        merge(r.report, compare_structure(f.tables.at("B"), b, gamma, cr, beta, alpha), "B: ");
        merge(r.report, compare_structure(f.tables.at("B'"), d, delta, cr, beta, alpha), "B': ");
        const auto roots = matching_cross_roots(f.tables.at("B"), b, gamma);
        r.report.expect(roots == std::vector<RootVec>{cr}, "cross column does not single out the recorded root");
        r.detail = "cross column inferred as reflection in e2 (unique among " + std::to_string(b.cross_roots.size()) +
                   " integral simple roots)";
    });
}

inline SuiteResult criterion_duality_identity() {
    return timed(3, "multiplicity duality on golden matrices", 0, [](SuiteResult& r) {
        const auto f = load_golden("spin32_block");
        merge(r.report, golden_antitranspose(f), "antitranspose: ");
        const auto b = golden_block(f);
        const auto d = build_dual_block(b);
        const auto mb = klv_matrices(b), md = klv_matrices(d);
        merge(r.report, check_mult_invariants(mb, b.lengths), "B: ");
        merge(r.report, check_mult_invariants(md, d.lengths), "B': ");
        merge(r.report, verify_duality(b, d, mb, md), "psi-indexed: ");
        r.detail = "m*M = I checked inside each block";
    });
}

inline SuiteResult criterion_fiber() {
    return timed(4, "Spin(5,4) fiber over the compact Cartan", 1000, [](SuiteResult& r) {
        const auto f = load_golden("spin54_fiber");
        const auto t = parse_diagram(f.meta.at("theta"));
        const auto tab = enumerate_fiber(t, parse_grading(t, f.fiber.front().grading));
        r.report.expect(tab.rows.size() == 12, "expected 12 orbits, got " + std::to_string(tab.rows.size()));
        std::map<ImGrading, int> per;
        for (const auto& row : tab.rows) ++per[row.eps];
        r.report.expect(per.size() == 6, "expected six gradings");
        for (const auto& [e, c] : per) r.report.expect(c == 2, "grading " + render_grading(t, e) + " appears " + std::to_string(c) + " times");
        merge(r.report, compare_fiber(f), "table: ");
        r.detail = std::to_string(tab.rows.size()) + " orbits";
    });
}

// ---------------------------------------------------------------- property criteria

inline Report counting_at(int n) {
    Report r;
    const auto invs = list_involutions(n, std::max(n, kDefaultRankBound));
    const std::string at = "n=" + std::to_string(n) + ": ";

    std::uint64_t by_class = 0;
    for (int nc = 0; nc <= n; nc += 2)
        for (int ns = 0; ns + nc <= n; ++ns) by_class += class_size(n, nc, ns);
    r.expect(invs.size() == by_class, at + "involution total vs class sizes");

    if (n <= 5) {
        const auto classes = brute_involution_classes(n);
        r.expect(classes.size() == num_conjugacy_classes(n), at + "class count");
        std::uint64_t total = 0;
        for (const auto& [rep, size] : classes) {
            total += size;
            const auto [nc, ns] = conjugacy_invariants(rep);
            r.expect(size == class_size(n, nc, ns), at + "class size of " + render_diagram(rep));
        }
        r.expect(total == invs.size(), at + "involution total vs brute force");
    }

    for (const auto& t : invs) {
        const std::string tag = at + render_diagram(t);
        r.expect(count_genuine_exts(t) == genuine_exts_by_case(t), tag + " extension count");
        for (const auto& e : all_gradings(t)) {
            if (stats(t).n_s == n && e.noncompact == 0) continue;  // compact form
            r.expect(enumerate_fiber(t, e).rows.size() == fiber_order(t, e), tag + " fiber order");
        }
    }

    for (const auto& smp : all_samples(n, false)) {
        const auto& s = smp.setting;
        const auto& l = s.lambda(smp.kappa);
        const auto all = enumerate_params(s, smp.kappa);
        for (const auto& t : invs) {
            std::uint64_t both = 0;
            for (int chi : {1, -1}) {
                const auto sl = slice(all, t, chi);
                both += sl.size();
                const std::string tag = at + to_string(s.form) + " lambda " + to_string(l) + " " + render_diagram(t);
                r.expect(sl.size() == physical_slice_count(t, s, smp.kappa, chi), tag + " slice vs orbit count");
                if (s.form.q > 0 && !sl.empty())
                    r.expect(sl.size() == rep_fiber_chi_formula(t), tag + " slice vs formula");
            }
            if (s.form.q > 0 && both)
                r.expect(both == rep_fiber_formula(t, l), at + to_string(s.form) + " " + render_diagram(t) + " fiber vs formula");
        }
    }
    return r;
}

inline Report numerical_duality_at(int n) {
    Report r;
    std::map<std::pair<RealForm, std::vector<int>>, std::vector<GenuineParam>> cache;
    auto params_of = [&](const Setting& s, int kappa) -> const std::vector<GenuineParam>& {
        const auto key = std::make_pair(s.form, s.lambda(kappa).twice);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, enumerate_params(s, kappa)).first;
        return it->second;
    };
    for (const auto& smp : all_samples(n, true)) {
        const auto& s = smp.setting;
        const auto& all = params_of(s, smp.kappa);
        for (const auto& t : list_involutions(n, std::max(n, kDefaultRankBound)))
            for (int chi : {1, -1}) {
                const auto sl = slice(all, t, chi);
                if (sl.empty()) continue;
                const std::string tag = "n=" + std::to_string(n) + " " + to_string(s.form) + " " +
                                        to_string(s.lambda(smp.kappa)) + " " + render_diagram(t);
                const auto ds = dual_setting(sl.front(), s);
                for (const auto& g : sl) r.expect(dual_setting(g, s).form == ds.form, tag + " dual group varies");
                const auto dual = slice(params_of(ds, smp.kappa), dualize_involution(t), -chi);
                r.expect(dual.size() == sl.size(), tag + " count differs from dual");
            }
    }
    return r;
}

inline Report principal_classes_at(int n) {
    Report r;
    for (const auto& smp : all_samples(n, true)) {
        const auto& s = smp.setting;
        const auto all = enumerate_params(s, smp.kappa);
        for (const auto& t : list_involutions(n, std::max(n, kDefaultRankBound))) {
            if (!even_parity(t)) continue;
            for (int chi : {1, -1}) {
                const auto sl = slice(all, t, chi);
                if (sl.empty()) continue;
                std::set<PrincipalClassLabel> labels;
                std::set<int> zs;
                for (const auto& g : sl) {
                    labels.insert(principal_class(g));
                    zs.insert(transported_z_sign(g));
                }
                const std::string tag = "n=" + std::to_string(n) + " " + to_string(s.form) + " " + render_diagram(t);
                r.expect(labels.size() == sl.size(), tag + " principal class map not injective");
                r.expect(labels.size() == 2, tag + " principal class map not onto two classes");
                r.expect(zs.size() == sl.size(), tag + " z-values collide");
            }
        }
    }
    return r;
}

/// Blocks at rank n over every family pattern, real form and central character.
inline std::vector<Block> all_blocks(int n) {
    std::vector<Block> out;
    for (const auto& smp : all_samples(n, false))
        for (int chi : {1, -1}) {
            const auto& l = smp.setting.lambda(smp.kappa);
            if (enumerate_params(smp.setting, smp.kappa, chi).empty()) continue;
            out.push_back(build_block(smp.setting.form, l, chi));
        }
    return out;
}

/// Cross actions by non-simple integral roots agree with words in the simple reflections,
/// and the simple reflections satisfy the braid relations.
inline Report group_action(const Block& b) {
    Report r;
    const auto& s = b.setting;
    const int n = s.rank();
    const auto sr = simple_roots(n);
    for (const auto& g : b.params) {
        for (std::size_t i = 0; i < sr.size(); ++i)
            for (std::size_t j = i + 1; j < sr.size(); ++j) {
                const int m = j == i + 1 ? (j + 1 == sr.size() ? 4 : 3) : 2;
                auto h = g;
                for (int k = 0; k < m; ++k) h = simple_cross(sr[j], simple_cross(sr[i], h, s), s);
                r.expect(h == g, "braid relation at " + describe(g));
            }
        for (const auto& a : sr) r.expect(simple_cross(a, simple_cross(a, g, s), s) == g, "reflection squares: " + describe(g));
    }
    return r;
}

inline Report intertwining_at(int n, int threads) {
    const auto blocks = all_blocks(n);
    const auto parts = parallel_map<Report>(blocks.size(), threads, [&](std::size_t i) {
        Report r;
        const auto& b = blocks[i];
        const auto d = build_dual_block(b);
        const std::string tag = to_string(b.setting.form) + " " + to_string(b.setting.lambda(b.kappa)) +
                                (b.chi > 0 ? " chi+ " : " chi- ");
        merge(r, verify_intertwining(b, d), tag);
        return r;
    });
    Report all;
    for (const auto& p : parts) merge(all, p);
    return all;
}

inline SuiteResult criterion_counting(const std::vector<int>& ranks) {
    return timed(5, "counting oracles", 10000, [&](SuiteResult& r) {
        for (int n : ranks) merge(r.report, counting_at(n));
        r.detail = std::to_string(r.report.checks) + " checks";
    });
}

inline SuiteResult criterion_numerical_duality(const std::vector<int>& ranks) {
    return timed(6, "numerical duality", 10000, [&](SuiteResult& r) {
        for (int n : ranks) merge(r.report, numerical_duality_at(n));
        r.detail = std::to_string(r.report.checks) + " checks";
    });
}

inline SuiteResult criterion_intertwining(const std::vector<int>& ranks, int threads) {
    return timed(7, "psi intertwining", 60000, [&](SuiteResult& r) {
        const auto f = load_golden("spin32_block");
        const auto b = golden_block(f);
        merge(r.report, verify_intertwining(b, build_dual_block(b)), "example pair: ");
        for (int n : ranks) merge(r.report, intertwining_at(n, threads));
        r.detail = std::to_string(r.report.checks) + " checks";
    });
}

inline SuiteResult criterion_principal_classes(const std::vector<int>& ranks) {
    return timed(8, "principal class map bijective", 0, [&](SuiteResult& r) {
        for (int n : ranks) merge(r.report, principal_classes_at(n));
        r.detail = std::to_string(r.report.checks) + " checks";
    });
}

inline std::vector<SuiteResult> acceptance_suites(int threads) {
    return {criterion_block(),
            criterion_structure(),
            criterion_duality_identity(),
            criterion_fiber(),
            criterion_counting({2, 4}),
            criterion_numerical_duality({2, 4}),
            criterion_intertwining({4}, threads),
            criterion_principal_classes({2, 4})};
}

// ---------------------------------------------------------------- per-rank property sweep

inline SuiteResult module_properties(int n, int threads) {
    return timed(0, "module properties at rank " + std::to_string(n), 0, [&](SuiteResult& r) {
        auto& rep = r.report;
        const auto invs = list_involutions(n, std::max(n, kDefaultRankBound));
        for (const auto& t : invs) {
            const auto d = render_diagram(t);
            rep.expect(parse_diagram(d) == t, "diagram round trip " + d);
            rep.expect(dualize_involution(dualize_involution(t)) == t, "dualize involutive " + d);
            rep.expect(length(t) + length(dualize_involution(t)) == n * (n + 1) / 2, "length of -theta " + d);
            for (const auto& e : all_gradings(t)) rep.expect(check_grading_axioms(t, e), "grading axioms " + d);
        }
        for (const auto& smp : all_samples(n, false)) {
            const auto& s = smp.setting;
            for (const auto& g : enumerate_params(s, smp.kappa)) {
                rep.expect(check_grading_axioms(g.theta, eta_of(g, s), s.lambda(g.kappa)), "real grading axioms " + describe(g));
                for (const auto& a : simple_roots(n)) {
                    if (root_type(g.theta, a) != RootType::imaginary || eval_grading(g.theta, g.eps, a) != 1) continue;
                    for (const auto& h : cayley_up(g, a, s)) rep.expect(length(h) > length(g), "Cayley raises length " + describe(g));
                }
            }
        }
        if (n % 2 == 0) {
            const auto blocks = all_blocks(n);
            const auto parts = parallel_map<Report>(blocks.size(), threads, [&](std::size_t i) { return group_action(blocks[i]); });
            for (const auto& p : parts) merge(rep, p);
        }
        r.detail = std::to_string(rep.checks) + " checks";
    });
}

/// Everything `verify --rank n` runs.
inline std::vector<SuiteResult> rank_suites(int n, int threads) {
    std::vector<SuiteResult> out = {criterion_block(), criterion_structure(), criterion_duality_identity(), criterion_fiber(),
                                    criterion_counting({n})};
    if (n % 2 == 0) {
        out.push_back(criterion_numerical_duality({n}));
        out.push_back(criterion_intertwining({n}, threads));
        out.push_back(criterion_principal_classes({n}));
    }
    out.push_back(module_properties(n, threads));
    for (auto& s : out)
        if (s.id >= 5) s.limit_ms = 0;  // limits are calibrated for the acceptance ranks
    return out;
}

}  // namespace spindual
