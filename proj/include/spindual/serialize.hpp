#pragma once
// Tables of results and their JSON, CSV and TeX renderings.

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "verify.hpp"

namespace spindual {

using Json = nlohmann::ordered_json;

struct Column {
    std::string key;
    std::string tex;   // header in TeX output
    bool ref = false;  // cell holds row indices; TeX prints them as symbols
};

struct Table {
    std::vector<Column> columns;
    std::vector<std::vector<Json>> rows;
    std::string symbol = "\\gamma";  // row symbol for TeX references
};

inline std::string root_name(const RootVec& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        if (a[i] < 0) s += '-';
        else if (!s.empty()) s += '+';
        s += "e" + std::to_string(i + 1);
    }
    return s;
}

// ---------------------------------------------------------------- renderers

inline Json to_json(const Table& t) {
    Json out = Json::array();
    for (const auto& row : t.rows) {
        Json obj = Json::object();
        for (std::size_t k = 0; k < t.columns.size(); ++k) obj[t.columns[k].key] = row[k];
        out.push_back(obj);
    }
    return out;
}

inline std::string plain_cell(const Json& v) {
    if (v.is_null()) return "*";
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : " ") + plain_cell(x);
        return s;
    }
    return v.dump();
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

inline std::string to_csv(const Table& t) {
    std::ostringstream out;
    for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? "," : "") << csv_field(t.columns[k].key);
    out << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? "," : "") << csv_field(plain_cell(row[k]));
        out << "\n";
    }
    return out.str();
}

inline std::string tex_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': case '%': case '$': case '#': case '_': case '{': case '}': out += '\\'; out += c; break;
            case '\\': out += "\\textbackslash{}"; break;
            default: out += c;
        }
    }
    return out;
}

inline std::string tex_cell(const Json& v, const Column& c, const std::string& symbol) {
    if (v.is_null()) return "*";
    if (!c.ref) return tex_escape(plain_cell(v));
    auto one = [&](const Json& x) { return symbol + "_{" + x.dump() + "}"; };
    if (!v.is_array()) return "$" + one(v) + "$";
    if (v.size() == 1) return "$" + one(v[0]) + "$";
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : ",") + one(x);
    return "$\\left\\{" + s + "\\right\\}$";
}

inline std::string to_tex(const Table& t) {
    std::ostringstream out;
    out << "\\begin{tabular}{|";
    for (std::size_t k = 0; k < t.columns.size(); ++k) out << "c|";
    out << "}\n\\hline\n";
    for (std::size_t k = 0; k < t.columns.size(); ++k) out << (k ? " & " : "") << t.columns[k].tex;
    out << " \\\\\n\\hline\n";
    for (const auto& row : t.rows) {
        for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " & " : "") << tex_cell(row[k], t.columns[k], t.symbol);
        out << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return out.str();
}

enum class Format { json, csv, tex };

inline std::string emit(const Table& t, Format f) {
    switch (f) {
        case Format::json: return to_json(t).dump(2) + "\n";
        case Format::csv: return to_csv(t);
        case Format::tex: return to_tex(t);
    }
    return {};
}

// ---------------------------------------------------------------- tables

inline std::vector<Column> param_columns() {
    return {{"theta", "$\\theta$"}, {"grading", "grading"}, {"chi", "$\\chi$"}, {"pc", "class"}, {"lambda", "$\\lambda$"},
            {"length", "length"}};
}

inline std::vector<Json> param_cells(const GenuineParam& g, const Setting& s) {
    return {render_diagram(g.theta), render_grading(g.theta, g.eps), g.chi > 0 ? "+" : "-", g.pc,
            to_string(s.lambda(g.kappa)), length(g)};
}

inline Table involution_table(int n) {
    Table t;
    t.columns = {{"theta", "$\\theta$"}, {"n_c", "$n_c$"}, {"n_s", "$n_s$"}, {"n_r", "$n_r$"},
                 {"length", "length"}, {"even_parity", "even parity"}, {"class_size", "class size"}};
    for (const auto& x : list_involutions(n, std::max(n, kDefaultRankBound))) {
        const auto s = stats(x);
        t.rows.push_back({render_diagram(x), s.n_c, s.n_s, s.n_r, s.length, even_parity(x),
                          class_size(n, s.n_c, s.n_s)});
    }
    return t;
}

/// One row per conjugacy class, represented by its least diagram.
inline Table class_table(int n) {
    Table t;
    t.columns = {{"representative", "representative"}, {"n_c", "$n_c$"}, {"n_s", "$n_s$"}, {"class_size", "class size"}};
    std::map<std::pair<int, int>, std::string> rep;
    for (const auto& x : list_involutions(n, std::max(n, kDefaultRankBound))) {
        const auto key = conjugacy_invariants(x);
        const auto d = render_diagram(x);
        if (!rep.count(key)) rep[key] = d;
    }
    for (const auto& [key, d] : rep) t.rows.push_back({d, key.first, key.second, class_size(n, key.first, key.second)});
    return t;
}

inline Table fiber_table(const FiberTable& f) {
    Table t;
    t.symbol = "x";
    t.columns = {{"orbit", "orbit"}, {"coset", "coset"}, {"grading", "grading"}};
    for (const auto& g : f.generators) t.columns.push_back({"s_" + root_name(g), "$" + root_name(g) + "$", true});
    for (std::size_t i = 0; i < f.rows.size(); ++i) {
        const auto& r = f.rows[i];
        std::vector<Json> row = {static_cast<int>(i), to_string(r.mclass), render_grading(f.theta, r.eps)};
        for (int k : r.images) row.push_back(k);
        t.rows.push_back(row);
    }
    return t;
}

inline Table params_table(const std::vector<GenuineParam>& ps, const Setting& s) {
    Table t;
    t.columns = param_columns();
    for (const auto& g : ps) t.rows.push_back(param_cells(g, s));
    return t;
}

inline Json cayley_json(const CayleyCell& c) {
    if (!c.defined) return nullptr;
    Json v = Json::array();
    for (int k : c.targets) v.push_back(k);
    return v;
}

inline Table block_table(const Block& b) {
    Table t;
    t.columns = {{"index", "$\\mathcal{B}$", true}, {"length", "length"}};
    for (const auto& a : b.cross_roots) t.columns.push_back({"cross_" + root_name(a), "$s_{" + root_name(a) + "}\\times$", true});
    for (const auto& a : b.ext_roots) t.columns.push_back({"ext_" + root_name(a), "$s_{" + root_name(a) + "}\\times$"});
    for (const auto& a : b.cayley_roots) t.columns.push_back({"cayley_" + root_name(a), "$" + root_name(a) + "$", true});
    auto pcols = param_columns();
    pcols.pop_back();  // length already leads the row
    for (const auto& c : pcols) t.columns.push_back(c);
    for (int i = 0; i < b.size(); ++i) {
        std::vector<Json> row = {i, b.lengths[i]};
        for (const auto& col : b.cross) row.push_back(col[i]);
        for (const auto& col : b.ext) row.push_back(describe(col[i]));
        for (const auto& col : b.cayley) row.push_back(cayley_json(col[i]));
        auto cells = param_cells(b.params[i], b.setting);
        cells.pop_back();
        for (auto& c : cells) row.push_back(c);
        t.rows.push_back(row);
    }
    return t;
}

inline Table dualize_table(const std::vector<GenuineParam>& ps, const Setting& s) {
    Table t;
    t.columns = param_columns();
    for (const auto& c : std::vector<Column>{{"dual_group", "dual group"}, {"psi_theta", "$\\Psi\\theta$"},
                                             {"psi_grading", "$\\Psi$ grading"}, {"psi_chi", "$\\chi^\\vee$"}, {"psi_pc", "$\\Psi$ class"}})
        t.columns.push_back(c);
    for (const auto& g : ps) {
        auto row = param_cells(g, s);
        const auto h = psi(g, s);
        row.push_back(to_string(dual_setting(g, s).form));
        row.push_back(render_diagram(h.theta));
        row.push_back(render_grading(h.theta, h.eps));
        row.push_back(h.chi > 0 ? "+" : "-");
        row.push_back(h.pc);
        t.rows.push_back(row);
    }
    return t;
}

inline Table verify_table(const std::vector<SuiteResult>& rs) {
    Table t;
    t.columns = {{"id", "criterion"}, {"title", "suite"}, {"pass", "pass"}, {"checks", "checks"},
                 {"violations", "violations"}, {"detail", "detail"}};
    for (const auto& r : rs) {
        Json v = Json::array();
        for (const auto& s : r.report.violations) v.push_back(s);
        t.rows.push_back({r.id, r.title, r.pass(), r.report.checks, v, r.detail});
    }
    return t;
}

}  // namespace spindual
