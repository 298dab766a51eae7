#include "mjack/io.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "mjack/connection.hpp"
#include "mjack/exec.hpp"
#include "mjack/matchings.hpp"

namespace mjack {

using nlohmann::ordered_json;

TableKind parse_table_kind(const std::string& s) {
    if (s == "c")
        return TableKind::C;
    if (s == "marginal")
        return TableKind::Marginal;
    if (s == "d")
        return TableKind::D;
    if (s == "h")
        return TableKind::H;
    if (s == "a")
        return TableKind::A;
    if (s == "atilde")
        return TableKind::ATilde;
    throw std::invalid_argument("unknown table kind '" + s + "'");
}

Format parse_format(const std::string& s) {
    if (s == "json")
        return Format::Json;
    if (s == "csv")
        return Format::Csv;
    if (s == "latex")
        return Format::Latex;
    if (s == "text")
        return Format::Text;
    throw std::invalid_argument("unknown format '" + s + "'");
}

std::string latex_partition(const Partition& p) {
    if (p.empty())
        return "\\emptyset";
    std::string out = "[";
    const auto& parts = p.parts();
    for (std::size_t i = 0; i < parts.size();) {
        std::size_t j = i;
        while (j < parts.size() && parts[j] == parts[i])
            ++j;
        if (i > 0)
            out += ",";
        out += std::to_string(parts[i]);
        if (j - i > 1)
            out += "^{" + std::to_string(j - i) + "}";
        i = j;
    }
    return out + "]";
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

// One table entry: the index triple (third index either ν or l) and the values.
struct Entry {
    Partition lambda, mu, nu;
    int l = 0;
    ordered_json values;            // merged into the JSON object
    std::vector<std::string> cells; // CSV/LaTeX value columns
};

struct TableData {
    int n = 0;
    std::string kind_name;
    bool marginal = false;
    std::vector<std::string> value_headers;
    std::string latex_symbol;
    std::vector<Entry> entries;
};

void check_guard(int n, int guard, const char* what) {
    if (n < 1)
        throw std::invalid_argument("table size must be at least 1");
    if (n > guard)
        throw GuardExceeded(std::string(what) + " table at n=" + std::to_string(n) + " exceeds the guard n <= " +
                            std::to_string(guard));
}

void for_each_triple(int n, const std::function<void(std::size_t, std::size_t, std::size_t)>& f) {
    const std::size_t d = partition_count(n);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t m = 0; m < d; ++m)
            for (std::size_t v = 0; v < d; ++v)
                f(l, m, v);
}

TableData collect(int n, TableKind kind) {
    TableData t;
    t.n = n;
    const auto& parts = all_partitions(n);
    auto triple_entry = [&](std::size_t l, std::size_t m, std::size_t v) {
        Entry e;
        e.lambda = parts[l];
        e.mu = parts[m];
        e.nu = parts[v];
        return e;
    };
    switch (kind) {
    case TableKind::C: {
        check_guard(n, kCoeffTableGuard, "coefficient");
        t.kind_name = "c";
        t.value_headers = {"poly_b"};
        t.latex_symbol = "c^{\\lambda}_{\\mu,\\nu}";
        const auto table = coeff_table(n);
        for_each_triple(n, [&](std::size_t l, std::size_t m, std::size_t v) {
            Entry e = triple_entry(l, m, v);
            const IntPoly& p = table->at(l, m, v);
            e.values["poly_b"] = encode_coeffs(p);
            e.cells = {p.to_string()};
            t.entries.push_back(std::move(e));
        });
        break;
    }
    case TableKind::Marginal: {
        check_guard(n, kCoeffTableGuard, "marginal");
        t.kind_name = "marginal";
        t.marginal = true;
        t.value_headers = {"poly_b"};
        t.latex_symbol = "mc^{\\lambda}_{\\mu,l}";
        const auto table = marginal_table(n);
        for (std::size_t l = 0; l < parts.size(); ++l)
            for (std::size_t m = 0; m < parts.size(); ++m)
                for (int len = 1; len <= n; ++len) {
                    Entry e;
                    e.lambda = parts[l];
                    e.mu = parts[m];
                    e.l = len;
                    const IntPoly& p = table->at(l, m, len);
                    e.values["poly_b"] = encode_coeffs(p);
                    e.cells = {p.to_string()};
                    t.entries.push_back(std::move(e));
                }
        break;
    }
    case TableKind::D: {
        check_guard(n, kCumulantTableGuard, "cumulant");
        t.kind_name = "d";
        t.value_headers = {"poly_b"};
        t.latex_symbol = "d^{\\lambda}_{\\mu,\\nu}";
        for_each_triple(n, [&](std::size_t l, std::size_t m, std::size_t v) {
            Entry e = triple_entry(l, m, v);
            const IntPoly p = cumulant_d(e.lambda, e.mu, e.nu);
            e.values["poly_b"] = encode_coeffs(p);
            e.cells = {p.to_string()};
            t.entries.push_back(std::move(e));
        });
        break;
    }
    case TableKind::H: {
        check_guard(n, kCumulantTableGuard, "h");
        t.kind_name = "h";
        t.value_headers = {"h", "scaled"};
        t.latex_symbol = "h^{\\lambda}_{\\mu,\\nu}";
        for_each_triple(n, [&](std::size_t l, std::size_t m, std::size_t v) {
            Entry e = triple_entry(l, m, v);
            const HCoeff h = h_coeff(e.lambda, e.mu, e.nu);
            e.values["poly_b"] = encode_coeffs(h.h);
            e.values["scaled_poly_b"] = encode_coeffs(h.scaled);
            e.values["integral"] = h.integral;
            e.cells = {h.h.to_string(), h.scaled.to_string()};
            t.entries.push_back(std::move(e));
        });
        break;
    }
    case TableKind::A:
    case TableKind::ATilde: {
        const bool bip = kind == TableKind::ATilde;
        check_guard(n, kMatchingGuard, "matching");
        t.kind_name = bip ? "atilde" : "a";
        t.value_headers = {"value"};
        t.latex_symbol = bip ? "\\tilde a^{\\lambda}_{\\mu,\\nu}" : "a^{\\lambda}_{\\mu,\\nu}";
        const CountTable counts = count_table(n, bip);
        for_each_triple(n, [&](std::size_t l, std::size_t m, std::size_t v) {
            Entry e = triple_entry(l, m, v);
            e.values["value"] = counts.at(l, m, v);
            e.cells = {std::to_string(counts.at(l, m, v))};
            t.entries.push_back(std::move(e));
        });
        break;
    }
    }
    return t;
}

std::string render_json(const TableData& t) {
    ordered_json doc;
    doc["n"] = t.n;
    doc["kind"] = t.kind_name;
    ordered_json entries = ordered_json::array();
    for (const auto& e : t.entries) {
        ordered_json j;
        j["lambda"] = encode(e.lambda);
        j["mu"] = encode(e.mu);
        if (t.marginal)
            j["l"] = e.l;
        else
            j["nu"] = encode(e.nu);
        for (const auto& [k, v] : e.values.items())
            j[k] = v;
        entries.push_back(std::move(j));
    }
    doc["entries"] = std::move(entries);
    return doc.dump(1) + "\n";
}

std::string render_csv(const TableData& t) {
    std::ostringstream out;
    out << "lambda,mu," << (t.marginal ? "l" : "nu");
    for (const auto& h : t.value_headers)
        out << "," << h;
    out << "\n";
    for (const auto& e : t.entries) {
        out << csv_field(encode(e.lambda)) << "," << csv_field(encode(e.mu)) << ","
            << (t.marginal ? std::to_string(e.l) : csv_field(encode(e.nu)));
        for (const auto& c : e.cells)
            out << "," << csv_field(c);
        out << "\n";
    }
    return out.str();
}

std::string render_latex(const TableData& t) {
    std::ostringstream out;
    const std::size_t cols = 3 + t.value_headers.size();
    out << "\\begin{tabular}{|" ;
    for (std::size_t i = 0; i < cols; ++i)
        out << "c|";
    out << "}\n\\hline\n$\\lambda$ & $\\mu$ & " << (t.marginal ? "$l$" : "$\\nu$") << " & $" << t.latex_symbol << "$";
    if (t.value_headers.size() > 1)
        out << " & $\\frac{z_\\lambda}{n} " << t.latex_symbol << "$";
    out << " \\\\ \\hline\n";
    for (const auto& e : t.entries) {
        out << "$" << latex_partition(e.lambda) << "$ & $" << latex_partition(e.mu) << "$ & $"
            << (t.marginal ? std::to_string(e.l) : latex_partition(e.nu)) << "$";
        for (const auto& c : e.cells)
            out << " & $" << c << "$";
        out << " \\\\ \\hline\n";
    }
    out << "\\end{tabular}\n";
    return out.str();
}

std::string basis_symbol(const std::string& basis, const char* index) {
    if (basis.empty())
        return std::string(index);
    return "\\mathfrak{" + basis + "}_" + index;
}

ordered_json integer_json(const BigInt& x) {
    if (x.fits_slong_p())
        return x.get_si();
    return x.get_str();
}

} // namespace

std::string emit_table(int n, TableKind kind, Format format) {
    const TableData t = collect(n, kind);
    switch (format) {
    case Format::Json:
        return render_json(t);
    case Format::Csv:
        return render_csv(t);
    case Format::Latex:
        return render_latex(t);
    case Format::Text:
        break;
    }
    if (format == Format::Text)
        throw std::invalid_argument("tables are emitted as json, csv or latex");
    throw std::logic_error("unreachable format");
}

std::string emit_matrix(const LabeledMatrix& m, Format format) {
    switch (format) {
    case Format::Json: {
        ordered_json doc;
        doc["name"] = m.name;
        doc["row_basis"] = m.row_header;
        doc["col_basis"] = m.col_header;
        ordered_json rows = ordered_json::array(), cols = ordered_json::array();
        for (const auto& p : m.rows)
            rows.push_back(encode(p));
        for (const auto& p : m.cols)
            cols.push_back(encode(p));
        doc["rows"] = std::move(rows);
        doc["cols"] = std::move(cols);
        ordered_json entries = ordered_json::array();
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            ordered_json row = ordered_json::array();
            for (std::size_t j = 0; j < m.cols.size(); ++j)
                row.push_back(integer_json(m.entries(i, j)));
            entries.push_back(std::move(row));
        }
        doc["entries"] = std::move(entries);
        return doc.dump() + "\n";
    }
    case Format::Csv: {
        std::ostringstream out;
        out << csv_field(m.row_header + "\\" + m.col_header);
        for (const auto& p : m.cols)
            out << "," << csv_field(encode(p));
        out << "\n";
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            out << csv_field(encode(m.rows[i]));
            for (std::size_t j = 0; j < m.cols.size(); ++j)
                out << "," << m.entries(i, j).get_str();
            out << "\n";
        }
        return out.str();
    }
    case Format::Latex: {
        const char* row_index = m.row_header == "m" ? "\\mu" : m.row_header == "g" ? "\\pi" : "\\lambda";
        const char* col_index = m.col_header == "g" ? "\\pi" : m.col_header == "f" ? "\\lambda" : "\\rho";
        std::ostringstream out;
        out << "\\begin{tabular}{|c|";
        for (std::size_t j = 0; j < m.cols.size(); ++j)
            out << "c|";
        out << "}\n\\hline\n$" << basis_symbol(m.row_header, row_index) << "$ $\\backslash$ $"
            << basis_symbol(m.col_header, col_index) << "$";
        for (const auto& p : m.cols)
            out << " & $" << latex_partition(p) << "$";
        out << " \\\\ \\hline\n";
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            out << "$" << latex_partition(m.rows[i]) << "$";
            for (std::size_t j = 0; j < m.cols.size(); ++j)
                out << " & " << m.entries(i, j).get_str();
            out << " \\\\ \\hline\n";
        }
        out << "\\end{tabular}\n";
        return out.str();
    }
    case Format::Text: {
        std::vector<std::vector<std::string>> cells(m.rows.size() + 1);
        cells[0].push_back(m.name + " " + m.row_header + "\\" + m.col_header);
        for (const auto& p : m.cols)
            cells[0].push_back(encode(p));
        for (std::size_t i = 0; i < m.rows.size(); ++i) {
            cells[i + 1].push_back(encode(m.rows[i]));
            for (std::size_t j = 0; j < m.cols.size(); ++j)
                cells[i + 1].push_back(m.entries(i, j).get_str());
        }
        std::vector<std::size_t> width(m.cols.size() + 1, 0);
        for (const auto& row : cells)
            for (std::size_t j = 0; j < row.size(); ++j)
                width[j] = std::max(width[j], row[j].size());
        std::ostringstream out;
        for (const auto& row : cells) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j > 0)
                    out << "  ";
                out << std::string(width[j] - row[j].size(), ' ') << row[j];
            }
            out << "\n";
        }
        return out.str();
    }
    }
    throw std::logic_error("unreachable format");
}

} // namespace mjack
