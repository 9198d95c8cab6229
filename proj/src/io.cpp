#include "gsp/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace gsp {

namespace {

std::string trim(std::string_view s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

bool skippable(const std::string& line) {
    return line.empty() || line[0] == '#';
}

std::string where(std::string_view what, long line) {
    std::string out(what);
    if (line >= 0) out += " (line " + std::to_string(line) + ")";
    return out;
}

double parse_double_strict(const std::string& s, std::string_view what,
                           long line) {
    if (s.empty()) {
        throw Error(ErrorCode::ParseError, "empty " + where(what, line), {line});
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        throw Error(ErrorCode::ParseError,
                    "cannot read '" + s + "' as a number in " + where(what, line),
                    {line});
    }
    return v;
}

long parse_long_strict(const std::string& s, std::string_view what, long line) {
    if (s.empty()) {
        throw Error(ErrorCode::ParseError, "empty " + where(what, line), {line});
    }
    errno = 0;
    char* end = nullptr;
    const long v = std::strtol(s.c_str(), &end, 10);
    if (end != s.c_str() + s.size() || errno == ERANGE) {
        throw Error(ErrorCode::ParseError,
                    "cannot read '" + s + "' as an integer in " + where(what, line),
                    {line});
    }
    return v;
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> out;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_char(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : line) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

// Negative zero would make otherwise-equal outputs differ by sign bit.
double clean(double v) { return v == 0.0 ? 0.0 : v; }

nlohmann::ordered_json real_rows(const Matrix& m, bool imaginary) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        nlohmann::ordered_json row = nlohmann::ordered_json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            row.push_back(clean(imaginary ? m(r, c).imag() : m(r, c).real()));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

Graph load_graph_edges(std::istream& in) {
    std::string line;
    long lineno = 0;
    long n = -1;
    bool directed = true;
    bool have_header = false;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (skippable(line)) continue;
        const std::vector<std::string> toks = split_ws(line);
        if (!have_header) {
            for (const std::string& t : toks) {
                if (t.rfind("n=", 0) == 0) {
                    n = parse_long_strict(t.substr(2), "graph size", lineno);
                } else if (t.rfind("directed=", 0) == 0) {
                    const std::string v = t.substr(9);
                    if (v == "true") {
                        directed = true;
                    } else if (v == "false") {
                        directed = false;
                    } else {
                        throw Error(ErrorCode::ParseError,
                                    "directed must be true or false " +
                                        where("in the header", lineno),
                                    {lineno});
                    }
                } else {
                    throw Error(ErrorCode::ParseError,
                                "unexpected header token '" + t + "' " +
                                    where("", lineno),
                                {lineno});
                }
            }
            if (n < 0) {
                throw Error(ErrorCode::ParseError,
                            "header must declare n=<count> " + where("", lineno),
                            {lineno});
            }
            have_header = true;
            continue;
        }
        if (toks.size() != 2 && toks.size() != 3) {
            throw Error(ErrorCode::ParseError,
                        "an edge needs 2 or 3 fields " + where("", lineno),
                        {lineno});
        }
        Edge e;
        e.src = parse_long_strict(toks[0], "edge source", lineno);
        e.dst = parse_long_strict(toks[1], "edge target", lineno);
        e.weight = toks.size() == 3
                       ? parse_double_strict(toks[2], "edge weight", lineno)
                       : 1.0;
        edges.push_back(e);
    }
    if (!have_header) {
        throw Error(ErrorCode::ParseError, "missing 'n=<count>' header", {});
    }
    return graph_from_edge_list(n, edges, directed);
}

Graph load_graph_csv(std::istream& in) {
    std::string line;
    long lineno = 0;
    std::vector<std::vector<Complex>> rows;
    std::vector<long> row_lines;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (skippable(line)) continue;
        const std::vector<std::string> toks = split_char(line, ',');
        std::vector<Complex> row;
        row.reserve(toks.size());
        for (const std::string& t : toks) {
            row.push_back(parse_complex_token(t, "matrix entry", lineno));
        }
        rows.push_back(std::move(row));
        row_lines.push_back(lineno);
    }
    const long n = static_cast<long>(rows.size());
    if (n < 2) {
        throw Error(ErrorCode::InvalidSize,
                    "adjacency matrix needs at least 2 rows, found " +
                        std::to_string(n));
    }
    for (long r = 0; r < n; ++r) {
        if (static_cast<long>(rows[static_cast<std::size_t>(r)].size()) != n) {
            throw Error(ErrorCode::DimensionMismatch,
                        "row has " +
                            std::to_string(rows[static_cast<std::size_t>(r)].size()) +
                            " entries but the matrix has " + std::to_string(n) +
                            " rows " + where("", row_lines[static_cast<std::size_t>(r)]),
                        {row_lines[static_cast<std::size_t>(r)]});
        }
    }
    Graph g;
    g.n = n;
    g.adjacency.resize(n, n);
    for (long r = 0; r < n; ++r) {
        for (long c = 0; c < n; ++c) {
            const Complex v = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw Error(ErrorCode::NonFiniteWeight,
                            "adjacency entry is not finite", {r, c});
            }
            g.adjacency(r, c) = v;
        }
    }
    return g;
}

Graph load_graph_json(std::istream& in) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw Error(ErrorCode::ParseError,
                    "graph json must be an object with 'n' and 'edges'");
    }
    if (!j["n"].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "'n' must be an integer");
    }
    const long n = j["n"].get<long>();
    if (!j["edges"].is_array()) {
        throw Error(ErrorCode::ParseError, "'edges' must be an array");
    }
    bool directed = true;
    if (j.contains("directed")) {
        if (!j["directed"].is_boolean()) {
            throw Error(ErrorCode::ParseError, "'directed' must be a boolean");
        }
        directed = j["directed"].get<bool>();
    }
    std::vector<Edge> edges;
    long idx = 0;
    for (const auto& item : j["edges"]) {
        if (!item.is_array() || item.size() < 2 || item.size() > 3 ||
            !item[0].is_number_integer() || !item[1].is_number_integer() ||
            (item.size() == 3 && !item[2].is_number())) {
            throw Error(ErrorCode::ParseError,
                        "edge " + std::to_string(idx) +
                            " must be [src, dst] or [src, dst, weight]",
                        {idx});
        }
        Edge e;
        e.src = item[0].get<long>();
        e.dst = item[1].get<long>();
        e.weight = item.size() == 3 ? item[2].get<double>() : 1.0;
        edges.push_back(e);
        ++idx;
    }
    return graph_from_edge_list(n, edges, directed);
}

// Real weights of every stored connection, enumerated src-major. Formats
// without a complex weight syntax reject graphs that need one.
std::vector<Edge> enumerate_real_edges(const Graph& g, std::string_view format) {
    std::vector<Edge> out;
    for (Eigen::Index src = 0; src < g.n; ++src) {
        for (Eigen::Index dst = 0; dst < g.n; ++dst) {
            const Complex w = g.adjacency(dst, src);
            if (w == Complex(0.0, 0.0)) continue;
            if (w.imag() != 0.0) {
                throw Error(ErrorCode::ParseError,
                            std::string("the ") + std::string(format) +
                                " format cannot carry complex weights; use "
                                "matrix-csv",
                            {static_cast<long>(src), static_cast<long>(dst)});
            }
            out.push_back({src, dst, w.real()});
        }
    }
    return out;
}

}  // namespace

GraphFormat graph_format_from_string(std::string_view name) {
    if (name == "edges" || name == "edge-list") return GraphFormat::EdgeList;
    if (name == "csv" || name == "matrix-csv") return GraphFormat::MatrixCsv;
    if (name == "json") return GraphFormat::Json;
    throw Error(ErrorCode::UnknownKind,
                "unknown graph format '" + std::string(name) + "'");
}

std::string format_double(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string format_complex_token(Complex z) {
    if (z.imag() == 0.0) return format_double(z.real());
    std::string out = format_double(z.real());
    out += z.imag() < 0.0 ? '-' : '+';
    out += format_double(std::abs(z.imag()));
    out += 'j';
    return out;
}

Complex parse_complex_token(std::string_view token, std::string_view what,
                            long line) {
    const std::string t = trim(token);
    if (t.empty()) {
        throw Error(ErrorCode::ParseError, "empty " + where(what, line), {line});
    }
    if (t.back() != 'j' && t.back() != 'J') {
        return Complex(parse_double_strict(t, what, line), 0.0);
    }
    const std::string body = t.substr(0, t.size() - 1);
    std::size_t split = std::string::npos;
    for (std::size_t i = 1; i < body.size(); ++i) {
        if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
            body[i - 1] != 'E') {
            split = i;
        }
    }
    if (split == std::string::npos) {
        return Complex(0.0, parse_double_strict(body, what, line));
    }
    const double re = parse_double_strict(body.substr(0, split), what, line);
    const double im = parse_double_strict(body.substr(split), what, line);
    return Complex(re, im);
}

Graph load_graph(std::istream& in, GraphFormat format) {
    switch (format) {
        case GraphFormat::EdgeList: return load_graph_edges(in);
        case GraphFormat::MatrixCsv: return load_graph_csv(in);
        case GraphFormat::Json: return load_graph_json(in);
    }
    throw Error(ErrorCode::InternalError, "unreachable graph format");
}

Graph load_graph_file(const std::string& path, GraphFormat format) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return load_graph(in, format);
}

std::string save_graph(const Graph& g, GraphFormat format) {
    check_graph_invariants(g);
    switch (format) {
        case GraphFormat::EdgeList: {
            std::string out = "n=" + std::to_string(g.n) + " directed=true\n";
            for (const Edge& e : enumerate_real_edges(g, "edge-list")) {
                out += std::to_string(e.src) + " " + std::to_string(e.dst) + " " +
                       format_double(e.weight) + "\n";
            }
            return out;
        }
        case GraphFormat::MatrixCsv: {
            std::string out;
            for (Eigen::Index r = 0; r < g.n; ++r) {
                for (Eigen::Index c = 0; c < g.n; ++c) {
                    if (c) out += ',';
                    out += format_complex_token(g.adjacency(r, c));
                }
                out += '\n';
            }
            return out;
        }
        case GraphFormat::Json: {
            nlohmann::ordered_json j;
            j["n"] = g.n;
            nlohmann::ordered_json edges = nlohmann::ordered_json::array();
            for (const Edge& e : enumerate_real_edges(g, "json")) {
                edges.push_back({e.src, e.dst, clean(e.weight)});
            }
            j["edges"] = std::move(edges);
            return j.dump() + "\n";
        }
    }
    throw Error(ErrorCode::InternalError, "unreachable graph format");
}

Signal load_signal(std::istream& in) {
    std::string line;
    long lineno = 0;
    bool csv_mode = false;
    bool first = true;
    std::vector<Complex> values;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (skippable(line)) continue;
        if (first) {
            first = false;
            if (line == "index,re,im") {
                csv_mode = true;
                continue;
            }
        }
        Complex v;
        if (csv_mode) {
            const std::vector<std::string> toks = split_char(line, ',');
            if (toks.size() != 3) {
                throw Error(ErrorCode::ParseError,
                            "expected index,re,im " + where("", lineno), {lineno});
            }
            const long idx = parse_long_strict(toks[0], "signal index", lineno);
            if (idx != static_cast<long>(values.size())) {
                throw Error(ErrorCode::ParseError,
                            "signal indices must count up from 0 " +
                                where("", lineno),
                            {lineno});
            }
            v = Complex(parse_double_strict(toks[1], "signal value", lineno),
                        parse_double_strict(toks[2], "signal value", lineno));
        } else {
            v = parse_complex_token(line, "signal value", lineno);
        }
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
            throw Error(ErrorCode::NonFiniteWeight,
                        "signal value is not finite",
                        {static_cast<long>(values.size())});
        }
        values.push_back(v);
    }
    if (values.empty()) {
        throw Error(ErrorCode::InvalidSize, "signal is empty");
    }
    Signal x(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        x[static_cast<Eigen::Index>(i)] = values[i];
    }
    return x;
}

Signal load_signal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return load_signal(in);
}

std::string signal_to_csv(const Signal& x) {
    std::string out = "index,re,im\n";
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        out += std::to_string(i) + "," + format_double(clean(x[i].real())) + "," +
               format_double(clean(x[i].imag())) + "\n";
    }
    return out;
}

Eigen::VectorXd load_points(std::istream& in) {
    std::string line;
    long lineno = 0;
    std::vector<double> values;
    while (std::getline(in, line)) {
        ++lineno;
        line = trim(line);
        if (skippable(line)) continue;
        values.push_back(parse_double_strict(line, "sample point", lineno));
    }
    if (values.empty()) {
        throw Error(ErrorCode::InvalidSize, "sample point list is empty");
    }
    Eigen::VectorXd p(static_cast<Eigen::Index>(values.size()));
    for (std::size_t i = 0; i < values.size(); ++i) {
        p[static_cast<Eigen::Index>(i)] = values[i];
    }
    return p;
}

Eigen::VectorXd load_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open '" + path + "'");
    }
    return load_points(in);
}

nlohmann::ordered_json matrix_to_json(const Matrix& m) {
    nlohmann::ordered_json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["re"] = real_rows(m, false);
    j["im"] = real_rows(m, true);
    return j;
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") ||
        !j.contains("re") || !j.contains("im")) {
        throw Error(ErrorCode::ParseError,
                    "matrix json must carry rows, cols, re, im");
    }
    if (!j["rows"].is_number_integer() || !j["cols"].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "rows and cols must be integers");
    }
    const long rows = j["rows"].get<long>();
    const long cols = j["cols"].get<long>();
    if (rows < 0 || cols < 0) {
        throw Error(ErrorCode::InvalidSize, "matrix dimensions must be nonnegative");
    }
    Matrix m(rows, cols);
    for (const char* key : {"re", "im"}) {
        const auto& part = j[key];
        if (!part.is_array() || static_cast<long>(part.size()) != rows) {
            throw Error(ErrorCode::DimensionMismatch,
                        std::string("'") + key + "' must have one row per matrix row");
        }
        for (long r = 0; r < rows; ++r) {
            const auto& row = part[static_cast<std::size_t>(r)];
            if (!row.is_array() || static_cast<long>(row.size()) != cols) {
                throw Error(ErrorCode::DimensionMismatch,
                            std::string("'") + key + "' row " + std::to_string(r) +
                                " must have " + std::to_string(cols) + " entries",
                            {r});
            }
            for (long c = 0; c < cols; ++c) {
                const auto& cell = row[static_cast<std::size_t>(c)];
                if (!cell.is_number()) {
                    throw Error(ErrorCode::ParseError,
                                std::string("'") + key + "' entries must be numbers",
                                {r, c});
                }
                const double v = cell.get<double>();
                if (key[0] == 'r') {
                    m(r, c) = Complex(v, 0.0);
                } else {
                    m(r, c) += Complex(0.0, v);
                }
            }
        }
    }
    return m;
}

std::string matrix_part_to_csv(const Matrix& m, bool imaginary) {
    std::string out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            if (c) out += ',';
            out += format_double(
                clean(imaginary ? m(r, c).imag() : m(r, c).real()));
        }
        out += '\n';
    }
    return out;
}

nlohmann::ordered_json spectrum_report_json(const OrderedSpectrum& s) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json omegas = nlohmann::ordered_json::array();
    nlohmann::ordered_json mags = nlohmann::ordered_json::array();
    nlohmann::ordered_json perm = nlohmann::ordered_json::array();
    for (Eigen::Index i = 0; i < s.grid.omegas.size(); ++i) {
        omegas.push_back(clean(s.grid.omegas[i]));
        mags.push_back(clean(s.magnitudes[i]));
        perm.push_back(static_cast<long>(s.grid.permutation[static_cast<std::size_t>(i)]));
    }
    j["omegas"] = std::move(omegas);
    j["r"] = std::move(mags);
    j["permutation"] = std::move(perm);
    return j;
}

}  // namespace gsp
