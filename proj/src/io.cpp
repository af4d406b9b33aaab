#include "nucleus/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace nucleus::io {

namespace {

struct Line {
    std::size_t number;
    std::string_view text;
};

std::vector<Line> split_lines(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 1;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back({number++, line});
        if (nl == std::string_view::npos) break;
        text.remove_prefix(nl + 1);
    }
    return lines;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    for (;;) {
        const std::size_t comma = line.find(',');
        out.push_back(trim(line.substr(0, comma)));
        if (comma == std::string_view::npos) break;
        line.remove_prefix(comma + 1);
    }
    return out;
}

bool is_blank(std::string_view s) { return trim(s).empty(); }

ExtReal parse_cell(std::string_view cell, const std::string& source, std::size_t line, const std::string& field) {
    try {
        return parse_extreal(cell);
    } catch (const std::invalid_argument& e) {
        throw ParseError(source, line, field, e.what());
    }
}

bool parse_truth_cell(std::string_view cell, const std::string& source, std::size_t line, const std::string& field) {
    if (cell == "1" || cell == "X" || cell == "x") return true;
    if (cell == "0" || cell == ".") return false;
    throw ParseError(source, line, field, "expected 0 or 1, got '" + std::string(cell) + "'");
}

std::size_t parse_count(std::string_view s, const std::string& source, std::size_t line, const std::string& field) {
    s = trim(s);
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw ParseError(source, line, field, "expected a non-negative integer, got '" + std::string(s) + "'");
    }
    return v;
}

template <class T, class CellParser>
LabeledMatrix<T> parse_matrix(std::string_view text, const std::string& source, CellParser parse) {
    std::vector<Line> lines = split_lines(text);
    std::erase_if(lines, [](const Line& l) { return is_blank(l.text); });
    if (lines.empty()) throw ParseError(source, 1, "header", "empty matrix file");

    LabeledMatrix<T> m;
    const auto header = split_fields(lines.front().text);
    if (header.size() < 2) throw ParseError(source, lines.front().number, "header", "no column labels");
    for (std::size_t c = 1; c < header.size(); ++c) m.col_labels.emplace_back(header[c]);

    const auto rows = static_cast<Eigen::Index>(lines.size() - 1);
    const auto cols = static_cast<Eigen::Index>(m.col_labels.size());
    m.entries.resize(rows, cols);
    for (Eigen::Index r = 0; r < rows; ++r) {
        const Line& line = lines[static_cast<std::size_t>(r) + 1];
        const auto fields = split_fields(line.text);
        if (static_cast<Eigen::Index>(fields.size()) != cols + 1) {
            throw ParseError(source, line.number, "row", "expected " + std::to_string(cols + 1) + " fields, got " +
                                                             std::to_string(fields.size()));
        }
        m.row_labels.emplace_back(fields[0]);
        for (Eigen::Index c = 0; c < cols; ++c) {
            m.entries(r, c) = parse(fields[static_cast<std::size_t>(c) + 1], source, line.number,
                                    "column '" + m.col_labels[static_cast<std::size_t>(c)] + "'");
        }
    }
    if (rows == 0) throw ParseError(source, lines.front().number, "row", "matrix has no rows");
    return m;
}

template <class T, class CellWriter>
std::string write_matrix(const LabeledMatrix<T>& m, CellWriter write) {
    std::string out;
    for (const auto& c : m.col_labels) out += "," + c;
    out += "\n";
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        out += m.row_labels[static_cast<std::size_t>(r)];
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) out += "," + write(m.entries(r, c));
        out += "\n";
    }
    return out;
}

}  // namespace

legendre::SampledFunction parse_function_csv(std::string_view text, const std::string& source,
                                             legendre::Space space) {
    std::map<double, ExtReal> samples;
    bool first = true;
    for (const Line& line : split_lines(text)) {
        if (is_blank(line.text) || trim(line.text).front() == '#') continue;
        const auto fields = split_fields(line.text);
        if (fields.size() != 2) {
            throw ParseError(source, line.number, "row", "expected 2 fields (x,value), got " +
                                                             std::to_string(fields.size()));
        }
        if (first && fields[0] == "x") {
            first = false;
            continue;
        }
        first = false;
        const ExtReal x = parse_cell(fields[0], source, line.number, "x");
        if (!x.is_finite()) throw ParseError(source, line.number, "x", "abscissa must be finite");
        const ExtReal v = parse_cell(fields[1], source, line.number, "value");
        if (!samples.emplace(x.value(), v).second) {
            throw ParseError(source, line.number, "x", "duplicate abscissa " + to_string(x));
        }
    }
    if (samples.empty()) throw ParseError(source, 1, "row", "function has no samples");

    std::vector<double> xs;
    Presheaf<ExtReal> values(static_cast<Eigen::Index>(samples.size()));
    for (const auto& [x, v] : samples) {
        values(static_cast<Eigen::Index>(xs.size())) = v;
        xs.push_back(x);
    }
    return legendre::SampledFunction(legendre::Grid(std::move(xs)), std::move(values), space);
}

std::string write_function_csv(const legendre::SampledFunction& f) {
    std::string out = "x,value\n";
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        out += to_string(ExtReal(f.grid[i])) + "," + to_string(f.values(static_cast<Eigen::Index>(i))) + "\n";
    }
    return out;
}

std::string write_plot_data(const legendre::SampledFunction& f) {
    std::string out;
    std::vector<std::string> omitted;
    for (std::size_t i = 0; i < f.grid.size(); ++i) {
        const ExtReal& v = f.values(static_cast<Eigen::Index>(i));
        const std::string x = to_string(ExtReal(f.grid[i]));
        if (v.is_finite()) {
            out += x + "\t" + to_string(v) + "\n";
        } else {
            omitted.push_back(x + "=" + to_string(v));
        }
    }
    if (!omitted.empty()) {
        out += "# omitted " + std::to_string(omitted.size()) + " infinite rows:";
        for (const auto& o : omitted) out += " " + o;
        out += "\n";
    }
    return out;
}

LabeledMatrix<ExtReal> parse_extreal_matrix_csv(std::string_view text, const std::string& source) {
    return parse_matrix<ExtReal>(text, source, parse_cell);
}

LabeledMatrix<bool> parse_truth_matrix_csv(std::string_view text, const std::string& source) {
    return parse_matrix<bool>(text, source, parse_truth_cell);
}

std::string write_matrix_csv(const LabeledMatrix<ExtReal>& m) {
    return write_matrix(m, [](const ExtReal& x) { return to_string(x); });
}

std::string write_matrix_csv(const LabeledMatrix<bool>& m) {
    return write_matrix(m, [](bool b) { return std::string(b ? "1" : "0"); });
}

galois::Context parse_cxt(std::string_view text, const std::string& source) {
    const std::vector<Line> lines = split_lines(text);
    std::size_t pos = 0;
    auto next = [&](const char* field) -> const Line& {
        if (pos >= lines.size()) {
            throw ParseError(source, lines.empty() ? 1 : lines.back().number + 1, field, "unexpected end of file");
        }
        return lines[pos++];
    };

    const Line& magic = next("header");
    if (trim(magic.text) != "B") throw ParseError(source, magic.number, "header", "expected 'B'");
    const std::string name(trim(next("name").text));
    const Line& n_line = next("object count");
    const std::size_t n = parse_count(n_line.text, source, n_line.number, "object count");
    const Line& m_line = next("attribute count");
    const std::size_t m = parse_count(m_line.text, source, m_line.number, "attribute count");
    if (pos < lines.size() && is_blank(lines[pos].text)) ++pos;

    std::vector<std::string> objects;
    std::vector<std::string> attributes;
    for (std::size_t i = 0; i < n; ++i) objects.emplace_back(trim(next("object name").text));
    for (std::size_t j = 0; j < m; ++j) attributes.emplace_back(trim(next("attribute name").text));

    Profunctor<bool> incidence(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(m));
    for (std::size_t i = 0; i < n; ++i) {
        const Line& row = next("incidence row");
        const std::string_view cells = trim(row.text);
        if (cells.size() != m) {
            throw ParseError(source, row.number, "incidence row", "expected " + std::to_string(m) +
                                                                      " cells, got " + std::to_string(cells.size()));
        }
        for (std::size_t j = 0; j < m; ++j) {
            incidence(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = parse_truth_cell(
                cells.substr(j, 1), source, row.number, "attribute '" + attributes[j] + "'");
        }
    }
    for (; pos < lines.size(); ++pos) {
        if (!is_blank(lines[pos].text)) {
            throw ParseError(source, lines[pos].number, "trailer", "unexpected content after incidence rows");
        }
    }
    try {
        return galois::Context(std::move(objects), std::move(attributes), std::move(incidence), name);
    } catch (const LabelError& e) {
        throw ParseError(source, 5, "labels", e.what());
    }
}

std::string write_cxt(const galois::Context& ctx) {
    std::ostringstream out;
    out << "B\n" << ctx.name() << "\n" << ctx.object_count() << "\n" << ctx.attribute_count() << "\n\n";
    for (const auto& o : ctx.objects()) out << o << "\n";
    for (const auto& a : ctx.attributes()) out << a << "\n";
    for (Eigen::Index i = 0; i < ctx.object_count(); ++i) {
        for (Eigen::Index j = 0; j < ctx.attribute_count(); ++j) out << (ctx.incidence()(i, j) ? 'X' : '.');
        out << "\n";
    }
    return out.str();
}

galois::Context parse_context_csv(std::string_view text, const std::string& source) {
    auto m = parse_truth_matrix_csv(text, source);
    try {
        return galois::Context(std::move(m.row_labels), std::move(m.col_labels), std::move(m.entries));
    } catch (const LabelError& e) {
        throw ParseError(source, 1, "labels", e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path, 0, "file", "cannot open");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace nucleus::io
