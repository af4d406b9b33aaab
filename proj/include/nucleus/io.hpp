#pragma once

// Text formats. Parsers take the source name only for diagnostics; every
// error is a ParseError naming file, line and field.

#include <string>
#include <string_view>
#include <vector>

#include "nucleus/galois.hpp"
#include "nucleus/legendre.hpp"

namespace nucleus::io {

/// Matrix with row and column labels.
template <class T>
struct LabeledMatrix {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    Profunctor<T> entries;
};

/// `x,value` rows with an optional `x,value` header. Rows may come in any
/// order; duplicate abscissae are rejected.
legendre::SampledFunction parse_function_csv(std::string_view text, const std::string& source,
                                             legendre::Space space = legendre::Space::Primal);
/// Canonical form: header line, rows sorted by x, shortest round-trip numbers.
std::string write_function_csv(const legendre::SampledFunction& f);

/// `x<TAB>value` rows for plotting. Infinite samples are omitted and
/// listed in a trailing comment line.
std::string write_plot_data(const legendre::SampledFunction& f);

/// First row: empty corner cell then column labels; each further row: a
/// label then one cell per column.
LabeledMatrix<ExtReal> parse_extreal_matrix_csv(std::string_view text, const std::string& source);
LabeledMatrix<bool> parse_truth_matrix_csv(std::string_view text, const std::string& source);
std::string write_matrix_csv(const LabeledMatrix<ExtReal>& m);
std::string write_matrix_csv(const LabeledMatrix<bool>& m);

/// Burmeister format: `B`, name line, object count, attribute count, an
/// optional blank line, object names, attribute names, then one row of
/// `X`/`.` per object.
galois::Context parse_cxt(std::string_view text, const std::string& source);
std::string write_cxt(const galois::Context& ctx);

/// 0/1 CSV with header labels, as an alternative to `.cxt`.
galois::Context parse_context_csv(std::string_view text, const std::string& source);

/// Whole-file read; throws ParseError (line 0) if the file cannot be opened.
std::string read_file(const std::string& path);

}  // namespace nucleus::io
