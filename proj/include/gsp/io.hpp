#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

#include "gsp/duality.hpp"
#include "gsp/gft.hpp"
#include "gsp/graph.hpp"

namespace gsp {

enum class GraphFormat { EdgeList, MatrixCsv, Json };

GraphFormat graph_format_from_string(std::string_view name);

/// Round-trip exact decimal text: up to 17 significant digits, lowercase
/// exponent, no negative zero.
std::string format_double(double v);

/// "re" for real values, "re+imj" / "re-imj" otherwise.
std::string format_complex_token(Complex z);

/// Inverse of format_complex_token. what/line feed the ParseError message.
Complex parse_complex_token(std::string_view token, std::string_view what,
                            long line);

Graph load_graph(std::istream& in, GraphFormat format);
Graph load_graph_file(const std::string& path, GraphFormat format);
std::string save_graph(const Graph& g, GraphFormat format);

/// One complex value per line ("re" or "re+imj"), or index,re,im CSV with
/// header; '#' comments and blank lines are skipped.
Signal load_signal(std::istream& in);
Signal load_signal_file(const std::string& path);
std::string signal_to_csv(const Signal& x);

/// One real per line; '#' comments and blank lines are skipped.
Eigen::VectorXd load_points(std::istream& in);
Eigen::VectorXd load_points_file(const std::string& path);

nlohmann::ordered_json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

/// CSV of the real or imaginary parts, one matrix row per line.
std::string matrix_part_to_csv(const Matrix& m, bool imaginary);

/// {"omegas": [...], "r": [...], "permutation": [...]}
nlohmann::ordered_json spectrum_report_json(const OrderedSpectrum& s);

}  // namespace gsp
