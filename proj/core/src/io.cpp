#include "tropt/io.hpp"

#include <cinttypes>
#include <cmath>
#include <cstdio>

#include <json.hpp>

namespace tropt::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_integer(std::int64_t v) { return std::to_string(v); }

void dump(const ordered_json& j, std::string& out) {
    switch (j.type()) {
        case ordered_json::value_t::object: {
            out += '{';
            bool first = true;
            for (const auto& [key, value] : j.items()) {
                if (!first) out += ',';
                first = false;
                out += '"';
                out += key; // keys are plain identifiers, no escaping needed
                out += "\":";
                dump(value, out);
            }
            out += '}';
            break;
        }
        case ordered_json::value_t::array: {
            out += '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i > 0) out += ',';
                dump(j[i], out);
            }
            out += ']';
            break;
        }
        case ordered_json::value_t::string: {
            out += '"';
            for (char c : j.get_ref<const std::string&>()) {
                switch (c) {
                    case '"': out += "\\\""; break;
                    case '\\': out += "\\\\"; break;
                    case '\n': out += "\\n"; break;
                    case '\t': out += "\\t"; break;
                    case '\r': out += "\\r"; break;
                    default: out += c;
                }
            }
            out += '"';
            break;
        }
        case ordered_json::value_t::number_float:
            out += format_number(j.get<double>());
            break;
        case ordered_json::value_t::number_integer:
            out += format_integer(j.get<std::int64_t>());
            break;
        case ordered_json::value_t::number_unsigned:
            out += format_integer(static_cast<std::int64_t>(j.get<std::uint64_t>()));
            break;
        case ordered_json::value_t::boolean:
            out += j.get<bool>() ? "true" : "false";
            break;
        default:
            out += "null";
            break;
    }
}

std::string dump(const ordered_json& j) {
    std::string out;
    dump(j, out);
    return out;
}

ordered_json scalar_json(const Semifield& sf, double v) {
    if (sf.is_zero(v)) return "zero";
    if (!std::isfinite(v)) throw InternalError("serializing a non-finite, non-zero scalar");
    return v;
}

ordered_json vector_json(const Semifield& sf, const Vector& x) {
    ordered_json out = ordered_json::array();
    for (std::size_t i = 0; i < x.size(); ++i) out.push_back(scalar_json(sf, x[i]));
    return out;
}

ordered_json matrix_json(const Matrix& m) {
    ordered_json data = ordered_json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(scalar_json(m.semifield(), m(i, j)));
        data.push_back(std::move(row));
    }
    ordered_json out;
    out["tag"] = tag_name(m.semifield().tag());
    out["rows"] = m.rows();
    out["cols"] = m.cols();
    out["data"] = std::move(data);
    return out;
}

ordered_json normal_form_json(const NormalForm& nf) {
    ordered_json out;
    out["permutation"] = nf.permutation;
    out["block_sizes"] = nf.block_sizes;
    return out;
}

ordered_json parse_text(std::string_view text) {
    ordered_json j = ordered_json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON");
    return j;
}

double parse_scalar(const Semifield& sf, const ordered_json& j) {
    if (j.is_string()) {
        if (j.get_ref<const std::string&>() == "zero") return sf.zero();
        throw ParseError("scalar must be a number or the string \"zero\"");
    }
    if (!j.is_number()) throw ParseError("scalar must be a number or the string \"zero\"");
    const double v = j.get<double>();
    if (!sf.in_carrier(v))
        throw ParseError("scalar " + format_number(v) + " is outside the " +
                         tag_name(sf.tag()) + " carrier");
    return v;
}

Vector parse_vector(const Semifield& sf, const ordered_json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("vector must be a non-empty array");
    std::vector<double> entries;
    entries.reserve(j.size());
    for (const auto& e : j) entries.push_back(parse_scalar(sf, e));
    return Vector(sf, std::move(entries));
}

Semifield parse_tag_field(const ordered_json& j, std::optional<SemifieldTag> expect_tag) {
    if (!j.is_object() || !j.contains("tag") || !j["tag"].is_string())
        throw ParseError("document must be an object with a string \"tag\"");
    const SemifieldTag tag = tag_from_name(j["tag"].get<std::string>());
    if (expect_tag && *expect_tag != tag)
        throw ParseError("document tag \"" + tag_name(tag) + "\" disagrees with requested \"" +
                         tag_name(*expect_tag) + "\"");
    return Semifield(tag);
}

Matrix parse_matrix_object(const Semifield& sf, const ordered_json& j) {
    if (j.is_array()) {
        // Nested-array form; the tag comes from the enclosing document.
        if (j.empty()) throw ParseError("matrix must have at least one row");
        std::vector<std::vector<double>> rows;
        rows.reserve(j.size());
        for (const auto& row : j) {
            if (!row.is_array()) throw ParseError("matrix rows must be arrays");
            std::vector<double> r;
            r.reserve(row.size());
            for (const auto& e : row) r.push_back(parse_scalar(sf, e));
            rows.push_back(std::move(r));
        }
        try {
            return Matrix(sf, rows);
        } catch (const DimensionError& e) {
            throw ParseError(e.what());
        }
    }
    if (!j.is_object()) throw ParseError("matrix must be an object or a nested array");
    const Semifield inner = parse_tag_field(j, sf.tag());
    if (!j.contains("rows") || !j.contains("cols") || !j.contains("data"))
        throw ParseError("matrix object needs \"rows\", \"cols\" and \"data\"");
    if (!j["rows"].is_number_unsigned() || !j["cols"].is_number_unsigned())
        throw ParseError("matrix \"rows\" and \"cols\" must be non-negative integers");
    const auto rows = j["rows"].get<std::size_t>();
    const auto cols = j["cols"].get<std::size_t>();
    const Matrix m = parse_matrix_object(inner, j["data"]);
    if (m.rows() != rows || m.cols() != cols)
        throw ParseError("matrix data does not match the declared shape");
    return m;
}

} // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

Matrix parse_matrix(std::string_view text, std::optional<SemifieldTag> expect_tag) {
    const ordered_json j = parse_text(text);
    const Semifield sf = parse_tag_field(j, expect_tag);
    return parse_matrix_object(sf, j);
}

Problem parse_problem(std::string_view text, std::optional<SemifieldTag> expect_tag) {
    const ordered_json j = parse_text(text);
    const Semifield sf = parse_tag_field(j, expect_tag);
    for (const char* key : {"A", "p", "q"})
        if (!j.contains(key)) throw ParseError(std::string("problem needs \"") + key + "\"");
    try {
        return Problem(parse_matrix_object(sf, j["A"]), parse_vector(sf, j["p"]),
                       parse_vector(sf, j["q"]));
    } catch (const DimensionError& e) {
        throw ParseError(e.what());
    }
}

EvalInput parse_eval(std::string_view text, std::optional<SemifieldTag> expect_tag) {
    const ordered_json j = parse_text(text);
    const Semifield sf = parse_tag_field(j, expect_tag);
    if (!j.contains("x")) throw ParseError("evaluation input needs \"x\"");
    Problem problem = parse_problem(text, expect_tag);
    Vector x = parse_vector(sf, j["x"]);
    if (x.size() != problem.size()) throw ParseError("\"x\" length must match the problem order");
    return EvalInput{std::move(problem), std::move(x)};
}

IneqInput parse_ineq(std::string_view text, const std::string& rhs_key,
                     std::optional<SemifieldTag> expect_tag) {
    const ordered_json j = parse_text(text);
    const Semifield sf = parse_tag_field(j, expect_tag);
    if (!j.contains("A") || !j.contains(rhs_key))
        throw ParseError("inequality input needs \"A\" and \"" + rhs_key + "\"");
    Matrix a = parse_matrix_object(sf, j["A"]);
    Vector rhs = parse_vector(sf, j[rhs_key]);
    if (a.rows() != rhs.size())
        throw ParseError("\"" + rhs_key + "\" length must match the rows of A");
    return IneqInput{std::move(a), std::move(rhs)};
}

std::string write_matrix(const Matrix& m) { return dump(matrix_json(m)); }

std::string write_solution(const SolutionSet& s, const NormalForm* nf) {
    ordered_json out;
    out["mu"] = scalar_json(s.sf, s.mu);
    out["lambda"] = scalar_json(s.sf, s.lambda);
    out["delta"] = scalar_json(s.sf, s.delta);
    out["B"] = matrix_json(s.B);
    out["lower"] = vector_json(s.sf, s.lower);
    ordered_json upper;
    upper["support"] = s.upper_support;
    ordered_json values = ordered_json::array();
    for (double v : s.upper_values) values.push_back(scalar_json(s.sf, v));
    upper["values"] = std::move(values);
    out["upper"] = std::move(upper);
    if (nf) out["normal_form"] = normal_form_json(*nf);
    return dump(out);
}

std::string write_spectral(const Semifield& sf, const SpectralResult& r, const NormalForm* nf) {
    ordered_json out;
    out["lambda"] = scalar_json(sf, r.lambda);
    ordered_json blocks = ordered_json::array();
    for (const auto& b : r.per_block) {
        ordered_json entry;
        entry["index"] = b.block;
        entry["lambda"] = scalar_json(sf, b.lambda);
        blocks.push_back(std::move(entry));
    }
    out["blocks"] = std::move(blocks);
    if (nf) out["normal_form"] = normal_form_json(*nf);
    return dump(out);
}

std::string write_upper(const Semifield& sf, const UpperSolution& s) {
    ordered_json out;
    out["bound"] = vector_json(sf, s.bound);
    out["free"] = s.free;
    return dump(out);
}

std::string write_cone(const ConeSolution& s, const NormalForm* nf) {
    ordered_json out;
    out["generator"] = matrix_json(s.generator);
    out["lower"] = vector_json(s.generator.semifield(), s.lower);
    if (nf) out["normal_form"] = normal_form_json(*nf);
    return dump(out);
}

std::string write_no_regular_solution() {
    ordered_json out;
    out["no_regular_solution"] = true;
    return dump(out);
}

std::string write_eval(const Semifield& sf, double value) {
    ordered_json out;
    out["value"] = scalar_json(sf, value);
    return dump(out);
}

std::string write_verify(const Semifield& sf, double mu, double grid_value,
                         const Vector& argmin) {
    ordered_json out;
    out["mu"] = scalar_json(sf, mu);
    out["grid_value"] = scalar_json(sf, grid_value);
    out["gap"] = grid_value - mu;
    out["argmin"] = vector_json(sf, argmin);
    return dump(out);
}

std::string canonicalize(std::string_view text) { return dump(parse_text(text)); }

} // namespace tropt::io
