#pragma once

/// JSON serialization. Documents are canonical: fixed key order, numbers at
/// 12 significant digits, the zero element encoded as the string "zero", so
/// serialize -> parse -> serialize is byte-identical.
///
/// Matrix document: {"tag": <semifield>, "rows": n, "cols": m,
///                   "data": [[...], ...]}.
/// Problem document: {"tag": ..., "A": <matrix or nested array>,
///                    "p": [...], "q": [...]} (plus "x" for evaluation).
/// Vectors embedded in documents are plain arrays in the enclosing tag.

#include <optional>
#include <string>
#include <string_view>

#include "tropt/inequalities.hpp"
#include "tropt/linalg.hpp"
#include "tropt/solver.hpp"
#include "tropt/spectral.hpp"
#include "tropt/structure.hpp"

namespace tropt::io {

struct EvalInput {
    Problem problem;
    Vector x;
};

struct IneqInput {
    Matrix a;
    Vector rhs;
};

/// Parsers throw ParseError on syntax, schema, tag or carrier violations.
/// expect_tag, when set, must match the document's embedded tag.
Matrix parse_matrix(std::string_view text, std::optional<SemifieldTag> expect_tag = {});
Problem parse_problem(std::string_view text, std::optional<SemifieldTag> expect_tag = {});
EvalInput parse_eval(std::string_view text, std::optional<SemifieldTag> expect_tag = {});
/// rhs_key is "d" for the upper problem and "b" for the fixed-point one.
IneqInput parse_ineq(std::string_view text, const std::string& rhs_key,
                     std::optional<SemifieldTag> expect_tag = {});

std::string write_matrix(const Matrix& m);
std::string write_solution(const SolutionSet& s, const NormalForm* nf = nullptr);
std::string write_spectral(const Semifield& sf, const SpectralResult& r,
                           const NormalForm* nf = nullptr);
std::string write_upper(const Semifield& sf, const UpperSolution& s);
std::string write_cone(const ConeSolution& s, const NormalForm* nf = nullptr);
std::string write_no_regular_solution();
std::string write_eval(const Semifield& sf, double value);
std::string write_verify(const Semifield& sf, double mu, double grid_value, const Vector& argmin);

/// Re-emit arbitrary JSON in canonical form (used by round-trip checks).
std::string canonicalize(std::string_view text);

/// 12-significant-digit number formatting used across all documents.
std::string format_number(double v);

} // namespace tropt::io
