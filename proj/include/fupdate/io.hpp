#pragma once

// On-disk formats. Field elements are always written as integer indices.
//
// ProblemFile (JSON):
//   {"field": {"p": 2, "k": 2, "modulus": [1, 1, 1]},   // constant term first
//    "epsilon": 1,
//    "A": [[...], ...],
//    "striped": {"a": 4, "C": [[1, 1, 1]]}}              // optional
// "A" may be omitted when "striped" is present. For k = 1 the modulus is
// optional; for k > 1 it defaults to the first primitive polynomial.
//
// MatrixFile (text): "rows cols q" then rows*cols whitespace-separated
// indices, one matrix row per line. A vector is a 1 x n MatrixFile.

#include "fupdate/fic.hpp"
#include "fupdate/problem.hpp"

#include <filesystem>
#include <string>

namespace fupdate {

/// Throws ParseError (including for rank-deficient A).
FunctionUpdateProblem parse_problem(const std::string& text);
std::string serialize_problem(const FunctionUpdateProblem& p);
FunctionUpdateProblem load_problem(const std::filesystem::path& path);
void save_problem(const std::filesystem::path& path, const FunctionUpdateProblem& p);

/// Throws ParseError when the header's q differs from `field`.
Matrix parse_matrix(const std::string& text, const FieldPtr& field);
/// Field taken from the header via Field::standard(q).
Matrix parse_matrix(const std::string& text);
std::string serialize_matrix(const Matrix& m);
Matrix load_matrix(const std::filesystem::path& path, const FieldPtr& field);
Matrix load_matrix(const std::filesystem::path& path);
void save_matrix(const std::filesystem::path& path, const Matrix& m);

Vector parse_vector(const std::string& text, const FieldPtr& field);
std::string serialize_vector(const FieldPtr& field, std::span<const Elem> v);
Vector load_vector(const std::filesystem::path& path, const FieldPtr& field);

/// Field descriptor as written in ProblemFiles; fields must be GF(p) or a
/// single extension of GF(p).
std::string serialize_field(const FieldPtr& field);

/// JSON listing the users with 1-based side-information sets. A demand
/// matrix shared by every user is written once under "A".
std::string export_fic(const FICProblem& f);

std::string read_text(const std::filesystem::path& path);

} // namespace fupdate
