#pragma once

// JSON documents for forms, vectors, matrices and kernels.
//
// Complex entries are [re, im] pairs; matrices are row-major arrays of rows.
// Doubles are written in shortest round-trip form, so every emitted document
// re-parses to bit-identical values.

#include <string>

#include "json.hpp"
#include "sesq/sesq.hpp"

namespace sesq::cli {

using json = nlohmann::json;

/// A malformed document. `what()` names the offending field.
class InputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

json complex_to_json(Complex z);
json vector_to_json(const Vector& v);
json matrix_to_json(const Matrix& m);
json tolerances_to_json(const Tolerances& tol);
json form_to_json(const Form& t);
json kernel_to_json(const Kernel& k);

/// `where` prefixes diagnostics, e.g. "t.json: matrix[1][0]".
Complex complex_from_json(const json& j, const std::string& where);
Vector vector_from_json(const json& j, const std::string& where);
Matrix matrix_from_json(const json& j, Index rows, Index cols, const std::string& where);

/// {"dim": n, "matrix": [...]}
Form form_from_json(const json& j, const std::string& where, const Tolerances& tol = {});
/// {"dim": n, "vector": [...]}
Vector vector_document_from_json(const json& j, const std::string& where);
/// {"set_size": m, "block_dim": d, "blocks": [[block, ...], ...], "labels": [...]}
Kernel kernel_from_json(const json& j, const std::string& where, const Tolerances& tol = {});

/// Two-space indented JSON with arrays of scalars kept on one line, so that
/// complex entries read as [re, im]. Deterministic for a given document.
std::string dump_document(const json& j);

/// Reads and parses a JSON file; syntax errors report line and column.
json read_json_file(const std::string& path);

}  // namespace sesq::cli
