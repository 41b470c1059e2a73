#include "sesq_cli/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace sesq::cli {

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) {
    throw InputError(where + ": expected an object");
  }
  const auto it = j.find(name);
  if (it == j.end()) {
    throw InputError(where + ": missing field \"" + name + "\"");
  }
  return *it;
}

Index positive_integer(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) {
    throw InputError(where + ": expected a positive integer");
  }
  return static_cast<Index>(j.get<long long>());
}

double real(const json& j, const std::string& where) {
  if (!j.is_number()) {
    throw InputError(where + ": expected a number");
  }
  return j.get<double>();
}

std::string at(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

bool all_scalars(const json& j) {
  for (const json& e : j) {
    if (e.is_structured()) {
      return false;
    }
  }
  return true;
}

void dump_into(const json& j, int depth, std::string& out) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  if (j.is_array()) {
    if (j.empty() || all_scalars(j)) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += (i ? ", " : "") + j[i].dump();
      }
      out += ']';
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      dump_into(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close + ']';
  } else if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t i = 0;
    for (const auto& [key, value] : j.items()) {
      out += pad + json(key).dump() + ": ";
      dump_into(value, depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close + '}';
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string dump_document(const json& j) {
  std::string out;
  dump_into(j, 0, out);
  out += '\n';
  return out;
}

// Adding +0.0 maps -0.0 to 0.0 and leaves every other value unchanged.
json complex_to_json(Complex z) { return json::array({z.real() + 0.0, z.imag() + 0.0}); }

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    out.push_back(complex_to_json(v(i)));
  }
  return out;
}

json matrix_to_json(const Matrix& m) {
  json out = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    out.push_back(vector_to_json(m.row(r).transpose()));
  }
  return out;
}

json tolerances_to_json(const Tolerances& tol) {
  return {{"sym", tol.sym}, {"psd", tol.psd}, {"recon", tol.recon}, {"rank", tol.rank}};
}

json form_to_json(const Form& t) { return {{"dim", t.dim()}, {"matrix", matrix_to_json(t.matrix())}}; }

json kernel_to_json(const Kernel& k) {
  json blocks = json::array();
  for (Index s = 0; s < k.set_size(); ++s) {
    json row = json::array();
    for (Index t = 0; t < k.set_size(); ++t) {
      row.push_back(matrix_to_json(k.block(s, t)));
    }
    blocks.push_back(std::move(row));
  }
  json out = {{"set_size", k.set_size()}, {"block_dim", k.block_dim()}, {"blocks", std::move(blocks)}};
  if (!k.labels().empty()) {
    out["labels"] = k.labels();
  }
  return out;
}

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw InputError(where + ": expected [re, im]");
  }
  const Complex z(real(j[0], where + "[0]"), real(j[1], where + "[1]"));
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw InputError(where + ": entry is not finite");
  }
  return z;
}

Vector vector_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) {
    throw InputError(where + ": expected an array");
  }
  Vector v(static_cast<Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Index>(i)) = complex_from_json(j[i], at(where, i));
  }
  return v;
}

Matrix matrix_from_json(const json& j, Index rows, Index cols, const std::string& where) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows) {
    throw InputError(where + ": expected " + std::to_string(rows) + " rows");
  }
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string row_where = at(where, r);
    if (!j[r].is_array() || static_cast<Index>(j[r].size()) != cols) {
      throw InputError(row_where + ": expected " + std::to_string(cols) + " entries");
    }
    for (std::size_t c = 0; c < j[r].size(); ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = complex_from_json(j[r][c], at(row_where, c));
    }
  }
  return m;
}

Form form_from_json(const json& j, const std::string& where, const Tolerances& tol) {
  const Index n = positive_integer(field(j, "dim", where), where + ": dim");
  const Matrix m = matrix_from_json(field(j, "matrix", where), n, n, where + ": matrix");
  try {
    return Form::from_matrix(m, tol);
  } catch (const ValidationError& e) {
    throw InputError(where + ": " + e.what());
  }
}

Vector vector_document_from_json(const json& j, const std::string& where) {
  const Index n = positive_integer(field(j, "dim", where), where + ": dim");
  const Vector v = vector_from_json(field(j, "vector", where), where + ": vector");
  if (v.size() != n) {
    throw InputError(where + ": vector: expected " + std::to_string(n) + " entries");
  }
  return v;
}

Kernel kernel_from_json(const json& j, const std::string& where, const Tolerances& tol) {
  const Index m = positive_integer(field(j, "set_size", where), where + ": set_size");
  const Index d = positive_integer(field(j, "block_dim", where), where + ": block_dim");
  const json& rows = field(j, "blocks", where);
  const std::string blocks_where = where + ": blocks";
  if (!rows.is_array() || static_cast<Index>(rows.size()) != m) {
    throw InputError(blocks_where + ": expected " + std::to_string(m) + " rows of blocks");
  }
  std::vector<Matrix> blocks;
  for (std::size_t s = 0; s < rows.size(); ++s) {
    if (!rows[s].is_array() || static_cast<Index>(rows[s].size()) != m) {
      throw InputError(at(blocks_where, s) + ": expected " + std::to_string(m) + " blocks");
    }
    for (std::size_t t = 0; t < rows[s].size(); ++t) {
      blocks.push_back(matrix_from_json(rows[s][t], d, d, at(at(blocks_where, s), t)));
    }
  }
  std::vector<std::string> labels;
  if (const auto it = j.find("labels"); it != j.end()) {
    if (!it->is_array()) {
      throw InputError(where + ": labels: expected an array of strings");
    }
    for (std::size_t i = 0; i < it->size(); ++i) {
      if (!(*it)[i].is_string()) {
        throw InputError(at(where + ": labels", i) + ": expected a string");
      }
      labels.push_back((*it)[i].get<std::string>());
    }
  }
  try {
    return Kernel::from_blocks(m, d, std::move(blocks), std::move(labels), tol);
  } catch (const ValidationError& e) {
    throw InputError(where + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InputError(path + ": cannot open file");
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

}  // namespace sesq::cli
