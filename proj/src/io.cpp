#include "qchsh/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qchsh/errors.hpp"

namespace qchsh::io {

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      row.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorKind::InvalidInput, "matrix must be a non-empty list of rows");
  }
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw Error(ErrorKind::InvalidInput, "matrix row must be a list");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j[r];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw Error(ErrorKind::InvalidInput, "matrix row " + std::to_string(r) + " is ragged");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      const Json& e = row[c];
      if (e.is_number()) {
        m(r, c) = Complex(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
      } else {
        std::ostringstream msg;
        msg << "entry (" << r << "," << c << ") must be [re, im]";
        throw Error(ErrorKind::InvalidInput, msg.str());
      }
    }
  }
  return m;
}

Json vector_to_json(const RealVector& v) {
  Json out = Json::array();
  for (double x : v) out.push_back(x);
  return out;
}

Json real_matrix_to_json(const RealMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) rows.push_back(vector_to_json(m.row(r)));
  return rows;
}

TwoQuditState state_from_json(const Json& j, int expected_dim) {
  if (!j.is_object() || !j.contains("d") || !j.contains("rho")) {
    throw Error(ErrorKind::InvalidInput, "state document needs keys \"d\" and \"rho\"");
  }
  if (!j["d"].is_number_integer()) throw Error(ErrorKind::InvalidInput, "\"d\" must be an integer");
  const int d = j["d"].get<int>();
  if (expected_dim != 0 && expected_dim != d) {
    throw Error(ErrorKind::DimensionMismatch, "state file has d=" + std::to_string(d) +
                                                  " but --dim " + std::to_string(expected_dim) +
                                                  " was requested");
  }
  return validate_state(matrix_from_json(j["rho"]), d);
}

TwoQuditState load_state(const std::filesystem::path& path, int expected_dim) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open state file " + path.string());
  Json j = Json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorKind::InvalidInput, "malformed JSON in " + path.string());
  return state_from_json(j, expected_dim);
}

Json state_to_json(const TwoQuditState& state) {
  return Json{{"d", state.dim}, {"rho", matrix_to_json(state.rho)}};
}

Json basis_to_json(const GellMannBasis& basis) {
  Json ops = Json::array();
  for (const auto& op : basis.operators()) ops.push_back(matrix_to_json(op));
  return Json{{"d", basis.dim()}, {"labels", basis.labels()}, {"operators", std::move(ops)}};
}

Json correlation_to_json(const CorrelationMatrix& t, const GellMannBasis& basis) {
  return Json{{"d", t.dim}, {"labels", basis.labels()}, {"T", real_matrix_to_json(t.entries)}};
}

std::string correlation_to_csv(const CorrelationMatrix& t, const GellMannBasis& basis) {
  std::ostringstream out;
  for (const auto& label : basis.labels()) out << ',' << label;
  out << '\n';
  for (Eigen::Index r = 0; r < t.entries.rows(); ++r) {
    out << basis.label(r);
    for (Eigen::Index c = 0; c < t.entries.cols(); ++c) out << ',' << format_number(t.entries(r, c));
    out << '\n';
  }
  return out.str();
}

Json bounds_to_json(const BoundsReport& report) {
  return Json{{"d", report.dim},
              {"lambda1", report.lambda1},
              {"lambda2", report.lambda2},
              {"lower", report.lower},
              {"upper", report.upper},
              {"tsirelson", report.tsirelson},
              {"upper_improves_tsirelson", report.upper_improves_tsirelson()}};
}

Json settings_to_json(const ChshSettings& s) {
  return Json{{"A1", matrix_to_json(s.a1.matrix)},
              {"A2", matrix_to_json(s.a2.matrix)},
              {"B1", matrix_to_json(s.b1.matrix)},
              {"B2", matrix_to_json(s.b2.matrix)}};
}

std::string format_number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json round_numbers(const Json& j) {
  if (j.is_number_float()) {
    const double x = j.get<double>();
    if (x == 0.0) return 0.0;  // drops the sign of -0
    return std::stod(format_number(x));
  }
  if (j.is_array()) {
    Json out = Json::array();
    for (const auto& e : j) out.push_back(round_numbers(e));
    return out;
  }
  if (j.is_object()) {
    Json out = Json::object();
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = round_numbers(it.value());
    return out;
  }
  return j;
}

std::string dump(const Json& j) { return round_numbers(j).dump(2) + "\n"; }

}  // namespace qchsh::io
