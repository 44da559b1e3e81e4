#include "framered/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "framered/errors.hpp"

namespace framered {

std::string format_double(double v) {
  if (!std::isfinite(v)) throw Error("refusing to serialize a non-finite value");
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", v);
  return buffer;
}

void JsonWriter::separate() {
  if (need_comma_) out_.push_back(',');
  need_comma_ = false;
}

JsonWriter& JsonWriter::begin_object() {
  separate();
  out_.push_back('{');
  return *this;
}

JsonWriter& JsonWriter::end_object() {
  out_.push_back('}');
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::begin_array() {
  separate();
  out_.push_back('[');
  return *this;
}

JsonWriter& JsonWriter::end_array() {
  out_.push_back(']');
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::key(const std::string& name) {
  separate();
  out_.push_back('"');
  out_ += name;
  out_ += "\":";
  return *this;
}

JsonWriter& JsonWriter::value(double v) {
  separate();
  out_ += format_double(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(bool v) {
  separate();
  out_ += v ? "true" : "false";
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(std::size_t v) {
  separate();
  out_ += std::to_string(v);
  need_comma_ = true;
  return *this;
}

JsonWriter& JsonWriter::value(const std::string& v) {
  separate();
  out_.push_back('"');
  out_ += v;  // keys and enum-like strings only; no escaping needed
  out_.push_back('"');
  need_comma_ = true;
  return *this;
}

namespace {

using nlohmann::json;

double number_or_throw(const json& j, const char* where) {
  if (!j.is_number())
    throw ParseError(std::string("expected a number in ") + where);
  return j.get<double>();
}

}  // namespace

AnyFrame read_frame_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("frame document must be an object");
  if (!doc.contains("field") || !doc["field"].is_string())
    throw ParseError("missing string key 'field'");
  const std::string field = doc["field"].get<std::string>();
  if (field != "real" && field != "complex")
    throw ParseError("'field' must be 'real' or 'complex'");
  if (!doc.contains("dim") || !doc["dim"].is_number_unsigned())
    throw ParseError("missing unsigned key 'dim'");
  const std::size_t dim = doc["dim"].get<std::size_t>();
  if (dim == 0) throw ParseError("'dim' must be at least 1");
  if (!doc.contains("vectors") || !doc["vectors"].is_array() ||
      doc["vectors"].empty())
    throw ParseError("missing nonempty array 'vectors'");

  if (field == "real") {
    std::vector<Vec<double>> vectors;
    for (const json& row : doc["vectors"]) {
      if (!row.is_array() || row.size() != dim)
        throw ParseError("ragged or non-array vector row");
      Vec<double> v;
      v.reserve(dim);
      for (const json& entry : row)
        v.push_back(number_or_throw(entry, "a real vector"));
      vectors.push_back(std::move(v));
    }
    return RealFrame(std::move(vectors), dim);
  }

  std::vector<Vec<cplx>> vectors;
  for (const json& row : doc["vectors"]) {
    if (!row.is_array() || row.size() != dim)
      throw ParseError("ragged or non-array vector row");
    Vec<cplx> v;
    v.reserve(dim);
    for (const json& entry : row) {
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("complex entries must be [re, im] pairs");
      v.emplace_back(number_or_throw(entry[0], "a complex entry"),
                     number_or_throw(entry[1], "a complex entry"));
    }
    vectors.push_back(std::move(v));
  }
  return ComplexFrame(std::move(vectors), dim);
}

AnyFrame read_frame_csv(const std::string& text) {
  std::vector<Vec<double>> vectors;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Vec<double> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      try {
        std::size_t used = 0;
        const double v = std::stod(cell, &used);
        while (used < cell.size() &&
               (cell[used] == ' ' || cell[used] == '\t' || cell[used] == '\r'))
          ++used;
        if (used != cell.size()) throw std::invalid_argument(cell);
        row.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("invalid CSV number: '" + cell + "'");
      }
    }
    if (row.empty()) throw ParseError("empty CSV row");
    if (!vectors.empty() && row.size() != vectors.front().size())
      throw ParseError("ragged CSV rows");
    vectors.push_back(std::move(row));
  }
  if (vectors.empty()) throw ParseError("CSV input holds no vectors");
  const std::size_t dim = vectors.front().size();
  return RealFrame(std::move(vectors), dim);
}

template <Scalar T>
std::string write_frame_json(const Frame<T>& f) {
  JsonWriter w;
  w.begin_object();
  w.key("field").value(
      std::string(f.field() == Field::real ? "real" : "complex"));
  w.key("dim").value(f.dim());
  w.key("vectors").begin_array();
  for (std::size_t i = 0; i < f.size(); ++i) {
    w.begin_array();
    for (const T& entry : f.vector(i)) {
      if constexpr (std::is_same_v<T, double>) {
        w.value(entry);
      } else {
        w.begin_array();
        w.value(entry.real());
        w.value(entry.imag());
        w.end_array();
      }
    }
    w.end_array();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string write_report_json(const RedundancyReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("lower").value(report.lower);
  w.key("upper").value(report.upper);
  w.key("spectrum").begin_array();
  for (double v : report.spectrum) w.value(v);
  w.end_array();
  w.key("uniform").value(report.uniform);
  w.key("nonzero_count").value(report.nonzero_count);
  w.end_object();
  return w.str();
}

std::string write_partition_json(const IndexPartition& partition) {
  JsonWriter w;
  w.begin_object();
  w.key("kind").value(std::string(partition.kind == PartitionKind::independent
                                      ? "independent"
                                      : "spanning"));
  w.key("blocks").begin_array();
  for (const auto& block : partition.blocks) {
    w.begin_array();
    for (std::size_t idx : block) w.value(idx);
    w.end_array();
  }
  w.end_array();
  w.key("covered").value(partition.covered);
  w.end_object();
  return w.str();
}

template std::string write_frame_json<double>(const Frame<double>&);
template std::string write_frame_json<cplx>(const Frame<cplx>&);

}  // namespace framered
