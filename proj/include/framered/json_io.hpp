#pragma once

#include <string>
#include <variant>

#include "framered/frame.hpp"
#include "framered/partition.hpp"
#include "framered/redundancy.hpp"

namespace framered {

using AnyFrame = std::variant<RealFrame, ComplexFrame>;

// Frame document: {"field": "real"|"complex", "dim": n, "vectors": [[...]]}
// with complex entries written as [re, im] pairs. The reader rejects ragged
// rows; the writer emits numbers with 17 significant digits.
AnyFrame read_frame_json(const std::string& text);

// Plain numeric CSV, one vector per row; real field only.
AnyFrame read_frame_csv(const std::string& text);

template <Scalar T>
std::string write_frame_json(const Frame<T>& f);

std::string write_report_json(const RedundancyReport& report);

std::string write_partition_json(const IndexPartition& partition);

// Minimal append-style JSON emitter shared by the writers and the CLI; all
// floating-point values go out with 17 significant digits.
class JsonWriter {
 public:
  JsonWriter& begin_object();
  JsonWriter& end_object();
  JsonWriter& begin_array();
  JsonWriter& end_array();
  JsonWriter& key(const std::string& name);
  JsonWriter& value(double v);
  JsonWriter& value(bool v);
  JsonWriter& value(std::size_t v);
  JsonWriter& value(const std::string& v);

  const std::string& str() const { return out_; }

 private:
  void separate();

  std::string out_;
  bool need_comma_ = false;
};

std::string format_double(double v);

}  // namespace framered
