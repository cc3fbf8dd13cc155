#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "slab/classify.hpp"
#include "slab/ideal.hpp"
#include "slab/ring.hpp"

namespace slab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;
[[nodiscard]] std::string_view tool_version();

[[nodiscard]] Json element_json(const FiniteRing& ring, Element a);
[[nodiscard]] Json elements_json(const FiniteRing& ring, const ElementSet& set);
[[nodiscard]] Json elements_json(const FiniteRing& ring, const std::vector<Element>& elems);
[[nodiscard]] Json ideal_json(const Ideal& ideal);
[[nodiscard]] Json mult_set_json(const MultSet& s);
[[nodiscard]] Json witness_json(const FiniteRing& ring, const Witness& w);

/// Recipe plus generator indices, e.g. "Z12 S=<2>".
[[nodiscard]] std::string mult_set_label(const MultSet& s);

struct Record {
  std::string name;
  std::string anchor;
  bool verdict = false;
  std::optional<bool> expected;
  bool pass = true;
  Json witness;
  std::vector<std::string> flags;
  std::string detail;
};

class Report {
 public:
  explicit Report(std::string command);

  Json& inputs() { return inputs_; }
  Json& data() { return data_; }
  const Json& data() const { return data_; }

  /// Adds a record. When `expected` is set, pass also requires verdict == expected.
  Record& add(Record record);
  [[nodiscard]] const std::vector<Record>& records() const { return records_; }

  [[nodiscard]] std::size_t passed() const;
  [[nodiscard]] std::size_t failed() const;
  [[nodiscard]] bool all_pass() const { return failed() == 0; }
  [[nodiscard]] int exit_code() const { return all_pass() ? 0 : 1; }

  void finish();
  [[nodiscard]] Json to_json(bool timestamps) const;
  /// One "PASS"/"FAIL" line per record plus a summary line.
  [[nodiscard]] std::string to_text() const;

 private:
  std::string command_;
  Json inputs_ = Json::object();
  Json data_ = Json::object();
  std::vector<Record> records_;
  std::chrono::steady_clock::time_point start_;
  double elapsed_ms_ = 0;
};

}  // namespace slab
