#include "slab/report.hpp"

#include <algorithm>
#include <ctime>
#include <iomanip>
#include <sstream>

namespace slab {

#ifndef SLAB_VERSION
#define SLAB_VERSION "0.0.0"
#endif

std::string_view tool_version() { return SLAB_VERSION; }

Json element_json(const FiniteRing& ring, Element a) {
  return Json{{"index", a.index()}, {"name", ring.name(a)}};
}

Json elements_json(const FiniteRing& ring, const ElementSet& set) {
  return elements_json(ring, set.to_vector());
}

Json elements_json(const FiniteRing& ring, const std::vector<Element>& elems) {
  Json out = Json::array();
  for (Element a : elems) out.push_back(element_json(ring, a));
  return out;
}

namespace {

Json index_list(const std::vector<Element>& elems) {
  Json out = Json::array();
  for (Element a : elems) out.push_back(a.index());
  return out;
}

}  // namespace

Json ideal_json(const Ideal& ideal) {
  const std::vector<Element> gens(ideal.generators().begin(), ideal.generators().end());
  return Json{{"generators", elements_json(ideal.ring(), gens)},
              {"members", index_list(ideal.members().to_vector())},
              {"size", ideal.size()}};
}

Json mult_set_json(const MultSet& s) {
  const std::vector<Element> gens(s.generators().begin(), s.generators().end());
  return Json{{"generators", index_list(gens)},
              {"members", elements_json(s.ring(), s.members())},
              {"contains_zero", s.contains_zero()}};
}

Json witness_json(const FiniteRing& ring, const Witness& w) {
  Json out{{"kind", to_string(w.kind)}};
  if (w.s) out["s"] = element_json(ring, *w.s);
  if (w.exponent) out["exponent"] = *w.exponent;
  if (!w.elements.empty()) out["elements"] = elements_json(ring, w.elements);
  if (w.ideal) out["ideal"] = ideal_json(*w.ideal);
  return out;
}

std::string mult_set_label(const MultSet& s) {
  std::string gens;
  for (Element g : s.generators()) {
    if (!gens.empty()) gens += ",";
    gens += std::to_string(g.index());
  }
  return s.ring().recipe() + " S=<" + (gens.empty() ? "1" : gens) + ">";
}

Report::Report(std::string command)
    : command_(std::move(command)), start_(std::chrono::steady_clock::now()) {}

Record& Report::add(Record record) {
  if (record.expected) record.pass = record.pass && record.verdict == *record.expected;
  records_.push_back(std::move(record));
  return records_.back();
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::ranges::count_if(records_, [](const Record& r) { return r.pass; }));
}

std::size_t Report::failed() const { return records_.size() - passed(); }

void Report::finish() {
  elapsed_ms_ = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
                    .count();
}

Json Report::to_json(bool timestamps) const {
  Json records = Json::array();
  for (const Record& r : records_) {
    Json rec{{"name", r.name}, {"anchor", r.anchor}, {"verdict", r.verdict}};
    rec["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
    rec["pass"] = r.pass;
    rec["witness"] = r.witness.is_null() ? Json::object() : r.witness;
    rec["flags"] = r.flags;
    if (!r.detail.empty()) rec["detail"] = r.detail;
    records.push_back(std::move(rec));
  }
  Json out{{"schema_version", kSchemaVersion},
           {"tool", "slab"},
           {"tool_version", tool_version()},
           {"command", command_},
           {"inputs", inputs_},
           {"records", std::move(records)},
           {"data", data_},
           {"summary",
            {{"records", records_.size()}, {"passed", passed()}, {"failed", failed()},
             {"pass", all_pass()}}}};
  if (timestamps) {
    out["elapsed_ms"] = elapsed_ms_;
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream stamp;
    stamp << std::put_time(&utc, "%Y-%m-%dT%H:%M:%SZ");
    out["generated_at"] = stamp.str();
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream out;
  for (const Record& r : records_) {
    out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << (r.verdict ? "true" : "false");
    if (r.expected) out << " (expected " << (*r.expected ? "true" : "false") << ")";
    if (!r.detail.empty()) out << " - " << r.detail;
    out << '\n';
  }
  out << command_ << ": " << passed() << "/" << records_.size() << " passed\n";
  return out.str();
}

}  // namespace slab
