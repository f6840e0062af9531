#include "aoi/io.hpp"

#include <limits>
#include <set>

namespace aoi {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::validation, where + ": " + what);
}

void reject_unknown(const Json& obj, const std::string& where,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto a : allowed) known = known || key == a;
    if (!known) fail(where, "unknown field \"" + key + "\"");
  }
}

const Json& require_field(const Json& obj, const std::string& where,
                          const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

Int read_int(const Json& v, const std::string& where) {
  if (v.is_number_integer() && !v.is_number_unsigned()) return v.get<Int>();
  if (v.is_number_unsigned()) {
    const auto u = v.get<std::uint64_t>();
    if (u > static_cast<std::uint64_t>(std::numeric_limits<Int>::max())) {
      fail(where, "integer out of 64-bit range");
    }
    return static_cast<Int>(u);
  }
  fail(where, "expected an integer");
}

std::vector<Int> read_int_array(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of integers");
  std::vector<Int> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(read_int(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

std::vector<std::vector<Int>> read_matrix(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of arrays");
  std::vector<std::vector<Int>> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(read_int_array(v[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

void require_object(const Json& doc, const char* what) {
  if (!doc.is_object()) fail(what, "expected a JSON object");
}

MinAgeInstance read_min_age(const Json& doc) {
  reject_unknown(doc, "instance", {"type", "t0", "pairs", "special"});
  MinAgeInstance inst;
  inst.t0 = read_int(require_field(doc, "instance", "t0"), "t0");
  const Json& pairs = require_field(doc, "instance", "pairs");
  if (!pairs.is_array()) fail("pairs", "expected an array");
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string where = "pairs[" + std::to_string(i) + "]";
    const Json& p = pairs[i];
    if (!p.is_object()) fail(where, "expected an object");
    reject_unknown(p, where, {"b0", "births"});
    BirthdayChain chain;
    chain.b0 = read_int(require_field(p, where, "b0"), where + ".b0");
    chain.births = read_int_array(require_field(p, where, "births"), where + ".births");
    inst.pairs.push_back(std::move(chain));
  }
  if (auto it = doc.find("special"); it != doc.end()) {
    for (Int s : read_int_array(*it, "special")) {
      if (s < 0) fail("special", "indices must be non-negative");
      inst.special.insert(static_cast<std::size_t>(s));
    }
  }
  return inst;
}

WcsInstance read_min_wcs(const Json& doc) {
  reject_unknown(doc, "instance", {"type", "chains", "indicators", "constant"});
  WcsInstance inst;
  inst.chains = read_matrix(require_field(doc, "instance", "chains"), "chains");
  if (auto it = doc.find("indicators"); it != doc.end()) {
    for (Int v : read_int_array(*it, "indicators")) {
      inst.indicators.push_back(v == 0 || v == 1 ? static_cast<int>(v) : -1);
    }
  } else {
    inst.indicators.assign(inst.chains.size(), 1);
  }
  if (auto it = doc.find("constant"); it != doc.end()) {
    inst.constant = read_int(*it, "constant");
  }
  return inst;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::validation, std::string("malformed JSON: ") + e.what());
  }
}

AnyInstance instance_from_json(const Json& doc) {
  require_object(doc, "instance");
  const Json& type = require_field(doc, "instance", "type");
  if (!type.is_string()) fail("type", "expected a string");
  const auto tag = type.get<std::string>();
  if (tag == "min-age") {
    auto inst = read_min_age(doc);
    require_valid(inst);
    return inst;
  }
  if (tag == "min-wcs") {
    auto inst = read_min_wcs(doc);
    require_valid(inst);
    return inst;
  }
  fail("type", "unknown instance type \"" + tag + "\"");
}

AnyInstance parse_instance(std::string_view text) {
  return instance_from_json(parse_json(text));
}

Json to_json(const MinAgeInstance& inst) {
  Json doc;
  doc["type"] = "min-age";
  doc["t0"] = inst.t0;
  Json pairs = Json::array();
  for (const auto& p : inst.pairs) {
    Json entry;
    entry["b0"] = p.b0;
    entry["births"] = p.births;
    pairs.push_back(std::move(entry));
  }
  doc["pairs"] = std::move(pairs);
  if (!inst.special.empty()) {
    doc["special"] = std::vector<std::size_t>(inst.special.begin(), inst.special.end());
  }
  return doc;
}

Json to_json(const WcsInstance& inst) {
  Json doc;
  doc["type"] = "min-wcs";
  doc["chains"] = inst.chains;
  if (!inst.all_indicators_one()) doc["indicators"] = inst.indicators;
  if (inst.constant != 0) doc["constant"] = inst.constant;
  return doc;
}

Json to_json(const AgeSchedule& s) {
  Json doc;
  doc["times"] = s.times;
  return doc;
}

Json to_json(const JobSchedule& s) {
  Json doc;
  doc["slots"] = s.slots;
  return doc;
}

std::string serialize_instance(const AnyInstance& inst) {
  return std::visit([](const auto& v) { return to_json(v).dump(); }, inst) + "\n";
}

AgeSchedule parse_age_schedule(std::string_view text) {
  const Json doc = parse_json(text);
  require_object(doc, "schedule");
  reject_unknown(doc, "schedule", {"times"});
  return AgeSchedule{read_matrix(require_field(doc, "schedule", "times"), "times")};
}

JobSchedule parse_job_schedule(std::string_view text) {
  const Json doc = parse_json(text);
  require_object(doc, "schedule");
  reject_unknown(doc, "schedule", {"slots"});
  return JobSchedule{read_matrix(require_field(doc, "schedule", "slots"), "slots")};
}

Json wide_to_json(Wide value) {
  if (auto n = narrow_i64(value)) return Json(*n);
  return Json(to_string(value));
}

}  // namespace aoi
