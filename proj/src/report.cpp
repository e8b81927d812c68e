#include "folinv/report.hpp"

#include <algorithm>
#include <sstream>

namespace folinv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
  }
  return "?";
}

namespace {

template <class Vec, class T>
void upsert(Vec& vec, const std::string& key, T value) {
  auto it = std::find_if(vec.begin(), vec.end(), [&](const auto& kv) { return kv.first == key; });
  if (it == vec.end()) vec.emplace_back(key, std::move(value));
  else it->second = std::move(value);
}

template <class Vec>
auto lookup(const Vec& vec, const std::string& key) -> decltype(&vec.front().second) {
  auto it = std::find_if(vec.begin(), vec.end(), [&](const auto& kv) { return kv.first == key; });
  return it == vec.end() ? nullptr : &it->second;
}

std::string render(const ReportValue& v) {
  if (auto* i = std::get_if<long long>(&v)) return std::to_string(*i);
  if (auto* b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  return std::get<std::string>(v);
}

} // namespace

void CheckReport::input(const std::string& key, const std::string& value) { upsert(inputs_, key, value); }
void CheckReport::set(const std::string& key, ReportValue value) { upsert(values_, key, std::move(value)); }
void CheckReport::assertion(const std::string& key, bool holds) { upsert(assertions_, key, holds); }

std::optional<long long> CheckReport::integer(const std::string& key) const {
  auto* v = lookup(values_, key);
  if (!v || !std::holds_alternative<long long>(*v)) return std::nullopt;
  return std::get<long long>(*v);
}

std::optional<bool> CheckReport::boolean(const std::string& key) const {
  auto* v = lookup(values_, key);
  if (!v || !std::holds_alternative<bool>(*v)) return std::nullopt;
  return std::get<bool>(*v);
}

std::optional<std::string> CheckReport::text(const std::string& key) const {
  auto* v = lookup(values_, key);
  if (!v || !std::holds_alternative<std::string>(*v)) return std::nullopt;
  return std::get<std::string>(*v);
}

std::optional<bool> CheckReport::assertion_holds(const std::string& key) const {
  auto* v = lookup(assertions_, key);
  if (!v) return std::nullopt;
  return *v;
}

void CheckReport::settle() {
  verdict_ = std::all_of(assertions_.begin(), assertions_.end(), [](const auto& kv) { return kv.second; })
                 ? Verdict::Pass
                 : Verdict::Fail;
}

nlohmann::ordered_json CheckReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = name_;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : inputs_) j["inputs"][k] = v;
  j["invariants"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : values_)
    std::visit([&](const auto& x) { j["invariants"][k] = x; }, v);
  j["assertions"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : assertions_) j["assertions"][k] = v;
  j["verdict"] = to_string(verdict_);
  j["reasons"] = reasons_;
  if (!details_.empty()) j["details"] = details_;
  return j;
}

std::string CheckReport::to_text() const {
  std::ostringstream out;
  out << "check: " << name_ << "\n";
  if (!inputs_.empty()) {
    out << "inputs:\n";
    for (const auto& [k, v] : inputs_) out << "  " << k << " = " << v << "\n";
  }
  if (!values_.empty()) {
    out << "invariants:\n";
    for (const auto& [k, v] : values_) out << "  " << k << " = " << render(v) << "\n";
  }
  if (!assertions_.empty()) {
    out << "assertions:\n";
    for (const auto& [k, v] : assertions_) out << "  [" << (v ? "holds" : "FAILS") << "] " << k << "\n";
  }
  for (const auto& r : reasons_) out << "note: " << r << "\n";
  if (!details_.empty()) out << "details:\n" << details_.dump(2) << "\n";
  out << "verdict: " << to_string(verdict_) << "\n";
  return out.str();
}

} // namespace folinv
