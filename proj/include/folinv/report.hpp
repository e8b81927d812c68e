#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace folinv {

enum class Verdict { Pass, Fail, NotApplicable };
std::string to_string(Verdict v);

using ReportValue = std::variant<long long, bool, std::string>;

/// Structured outcome of one check: inputs, every intermediate invariant,
/// the individual assertions and the overall verdict.
class CheckReport {
public:
  explicit CheckReport(std::string name = {}) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }

  void input(const std::string& key, const std::string& value);
  void set(const std::string& key, ReportValue value);
  /// Records an asserted relation; the verdict fails if any assertion does not hold.
  void assertion(const std::string& key, bool holds);
  void reason(std::string text) { reasons_.push_back(std::move(text)); }
  void detail(const std::string& key, nlohmann::ordered_json value) { details_[key] = std::move(value); }

  std::optional<long long> integer(const std::string& key) const;
  std::optional<bool> boolean(const std::string& key) const;
  std::optional<std::string> text(const std::string& key) const;
  std::optional<bool> assertion_holds(const std::string& key) const;
  const std::vector<std::string>& reasons() const { return reasons_; }
  const nlohmann::ordered_json& details() const { return details_; }

  void set_verdict(Verdict v) { verdict_ = v; }
  /// Pass when every assertion holds, Fail otherwise.
  void settle();
  Verdict verdict() const { return verdict_; }

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;

private:
  std::string name_;
  std::vector<std::pair<std::string, std::string>> inputs_;
  std::vector<std::pair<std::string, ReportValue>> values_;
  std::vector<std::pair<std::string, bool>> assertions_;
  std::vector<std::string> reasons_;
  nlohmann::ordered_json details_ = nlohmann::ordered_json::object();
  Verdict verdict_ = Verdict::NotApplicable;
};

} // namespace folinv
