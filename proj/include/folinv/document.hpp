#pragma once

#include "folinv/germ.hpp"
#include "folinv/projective.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace folinv {

/// Input error tied to a line of the document (0 when not attributable).
class DocumentError : public InvalidInput {
public:
  DocumentError(const std::string& source, int line, const std::string& what)
      : InvalidInput(source + (line > 0 ? ":" + std::to_string(line) : std::string()) + ": " + what), line_(line) {}
  int line() const { return line_; }

private:
  int line_;
};

struct Entry {
  std::string value;
  int line = 0;
  int column = 0; // column of the first character of value
};

/// Sectioned key/value text:
///   # comment
///   [params]      lambda = 1
///   [foliation]   P = ..., Q = ...
///   [divisor]     zero = ..., pole = ...
///   [projective]  A, B, C, curve, points = [1:0:0]; [0:1:0]
struct InputDocument {
  std::string source = "<input>";
  std::map<std::string, std::map<std::string, Entry>> sections;

  bool has(const std::string& section) const { return sections.count(section) != 0; }
  const Entry* find(const std::string& section, const std::string& key) const;
};

InputDocument parse_document(std::string_view text, const std::string& source = "<input>");
InputDocument load_document(const std::filesystem::path& path);

/// [params] merged with overrides of the form name=rational (overrides win).
ParamMap resolve_params(const InputDocument& doc, const std::vector<std::string>& overrides = {});

struct GermInput {
  FoliationGerm F;
  std::optional<BalancedEquation> divisor;
};

struct ProjectiveInput {
  ProjectiveFoliation W;
  std::optional<Poly> curve;
  std::vector<ProjectivePoint> points;
};

GermInput germ_input(const InputDocument& doc, const ParamMap& params);
ProjectiveInput projective_input(const InputDocument& doc, const ParamMap& params);

/// "[1:0:0]; (0,1,0); 0:0:1" style lists.
std::vector<ProjectivePoint> parse_points(std::string_view text);

} // namespace folinv
