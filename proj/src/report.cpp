#include "ncsf/report.hpp"

#include <algorithm>
#include <cstdio>

#include "ncsf/errors.hpp"

namespace ncsf {

std::string status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::discrepancy: return "discrepancy";
  }
  return "fail";
}

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "latex") return Format::latex;
  throw InvalidArgument("unknown format '" + name + "'");
}

bool Report::check(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok, std::move(detail)});
  return ok;
}

void Report::discrepancy(std::string name, std::string detail) {
  discrepancies_.push_back({std::move(name), false, std::move(detail)});
}

void Report::witness(std::string identity, std::string lhs, std::string rhs) {
  witnesses_.push_back({std::move(identity), std::move(lhs), std::move(rhs)});
}

void Report::note(std::string text) { notes_.push_back(std::move(text)); }

void Report::merge(const Report& other) {
  std::string prefix = other.suite_.empty() ? "" : other.suite_ + "/";
  for (const auto& c : other.checks_) checks_.push_back({prefix + c.name, c.ok, c.detail});
  for (const auto& c : other.discrepancies_) discrepancies_.push_back({prefix + c.name, false, c.detail});
  witnesses_.insert(witnesses_.end(), other.witnesses_.begin(), other.witnesses_.end());
  for (const auto& n : other.notes_) notes_.push_back(prefix + n);
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.ok; }));
}

Status Report::status() const {
  if (failures() > 0) return Status::fail;
  return discrepancies_.empty() ? Status::pass : Status::discrepancy;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite_;
  j["status"] = status_name(status());
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["ok"] = c.ok;
    if (!c.detail.empty()) e["detail"] = c.detail;
    j["checks"].push_back(e);
  }
  j["discrepancies"] = nlohmann::ordered_json::array();
  for (const auto& c : discrepancies_)
    j["discrepancies"].push_back({{"name", c.name}, {"detail", c.detail}});
  j["witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : witnesses_)
    j["witnesses"].push_back({{"identity", w.identity}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  j["notes"] = notes_;
  if (has_timing_) j["timing_seconds"] = timing_;
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string latex_poly(const std::string& s) {
  std::string out;
  for (char c : s)
    if (c != '*') out += c;
  return out;
}

namespace {

std::string latex_text(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '_' || c == '&' || c == '%' || c == '#' || c == '{' || c == '}') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string Report::render(Format f) const {
  if (f == Format::json) return to_json().dump(2) + "\n";
  std::string out;
  if (f == Format::csv) {
    out += "kind,name,value,detail\n";
    out += "status," + csv_field(suite_) + "," + status_name(status()) + ",\n";
    for (const auto& c : checks_)
      out += "check," + csv_field(c.name) + "," + (c.ok ? "pass" : "fail") + "," +
             csv_field(c.detail) + "\n";
    for (const auto& c : discrepancies_)
      out += "discrepancy," + csv_field(c.name) + ",," + csv_field(c.detail) + "\n";
    for (const auto& w : witnesses_)
      out += "witness," + csv_field(w.identity) + "," + csv_field(w.lhs) + "," +
             csv_field(w.rhs) + "\n";
    for (const auto& n : notes_) out += "note,,," + csv_field(n) + "\n";
    if (has_timing_) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.3f", timing_);
      out += std::string("timing,,") + buf + ",\n";
    }
    return out;
  }
  out += "% " + suite_ + ": " + status_name(status()) + "\n";
  out += "\\begin{tabular}{lll}\n\\hline\n";
  for (const auto& c : checks_)
    out += latex_text(c.name) + " & " + (c.ok ? "pass" : "fail") + " & " + latex_text(c.detail) +
           " \\\\\n";
  for (const auto& c : discrepancies_)
    out += latex_text(c.name) + " & discrepancy & " + latex_text(c.detail) + " \\\\\n";
  out += "\\hline\n\\end{tabular}\n";
  for (const auto& w : witnesses_)
    out += "% " + w.identity + ": $" + latex_poly(w.lhs) + "$ vs $" + latex_poly(w.rhs) + "$\n";
  return out;
}

}  // namespace ncsf
