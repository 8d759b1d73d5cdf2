#pragma once

// Verification reports: named checks, witnesses for failed identities, free
// notes.  Rendered as JSON, CSV or a LaTeX table.

#include <string>
#include <vector>

#include "json.hpp"

namespace ncsf {

enum class Status { pass, fail, discrepancy };

std::string status_name(Status s);

enum class Format { json, csv, latex };

/// Throws InvalidArgument for anything but json, csv, latex.
Format parse_format(const std::string& name);

struct Check {
  std::string name;
  bool ok = false;
  std::string detail;
};

struct Witness {
  std::string identity;
  std::string lhs;
  std::string rhs;
};

class Report {
 public:
  explicit Report(std::string suite = "") : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }

  /// Records a check; returns ok.
  bool check(std::string name, bool ok, std::string detail = "");
  /// A literal claim that fails while a corrected form is verified by some
  /// other check.  Does not count as a failure.
  void discrepancy(std::string name, std::string detail);
  void witness(std::string identity, std::string lhs, std::string rhs);
  void note(std::string text);
  /// Appends everything from `other`, prefixing check names with its suite.
  void merge(const Report& other);

  void set_timing(double seconds) {
    timing_ = seconds;
    has_timing_ = true;
  }

  const std::vector<Check>& checks() const { return checks_; }
  const std::vector<Check>& discrepancies() const { return discrepancies_; }
  const std::vector<Witness>& witnesses() const { return witnesses_; }
  const std::vector<std::string>& notes() const { return notes_; }

  Status status() const;
  bool passed() const { return status() != Status::fail; }
  std::size_t failures() const;

  nlohmann::ordered_json to_json() const;
  std::string render(Format f) const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
  std::vector<Check> discrepancies_;
  std::vector<Witness> witnesses_;
  std::vector<std::string> notes_;
  double timing_ = 0;
  bool has_timing_ = false;
};

/// Quotes a CSV field when needed.
std::string csv_field(const std::string& s);
/// Canonical polynomial string to LaTeX: drops '*', keeps braces.
std::string latex_poly(const std::string& s);

}  // namespace ncsf
