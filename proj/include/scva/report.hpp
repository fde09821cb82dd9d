#ifndef SCVA_REPORT_HPP
#define SCVA_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "scva/state.hpp"

namespace scva {

/// One exact identity lhs == rhs, recorded with both sides.
struct Check {
  enum class Kind { Required, Informational };

  std::string id;
  std::optional<int> pole;      ///< pole order k of (z-w)^{-k}, when the identity is an OPE line
  std::string source = "derived";  ///< "paper", "derived", "normalized" or "corrected" (a printed typo fixed)
  State lhs;
  State rhs;
  bool equal = false;
  Kind kind = Kind::Required;
  std::string note;

  bool failed() const { return kind == Kind::Required && !equal; }
};

class Report {
 public:
  explicit Report(std::string title = {}) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  Check& expect(std::string id, State lhs, State rhs, std::string source = "derived",
                std::optional<int> pole = std::nullopt);
  Check& inform(std::string id, State lhs, State rhs, std::string source, std::optional<int> pole,
                std::string note);
  /// A check that is not a state identity (e.g. "this class is nonzero").
  Check& expect_true(std::string id, bool ok, std::string source, std::string note);
  void add(Check c) { checks_.push_back(std::move(c)); }
  /// Appends all checks of another report, prefixing their ids.
  void merge(const Report& other, const std::string& prefix = {});

  bool passed() const { return failures() == 0; }
  std::size_t failures() const;
  const Check* first_failure() const;
  const Check* find(const std::string& id) const;

 private:
  std::string title_;
  std::vector<Check> checks_;
};

}  // namespace scva

#endif  // SCVA_REPORT_HPP
