#include "scva/report.hpp"

#include <algorithm>

namespace scva {

Check& Report::expect(std::string id, State lhs, State rhs, std::string source, std::optional<int> pole) {
  Check c;
  c.id = std::move(id);
  c.pole = pole;
  c.source = std::move(source);
  c.equal = lhs == rhs;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  checks_.push_back(std::move(c));
  return checks_.back();
}

Check& Report::inform(std::string id, State lhs, State rhs, std::string source, std::optional<int> pole,
                      std::string note) {
  Check& c = expect(std::move(id), std::move(lhs), std::move(rhs), std::move(source), pole);
  c.kind = Check::Kind::Informational;
  c.note = std::move(note);
  return c;
}

Check& Report::expect_true(std::string id, bool ok, std::string source, std::string note) {
  Check c;
  c.id = std::move(id);
  c.source = std::move(source);
  c.equal = ok;
  c.note = std::move(note);
  checks_.push_back(std::move(c));
  return checks_.back();
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (Check c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.failed(); }));
}

const Check* Report::first_failure() const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [](const Check& c) { return c.failed(); });
  return it == checks_.end() ? nullptr : &*it;
}

const Check* Report::find(const std::string& id) const {
  auto it = std::find_if(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; });
  return it == checks_.end() ? nullptr : &*it;
}

}  // namespace scva
