#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace sesq {

struct Finding {
  std::string kind = "violation";
  std::string axiom;
  std::vector<std::string> witnesses;
  std::string detail;
};

// Findings are kept in discovery order; checkers iterate in canonical id order,
// so the sequence is deterministic.
class ValidationReport {
 public:
  void add(Finding f) { findings_.push_back(std::move(f)); }
  void add(std::string axiom, std::vector<std::string> witnesses, std::string detail = {});
  void merge(const ValidationReport& other);

  bool empty() const { return findings_.empty(); }
  std::size_t size() const { return findings_.size(); }
  const std::vector<Finding>& findings() const { return findings_; }
  auto begin() const { return findings_.begin(); }
  auto end() const { return findings_.end(); }

  bool mentions(std::string_view axiom) const;

 private:
  std::vector<Finding> findings_;
};

}  // namespace sesq
