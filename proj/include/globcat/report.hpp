#pragma once

#include <deque>
#include <string>
#include <vector>

namespace globcat {

struct LawResult {
  std::string law;
  long checked = 0;
  long failed = 0;
  long skipped = 0;  // instances outside the stored support
  std::vector<std::string> counterexamples;  // first few only

  void record(bool ok, const std::string& witness = {});
};

struct Report {
  std::string suite;
  std::deque<LawResult> laws;  // stable references across law()

  LawResult& law(const std::string& name);
  bool ok() const;
  long failures() const;
  void merge(const Report& other);
};

}  // namespace globcat
