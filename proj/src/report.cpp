#include "globcat/report.hpp"

#include <utility>

namespace globcat {

namespace {
constexpr std::size_t kMaxWitnesses = 5;
}

void LawResult::record(bool ok, const std::string& witness) {
  ++checked;
  if (ok) return;
  ++failed;
  if (counterexamples.size() < kMaxWitnesses) counterexamples.push_back(witness);
}

LawResult& Report::law(const std::string& name) {
  for (auto& l : laws)
    if (l.law == name) return l;
  LawResult l;
  l.law = name;
  laws.push_back(std::move(l));
  return laws.back();
}

bool Report::ok() const { return failures() == 0; }

long Report::failures() const {
  long n = 0;
  for (const auto& l : laws) n += l.failed;
  return n;
}

void Report::merge(const Report& other) {
  for (const auto& l : other.laws) {
    auto& mine = law(l.law);
    mine.checked += l.checked;
    mine.failed += l.failed;
    mine.skipped += l.skipped;
    for (const auto& c : l.counterexamples)
      if (mine.counterexamples.size() < kMaxWitnesses) mine.counterexamples.push_back(c);
  }
}

}  // namespace globcat
