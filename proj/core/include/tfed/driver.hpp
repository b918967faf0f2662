#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tfed {

/// Line-oriented "key: value" report with keys in insertion order.
class RunReport {
 public:
  void add(const std::string& key, const std::string& value);
  void add(const std::string& key, long long value);
  /// Value of the first entry with this key, or empty.
  std::string get(const std::string& key) const;
  bool has(const std::string& key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }
  std::string text() const;

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitUsage = 2;

/// Command-line entry point without the program name:
/// solve | oracle | approx | arcs | gen-binpack | gen-split | gen-hsdag | analyze.
/// The report goes to `out`, usage errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tfed
