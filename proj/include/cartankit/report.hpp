#pragma once

#include "cartankit/json_io.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cartan {

enum class Status { Pass, Fail, Error };
std::string status_name(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string witness;
};

// Result of one command or gallery routine. Rendering is deterministic;
// timing is only emitted when set.
struct Report {
  std::string command;
  std::string digest; // of the inputs
  Json data = Json::object();
  std::vector<Check> checks;
  std::optional<double> seconds;

  Check &add(std::string name, bool ok, std::string witness = {});
  Check &error(std::string name, std::string witness);
  void append(const Report &other, const std::string &prefix);
  bool ok() const;
  bool has_error() const;
  Json to_json() const;
  std::string text() const;
};

// FNV-1a 64, hex; stable across platforms.
std::string digest_of(const std::string &bytes);

} // namespace cartan
