#include "cartankit/report.hpp"

#include <cstdint>
#include <cstdio>
#include <sstream>

namespace cartan {

std::string status_name(Status s) {
  switch (s) {
  case Status::Pass: return "pass";
  case Status::Fail: return "fail";
  case Status::Error: return "error";
  }
  return "error";
}

Check &Report::add(std::string name, bool ok, std::string witness) {
  checks.push_back({std::move(name), ok ? Status::Pass : Status::Fail, std::move(witness)});
  return checks.back();
}

Check &Report::error(std::string name, std::string witness) {
  checks.push_back({std::move(name), Status::Error, std::move(witness)});
  return checks.back();
}

void Report::append(const Report &other, const std::string &prefix) {
  for (const auto &c : other.checks)
    checks.push_back({prefix + c.name, c.status, c.witness});
}

bool Report::ok() const {
  for (const auto &c : checks)
    if (c.status != Status::Pass)
      return false;
  return true;
}

bool Report::has_error() const {
  for (const auto &c : checks)
    if (c.status == Status::Error)
      return true;
  return false;
}

Json Report::to_json() const {
  Json cs = Json::array();
  for (const auto &c : checks) {
    Json e = {{"name", c.name}, {"status", status_name(c.status)}};
    if (!c.witness.empty())
      e["witness"] = c.witness;
    cs.push_back(e);
  }
  Json j = {{"command", command}, {"digest", digest}, {"ok", ok()}, {"checks", cs}};
  if (!data.empty())
    j["data"] = data;
  if (seconds)
    j["seconds"] = *seconds;
  return j;
}

std::string Report::text() const {
  std::ostringstream os;
  os << command << " [" << digest << "]\n";
  for (auto it = data.begin(); it != data.end(); ++it)
    os << "  " << it.key() << ": " << (it->is_string() ? it->get<std::string>() : it->dump()) << "\n";
  for (const auto &c : checks) {
    os << "  " << status_name(c.status) << "  " << c.name;
    if (!c.witness.empty())
      os << "  -- " << c.witness;
    os << "\n";
  }
  size_t pass = 0;
  for (const auto &c : checks)
    pass += c.status == Status::Pass;
  os << (ok() ? "OK" : "FAILED") << " (" << pass << "/" << checks.size() << " checks passed)";
  if (seconds) {
    char buf[32];
    std::snprintf(buf, sizeof buf, " in %.3fs", *seconds);
    os << buf;
  }
  os << "\n";
  return os.str();
}

std::string digest_of(const std::string &bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

} // namespace cartan
