#pragma once

// Pass/fail ledgers produced by the verification routines.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace hurwitz {

  enum class Status { pass, fail, not_verified, note };

  inline std::string to_string(Status s) {
    switch (s) {
      case Status::pass:
        return "PASS";
      case Status::fail:
        return "FAIL";
      case Status::not_verified:
        return "SKIP";
      case Status::note:
        return "NOTE";
    }
    return "?";
  }

  struct Check {
    std::string              name;
    Status                   status = Status::fail;
    std::string              detail;
    // Disagreements with a stated claim that the computation does not
    // resolve; reported alongside the verdict, never instead of it.
    std::vector<std::string> flags;
  };

  struct Report {
    std::string        title;
    std::vector<Check> checks;

    void add(std::string name, bool ok, std::string detail = {}) {
      checks.push_back(
          {std::move(name), ok ? Status::pass : Status::fail, std::move(detail),
           {}});
    }

    void append(Report const& other) {
      checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }

    [[nodiscard]] bool passed() const {
      return std::none_of(checks.begin(), checks.end(),
                          [](Check const& c) {
                            return c.status == Status::fail
                                   || c.status == Status::not_verified;
                          })
             && std::any_of(checks.begin(), checks.end(), [](Check const& c) {
                  return c.status == Status::pass;
                });
    }

    [[nodiscard]] std::vector<std::string> flags() const {
      std::vector<std::string> out;
      for (auto const& c : checks) {
        out.insert(out.end(), c.flags.begin(), c.flags.end());
      }
      return out;
    }
  };

  // One line per check: "PASS name: detail", flags on indented lines.
  inline std::string to_text(Report const& r) {
    std::string out;
    for (auto const& c : r.checks) {
      out += to_string(c.status) + " " + c.name;
      if (!c.detail.empty()) {
        out += ": " + c.detail;
      }
      out += '\n';
      for (auto const& f : c.flags) {
        out += "     flag: " + f + '\n';
      }
    }
    return out;
  }

}  // namespace hurwitz
