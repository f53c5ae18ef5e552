#pragma once

#include <array>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace runner {

  struct Result {
    int         code = 0;
    std::string out;
    std::string err;

    friend bool operator==(Result const&, Result const&) = default;
  };

  inline Result in_process(std::vector<std::string> args,
                           std::string const&       stdin_text = {}) {
    std::istringstream in(stdin_text);
    std::ostringstream out, err;
    Result             r;
    r.code = hurwitz::cli::run(std::move(args), in, out, err);
    r.out  = out.str();
    r.err  = err.str();
    return r;
  }

  // Runs the installed binary; stderr is discarded, stdout captured.
  inline Result subprocess(std::vector<std::string> const& args) {
    std::string cmd = "'" + std::string(HURWITZ_CLI_PATH) + "'";
    for (auto const& a : args) {
      cmd += " '" + a + "'";
    }
    cmd += " 2>/dev/null";
    Result r;
    FILE*  pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
      r.code = -1;
      return r;
    }
    std::array<char, 4096> buf{};
    std::size_t            n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) {
      r.out.append(buf.data(), n);
    }
    int const status = ::pclose(pipe);
    r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

}  // namespace runner
