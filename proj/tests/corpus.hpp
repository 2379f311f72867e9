#pragma once

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "oddear/cli.hpp"
#include "oddear/certs.hpp"

namespace oddear::testing {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

inline RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "oddear");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

inline std::filesystem::path fixture_dir() { return ODDEAR_FIXTURES; }

inline std::string fixture(const std::string& name) { return (fixture_dir() / name).string(); }

struct Emitted {
  std::string input;
  std::vector<std::string> command;
  Json cert;
};

// Every certificate the CLI prints over the fixture corpus.
inline std::vector<Emitted> emit_corpus() {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(fixture_dir())) files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Emitted> out;
  for (const auto& f : files) {
    std::vector<std::vector<std::string>> cmds;
    if (f.extension() == ".matroid") {
      cmds = {{"matroid", "oddc3"}, {"matroid", "bipartite"}};
    } else {
      cmds = {{"oddc3"}, {"strict"}, {"hperfect", "--source"}, {"hperfect", "--line"}, {"ears"}, {"beta"}, {"phibar"}, {"tok4"}};
    }
    for (auto cmd : cmds) {
      cmd.push_back(f.string());
      auto r = run_cli(cmd);
      if (r.out.empty() || r.out[0] != '{') continue;
      out.push_back({f.string(), cmd, Json::parse(r.out)});
    }
  }
  return out;
}

}  // namespace oddear::testing
