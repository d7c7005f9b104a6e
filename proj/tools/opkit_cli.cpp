// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Command line front end. Talks to the core library exclusively through
// the C interface. Exit codes: 0 = ran to completion (findings allowed),
// 1 = usage or parse error, 2 = internal numerical failure.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "opkit/capi.h"

namespace {

int map_exit(int status) {
  switch (status) {
    case OPKIT_OK:
      return 0;
    case OPKIT_ERR_PARSE:
    case OPKIT_ERR_INVALID:
    case OPKIT_ERR_NULL_ARGUMENT:
      return 1;
    default:
      return 2;
  }
}

int fail(int status) {
  std::cerr << "error: " << opkit_last_error() << "\n";
  return map_exit(status);
}

struct TheoryGuard {
  opkit_theory* handle = nullptr;
  ~TheoryGuard() { opkit_theory_free(handle); }
};

int load(const std::string& file, TheoryGuard* guard) {
  return opkit_theory_load(file.c_str(), &guard->handle);
}

void print_report(const char* json) { std::fputs(json, stdout); }

/// Aligned text rendering of an audit report.
void print_audit_text(const char* json) {
  auto j = nlohmann::json::parse(json);
  for (const auto& c : j.at("checks")) {
    std::string id = c.at("id").get<std::string>();
    std::string line = id;
    line.resize(std::max<size_t>(line.size(), 28), ' ');
    line += c.at("status").get<std::string>();
    if (c.contains("note")) line += "  (" + c.at("note").get<std::string>() + ")";
    std::cout << line << "\n";
  }
  std::cout << "postulates:";
  for (const auto& [k, v] : j.at("postulates").items())
    std::cout << " " << k << "=" << v.get<std::string>();
  std::cout << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operational probabilistic theory auditor"};
  app.require_subcommand(1);

  std::string file;
  std::uint64_t seed = 1;
  double tol_scale = 1.0;
  int samples = 20;
  std::string checks;
  bool json_output = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("file", file, "theory JSON file")->required();
    cmd->add_option("--seed", seed, "random stream seed");
    cmd->add_option("--tol", tol_scale, "tolerance scale factor");
    cmd->add_flag("--json", json_output, "emit JSON instead of text");
  };

  CLI::App* audit = app.add_subcommand("audit", "run the audit suites");
  add_common(audit);
  audit->add_option("--checks", checks,
                    "comma separated check-id prefixes to run");
  audit->add_option("--samples", samples, "random samples per check");

  CLI::App* gns = app.add_subcommand(
      "gns", "bilinear form, signature, Gram spectrum, adjoint spot checks");
  add_common(gns);

  std::string transformation_file;
  CLI::App* transpose = app.add_subcommand(
      "transpose", "transpose a transformation under the faithful state");
  add_common(transpose);
  transpose
      ->add_option("--transformation", transformation_file,
                   "JSON file with a row-major \"matrix\" field")
      ->required();

  CLI11_PARSE(app, argc, argv);

  TheoryGuard theory;
  int status = load(file, &theory);
  if (status != OPKIT_OK) return fail(status);

  char* out = nullptr;
  if (audit->parsed()) {
    status = opkit_audit(theory.handle, seed, tol_scale, samples,
                         checks.empty() ? nullptr : checks.c_str(), &out);
  } else if (gns->parsed()) {
    status = opkit_gns_report(theory.handle, seed, &out);
  } else {
    std::ifstream in(transformation_file);
    if (!in) {
      std::cerr << "error: cannot open " << transformation_file << "\n";
      return 1;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    status = opkit_transpose(theory.handle, ss.str().c_str(), &out);
  }
  if (status != OPKIT_OK) return fail(status);
  if (audit->parsed() && !json_output)
    print_audit_text(out);
  else
    print_report(out);
  opkit_string_free(out);
  return 0;
}
