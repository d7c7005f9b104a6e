// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/capi.h"

#include <cstring>
#include <string>

#include "opkit/audit.hpp"
#include "opkit/io.hpp"

namespace {

thread_local std::string g_last_error;

struct TheoryHandle {
  opkit::LoadedTheory loaded;
};

int status_from(const opkit::Error& e) {
  using opkit::ErrorCode;
  switch (e.code()) {
    case ErrorCode::Parse:
      return OPKIT_ERR_PARSE;
    case ErrorCode::Numeric:
      return OPKIT_ERR_NUMERIC;
    default:
      return OPKIT_ERR_INVALID;
  }
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
int guard(Fn&& fn) {
  try {
    fn();
    return OPKIT_OK;
  } catch (const opkit::Error& e) {
    g_last_error = e.what();
    return status_from(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OPKIT_ERR_NUMERIC;
  }
}

std::vector<std::string> split_csv(const char* csv) {
  std::vector<std::string> out;
  if (!csv) return out;
  std::string s(csv);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    std::string item = s.substr(pos, comma - pos);
    if (!item.empty()) out.push_back(item);
    pos = comma + 1;
  }
  return out;
}

}  // namespace

extern "C" {

int opkit_theory_load(const char* path, opkit_theory** out) {
  if (!path || !out) return OPKIT_ERR_NULL_ARGUMENT;
  return guard([&] {
    auto* h = new TheoryHandle{opkit::load_theory_file(path)};
    *out = reinterpret_cast<opkit_theory*>(h);
  });
}

int opkit_theory_load_json(const char* json, opkit_theory** out) {
  if (!json || !out) return OPKIT_ERR_NULL_ARGUMENT;
  return guard([&] {
    auto* h = new TheoryHandle{opkit::load_theory_json(json)};
    *out = reinterpret_cast<opkit_theory*>(h);
  });
}

void opkit_theory_free(opkit_theory* t) {
  delete reinterpret_cast<TheoryHandle*>(t);
}

int opkit_theory_dimension(const opkit_theory* t) {
  if (!t) return -1;
  return reinterpret_cast<const TheoryHandle*>(t)->loaded.theory->n();
}

int opkit_theory_save_json(const opkit_theory* t, char** json_out) {
  if (!t || !json_out) return OPKIT_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto& h = *reinterpret_cast<const TheoryHandle*>(t);
    *json_out = copy_string(opkit::dump_json(opkit::save_theory(h.loaded)));
  });
}

int opkit_audit(const opkit_theory* t, uint64_t seed, double tol_scale,
                int samples, const char* checks_csv, char** json_out) {
  if (!t || !json_out) return OPKIT_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto& h = *reinterpret_cast<const TheoryHandle*>(t);
    opkit::AuditOptions opt;
    opt.seed = seed;
    opt.tol_scale = tol_scale > 0 ? tol_scale : 1.0;
    opt.samples = samples > 0 ? samples : 20;
    opt.checks = split_csv(checks_csv);
    opkit::AuditResult res = opkit::run_audit(h.loaded, opt);
    *json_out = copy_string(
        opkit::dump_json(opkit::audit_to_json(res, opt, h.loaded.kind)));
  });
}

int opkit_gns_report(const opkit_theory* t, uint64_t seed, char** json_out) {
  if (!t || !json_out) return OPKIT_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto& h = *reinterpret_cast<const TheoryHandle*>(t);
    *json_out =
        copy_string(opkit::dump_json(opkit::gns_report_json(h.loaded, seed)));
  });
}

int opkit_transpose(const opkit_theory* t, const char* transformation_json,
                    char** json_out) {
  if (!t || !transformation_json || !json_out) return OPKIT_ERR_NULL_ARGUMENT;
  return guard([&] {
    const auto& h = *reinterpret_cast<const TheoryHandle*>(t);
    opkit::Json j;
    try {
      j = opkit::Json::parse(transformation_json);
    } catch (const std::exception& e) {
      throw opkit::Error(opkit::ErrorCode::Parse,
                         std::string("transformation spec: ") + e.what());
    }
    if (!j.contains("matrix"))
      throw opkit::Error(opkit::ErrorCode::Parse,
                         "transformation spec needs a \"matrix\" field");
    opkit::Mat a = opkit::mat_from_json_rows(j.at("matrix"));
    if (a.rows() != h.loaded.theory->n() || a.cols() != h.loaded.theory->n())
      throw opkit::Error(opkit::ErrorCode::Parse,
                         "transformation matrix has wrong dimensions");
    *json_out =
        copy_string(opkit::dump_json(opkit::transpose_report_json(h.loaded, a)));
  });
}

void opkit_string_free(char* s) { delete[] s; }

const char* opkit_last_error(void) { return g_last_error.c_str(); }

}  // extern "C"
