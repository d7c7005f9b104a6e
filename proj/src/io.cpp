// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.

#include "opkit/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "opkit/theories.hpp"

namespace opkit {

namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::Parse, "theory file: " + what);
}

std::optional<DeclaredIdim> read_declared_idim(const Json& j, int n) {
  if (!j.contains("declared_idim")) return std::nullopt;
  const Json& d = j.at("declared_idim");
  DeclaredIdim idim;
  idim.value = d.at("value").get<int>();
  idim.witness_states = mat_from_json_rows(d.at("witness_states")).transpose();
  idim.witness_effects =
      mat_from_json_rows(d.at("witness_effects")).transpose();
  if (idim.witness_states.rows() != n || idim.witness_effects.rows() != n ||
      idim.witness_states.cols() != idim.value ||
      idim.witness_effects.cols() != idim.value)
    parse_error("declared_idim witness dimensions do not match");
  return idim;
}

std::optional<BipartiteState> read_faithful(const Json& j,
                                            const std::string& kind,
                                            const TheoryPtr& t) {
  if (!j.contains("faithful_state")) return std::nullopt;
  const Json& f = j.at("faithful_state");
  if (f.is_string()) {
    if (f.get<std::string>() != "bell")
      parse_error("unknown faithful_state name");
    if (kind != "quantum") parse_error("\"bell\" needs a quantum theory");
    return build_bell_state(t->quantum().d);
  }
  if (f.contains("correlated")) {
    if (kind != "classical")
      parse_error("\"correlated\" needs a classical theory");
    return build_classical_correlated(vec_from_json(f.at("correlated")));
  }
  if (f.contains("coords")) {
    CompositeTheory c = make_composite(t, t);
    Vec coords = vec_from_json(f.at("coords"));
    if (coords.size() != c.joint->n())
      parse_error("faithful_state coords have wrong length");
    Weight w{c.joint, std::move(coords)};
    return BipartiteState{std::move(c), std::move(w)};
  }
  parse_error("faithful_state must be \"bell\", {correlated}, or {coords}");
}

}  // namespace

LoadedTheory load_theory_json(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    parse_error(e.what());
  }
  try {
    if (j.at("version").get<int>() != 1) parse_error("unsupported version");
    LoadedTheory out;
    out.kind = j.at("kind").get<std::string>();
    if (out.kind == "quantum") {
      out.theory = build_quantum(j.at("d").get<int>());
    } else if (out.kind == "classical") {
      out.theory = build_classical(j.at("k").get<int>());
    } else if (out.kind == "gbit") {
      out.theory = build_gbit();
    } else if (out.kind == "explicit") {
      const Json& e = j.at("explicit");
      int n = e.at("n").get<int>();
      Vec unit = vec_from_json(e.at("unit_effect"));
      if (unit.size() != n) parse_error("unit_effect length != n");
      Mat states = mat_from_json_rows(e.at("extreme_states")).transpose();
      if (states.rows() != n) parse_error("extreme state length != n");
      FiniteExtremeModel model;
      model.extreme_states = std::move(states);
      out.theory = std::make_shared<const TheorySpace>(
          "explicit", std::move(unit), std::move(model),
          read_declared_idim(j, n));
    } else {
      parse_error("unknown kind \"" + out.kind + "\"");
    }
    out.faithful = read_faithful(j, out.kind, out.theory);
    return out;
  } catch (const Json::exception& e) {
    parse_error(e.what());
  }
}

LoadedTheory load_theory_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Parse, "cannot open file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_theory_json(ss.str());
}

Json save_theory(const LoadedTheory& loaded) {
  Json j;
  j["version"] = 1;
  j["kind"] = loaded.kind;
  if (loaded.kind == "quantum") {
    j["d"] = loaded.theory->quantum().d;
  } else if (loaded.kind == "classical") {
    j["k"] = loaded.theory->n();
  } else if (loaded.kind == "explicit") {
    Json e;
    e["n"] = loaded.theory->n();
    e["unit_effect"] = vec_to_json(loaded.theory->unit_effect());
    e["extreme_states"] =
        mat_to_json_cols(loaded.theory->finite_extreme().extreme_states);
    j["explicit"] = e;
    if (loaded.theory->declared_idim()) {
      const auto& d = *loaded.theory->declared_idim();
      Json di;
      di["value"] = d.value;
      di["witness_states"] = mat_to_json_cols(d.witness_states);
      di["witness_effects"] = mat_to_json_cols(d.witness_effects);
      j["declared_idim"] = di;
    }
  }
  if (loaded.faithful) {
    if (loaded.kind == "quantum") {
      j["faithful_state"] = "bell";
    } else {
      Json f;
      f["coords"] = vec_to_json(loaded.faithful->weight.coords);
      j["faithful_state"] = f;
    }
  }
  return j;
}

namespace {

std::string format_double(double v) {
  if (std::isnan(v)) return "null";
  if (std::isinf(v)) return v > 0 ? "1e9999" : "-1e9999";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  std::string s(buf);
  // Keep integral doubles recognizable as numbers with a fraction part.
  if (s.find_first_of(".eE") == std::string::npos) s += ".0";
  return s;
}

void dump_rec(const Json& j, int indent, int depth, std::string* out) {
  const std::string pad(static_cast<size_t>(indent * (depth + 1)), ' ');
  const std::string close_pad(static_cast<size_t>(indent * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        *out += "{}";
        return;
      }
      *out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) *out += ",\n";
        first = false;
        *out += pad + Json(it.key()).dump() + ": ";
        dump_rec(it.value(), indent, depth + 1, out);
      }
      *out += "\n" + close_pad + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        *out += "[]";
        return;
      }
      *out += "[\n";
      bool first = true;
      for (const auto& el : j) {
        if (!first) *out += ",\n";
        first = false;
        *out += pad;
        dump_rec(el, indent, depth + 1, out);
      }
      *out += "\n" + close_pad + "]";
      return;
    }
    case Json::value_t::number_float:
      *out += format_double(j.get<double>());
      return;
    default:
      *out += j.dump();
      return;
  }
}

}  // namespace

std::string dump_json(const Json& j, int indent) {
  std::string out;
  dump_rec(j, indent, 0, &out);
  out += "\n";
  return out;
}

Json vec_to_json(const Vec& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json mat_to_json_cols(const Mat& m) {
  Json a = Json::array();
  for (Eigen::Index c = 0; c < m.cols(); ++c) a.push_back(vec_to_json(m.col(c)));
  return a;
}

Json mat_to_json_rows(const Mat& m) {
  Json a = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    a.push_back(vec_to_json(m.row(r).transpose()));
  return a;
}

Vec vec_from_json(const Json& j) {
  if (!j.is_array()) parse_error("expected an array of numbers");
  Vec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& el : j) v(i++) = el.get<double>();
  return v;
}

Mat mat_from_json_rows(const Json& j) {
  if (!j.is_array() || j.empty()) parse_error("expected an array of arrays");
  const auto rows = static_cast<Eigen::Index>(j.size());
  Vec first = vec_from_json(j.at(0));
  Mat m(rows, first.size());
  m.row(0) = first.transpose();
  for (Eigen::Index r = 1; r < rows; ++r) {
    Vec v = vec_from_json(j.at(static_cast<size_t>(r)));
    if (v.size() != m.cols()) parse_error("ragged matrix rows");
    m.row(r) = v.transpose();
  }
  return m;
}

}  // namespace opkit
