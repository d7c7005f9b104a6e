// Copyright (c) 2026 The opkit authors
//
// Licensed under the Apache License, Version 2.0. See the LICENSE file
// in the project root for license terms.
//
// Theory file loading/saving and deterministic JSON report printing.
//
// Theory file (UTF-8 JSON):
//   {
//     "version": 1,
//     "kind": "quantum" | "classical" | "gbit" | "explicit",
//     "d": 2,                        // quantum only
//     "k": 2,                        // classical only
//     "explicit": {                  // kind == "explicit" only
//       "n": 3,
//       "unit_effect": [1, 0, 0],
//       "extreme_states": [[1, 1, 1], ...]   // one state per entry
//     },
//     "declared_idim": {             // optional
//       "value": 2,
//       "witness_states": [[...], ...],
//       "witness_effects": [[...], ...]
//     },
//     "faithful_state": "bell"                       // quantum
//                     | {"correlated": [p_1, ...]}   // classical
//                     | {"coords": [...]}            // joint coordinates
//   }

#ifndef OPKIT_IO_HPP
#define OPKIT_IO_HPP

#include <optional>
#include <string>

#include "json.hpp"

#include "opkit/faithful.hpp"
#include "opkit/theory.hpp"

namespace opkit {

using Json = nlohmann::ordered_json;

struct LoadedTheory {
  std::string kind;
  TheoryPtr theory;
  std::optional<BipartiteState> faithful;
};

LoadedTheory load_theory_json(const std::string& text);
LoadedTheory load_theory_file(const std::string& path);

/// Coordinate-exact serialization back to the file format.
Json save_theory(const LoadedTheory& loaded);

/// Deterministic JSON printing: keys in insertion order, doubles with 17
/// significant digits, two-space indent.
std::string dump_json(const Json& j, int indent = 2);

Json vec_to_json(const Vec& v);
Json mat_to_json_cols(const Mat& m);  // array of columns
Json mat_to_json_rows(const Mat& m);  // array of rows
Vec vec_from_json(const Json& j);
Mat mat_from_json_rows(const Json& j);

}  // namespace opkit

#endif
