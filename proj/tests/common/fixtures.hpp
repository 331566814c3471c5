#pragma once

/// Shared sieve-problem fixtures. kSixPlusOne pushes y^2 = x^6 + 1 through
/// (x, y) -> (x^2, y) onto y^2 = x^3 + 1 with its full 6-element
/// Mordell-Weil group; every known rational point survives, so the run ends
/// SURVIVORS. kSixPlusTwo does the same for y^2 = x^6 + 2 onto
/// y^2 = x^3 + 2 with free generator (-1, 1) and affine-only conditions,
/// and dies at p = 7. kSixMinusOne maps y^2 = x^6 - 1 onto y^2 = x^3 - 1,
/// whose Mordell-Weil group is the 2-torsion point (1, 0) alone.

namespace fixtures {

inline const char* kSixPlusOne = R"JSON({
  "curve": {"f": ["1","0","0","0","0","0","1"]},
  "target": {"f": ["1","0","0","1"]},
  "morphism": {
    "x_num": ["0","0","1"],
    "x_den": ["1"],
    "y_num": ["1"],
    "y_den": ["1"],
    "exceptional": [
      {"source": {"kind": "infinity_plus"}, "image": {"kind": "infinity"}},
      {"source": {"kind": "infinity_minus"}, "image": {"kind": "infinity"}}
    ]
  },
  "subgroup": {
    "assumption": "the supplied torsion point (2,3) of order 6 generates the full Mordell-Weil group of the target",
    "free": [],
    "torsion": [{"generator": {"point": {"kind": "affine", "x": "2", "y": "3"}}, "order": 6}]
  },
  "N": 6,
  "S": [5, 7, 11, 13],
  "conditions": {"affine_only": false, "per_prime": []}
})JSON";

inline const char* kSixPlusTwo = R"JSON({
  "curve": {"f": ["2","0","0","0","0","0","1"]},
  "target": {"f": ["2","0","0","1"]},
  "morphism": {
    "x_num": ["0","0","1"],
    "x_den": ["1"],
    "y_num": ["1"],
    "y_den": ["1"],
    "exceptional": [
      {"source": {"kind": "infinity_plus"}, "image": {"kind": "infinity"}},
      {"source": {"kind": "infinity_minus"}, "image": {"kind": "infinity"}}
    ]
  },
  "subgroup": {
    "assumption": "the point (-1,1) generates the Mordell-Weil group of the target, which is free of rank one",
    "free": [{"point": {"kind": "affine", "x": "-1", "y": "1"}}],
    "torsion": []
  },
  "N": 24,
  "S": [5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97],
  "conditions": {"affine_only": true, "per_prime": []}
})JSON";

inline const char* kSixMinusOne = R"JSON({
  "curve": {"f": ["-1","0","0","0","0","0","1"]},
  "target": {"f": ["-1","0","0","1"]},
  "morphism": {
    "x_num": ["0","0","1"],
    "x_den": ["1"],
    "y_num": ["1"],
    "y_den": ["1"],
    "exceptional": [
      {"source": {"kind": "infinity_plus"}, "image": {"kind": "infinity"}},
      {"source": {"kind": "infinity_minus"}, "image": {"kind": "infinity"}}
    ]
  },
  "subgroup": {
    "assumption": "the 2-torsion point (1,0) generates the full Mordell-Weil group of the target",
    "free": [],
    "torsion": [{"generator": {"point": {"kind": "affine", "x": "1", "y": "0"}}, "order": 2}]
  },
  "N": 2,
  "S": [5, 7, 11, 13],
  "conditions": {"affine_only": false, "per_prime": []}
})JSON";

} // namespace fixtures
