#include "topal/model_io.hpp"

namespace topal {

// Keep in sync with data/jewel.json (checked by the model tests).
std::string_view jewel_model_json() {
  static constexpr std::string_view kJewel = R"json({
  "points": ["000", "001", "010", "011", "100", "101", "110", "111"],
  "agents": ["i", "e"],
  "subbase": [
    ["000", "100", "001", "101"],
    ["010"],
    ["110"],
    ["011"],
    ["111"]
  ],
  "generators": [
    {
      "name": "theta",
      "cells": {
        "i": [["000", "001", "010", "011", "100", "101", "110", "111"]],
        "e": [["000", "001", "010", "011", "100", "101", "110", "111"]]
      }
    },
    {
      "name": "thetaPrime",
      "cells": {
        "i": [["000", "001", "010", "011", "100", "101", "110", "111"]],
        "e": [["101", "100", "001", "000"], ["111", "011"], ["110", "010"]]
      }
    }
  ],
  "valuation": {
    "j": ["100", "101", "110", "111"],
    "d": ["010", "011", "110", "111"],
    "t": ["001", "011", "101", "111"]
  }
}
)json";
  return kJewel;
}

TopoModel jewel_model() { return load_model_json(jewel_model_json()); }

}  // namespace topal
