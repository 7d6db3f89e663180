#ifndef TOPAL_MODEL_IO_HPP_
#define TOPAL_MODEL_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "topal/model.hpp"

namespace topal {

/// Loads the JSON model format:
///
///   { "points": [id...], "agents": [id...],
///     "subbase": [[id...]...],
///     "generators": [{"name": s, "cells": {agent: [[id...]...]}}...],
///     "valuation": {prop: [id...]} }
///
/// Structural problems (unknown points or agents, wrong JSON types) throw
/// ModelError naming the offending location. Semantic conditions such as
/// openness or partitioning are left to validate().
TopoModel load_model_json(std::string_view text);
TopoModel load_model_file(const std::filesystem::path& path);

/// Serializes to the same format. The topology is written as the base of
/// minimal neighbourhoods and each generator as its distinct cells.
std::string model_to_json(const TopoModel& model, int indent = 2);

/// The bundled jewel-in-the-tomb model (points jdt bit strings; generators
/// "theta" and "thetaPrime").
std::string_view jewel_model_json();
TopoModel jewel_model();

}  // namespace topal

#endif  // TOPAL_MODEL_IO_HPP_
