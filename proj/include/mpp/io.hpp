#pragma once

#include <string>

#include "mpp/core.hpp"

// Text file formats. Instance: {vertices:[{id,label?}], edges:[[u,v]],
// robots:[{id,start,goal?,group?}], groups?:{gid:[goal ids]}}.
// Plan: {horizon:T, paths:{robot id:[v_0..v_T]}}. Ids are decimal integers.

namespace mpp::io {

std::string instance_to_json(const MppInstance& instance);
MppInstance instance_from_json(const std::string& text);

std::string plan_to_json(const Plan& plan);
Plan plan_from_json(const std::string& text);

MppInstance load_instance(const std::string& path);
Plan load_plan(const std::string& path);
void save_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

// FNV-1a over the raw bytes, hex encoded; used for run records.
std::string digest(const std::string& bytes);

}  // namespace mpp::io
