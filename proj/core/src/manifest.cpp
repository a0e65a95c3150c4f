//
// Copyright 2026 The IGT Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "igt/manifest.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "igt/error.hpp"

namespace igt {

namespace {

using json = nlohmann::json;

const std::unordered_set<std::string> kKnownKeys = {
    "id", "target_id", "receptor_path", "ligand_path",
    "pose_index", "label", "rmsd"};

std::string require_string(const json &obj, const char *key, long line_no) {
  if (!obj.contains(key))
    throw ParseError(std::string("missing required field '") + key + "'",
                     line_no);
  if (!obj[key].is_string())
    throw ParseError(std::string("field '") + key + "' must be a string",
                     line_no);
  return obj[key].get<std::string>();
}

} // namespace

std::vector<ExampleRecord> read_manifest(std::istream &in) {
  std::vector<ExampleRecord> out;
  std::unordered_set<std::string> ids;
  std::string line;
  long line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos)
      continue;
    json obj;
    try {
      obj = json::parse(line);
    } catch (const json::exception &e) {
      throw ParseError(std::string("invalid manifest record: ") + e.what(),
                       line_no);
    }
    if (!obj.is_object())
      throw ParseError("manifest record is not an object", line_no);
    for (const auto &item : obj.items()) {
      if (!kKnownKeys.count(item.key()))
        throw ParseError("unknown manifest key '" + item.key() + "'", line_no);
    }

    ExampleRecord rec;
    rec.id = require_string(obj, "id", line_no);
    rec.target_id = require_string(obj, "target_id", line_no);
    rec.receptor_path = require_string(obj, "receptor_path", line_no);
    rec.ligand_path = require_string(obj, "ligand_path", line_no);
    if (!obj.contains("pose_index"))
      throw ParseError("missing required field 'pose_index'", line_no);
    if (!obj["pose_index"].is_number_integer() ||
        obj["pose_index"].get<long long>() < 0)
      throw ParseError("pose_index must be a non-negative integer", line_no);
    rec.pose_index = obj["pose_index"].get<int>();

    if (obj.contains("label")) {
      if (!obj["label"].is_number_integer())
        throw ParseError("label must be 0 or 1", line_no);
      const int v = obj["label"].get<int>();
      if (v != 0 && v != 1)
        throw ParseError("label must be 0 or 1", line_no);
      rec.label = v;
    }
    if (obj.contains("rmsd")) {
      if (!obj["rmsd"].is_number())
        throw ParseError("rmsd must be a number", line_no);
      const double v = obj["rmsd"].get<double>();
      if (!(v >= 0))
        throw ParseError("rmsd must be >= 0", line_no);
      rec.rmsd = v;
    }

    if (!ids.insert(rec.id).second)
      throw ParseError("duplicate id '" + rec.id + "'", line_no);
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<ExampleRecord> read_manifest(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw Error("cannot open manifest: " + path);
  return read_manifest(in);
}

std::string manifest_line(const ExampleRecord &rec) {
  nlohmann::ordered_json obj;
  obj["id"] = rec.id;
  obj["target_id"] = rec.target_id;
  obj["receptor_path"] = rec.receptor_path;
  obj["ligand_path"] = rec.ligand_path;
  obj["pose_index"] = rec.pose_index;
  if (rec.label)
    obj["label"] = *rec.label;
  if (rec.rmsd)
    obj["rmsd"] = *rec.rmsd;
  return obj.dump();
}

void write_manifest(std::ostream &out, const std::vector<ExampleRecord> &recs) {
  for (const ExampleRecord &rec : recs)
    out << manifest_line(rec) << "\n";
}

void write_manifest(const std::string &path,
                    const std::vector<ExampleRecord> &recs) {
  std::ofstream out(path);
  if (!out)
    throw Error("cannot write manifest: " + path);
  write_manifest(out, recs);
}

} // namespace igt
