#include "keyrate/factored_pmf_json.hpp"

#include <fstream>
#include <vector>

#include "keyrate/errors.hpp"

namespace keyrate {

using nlohmann::json;

namespace {

void flatten(const json& node, const std::vector<std::size_t>& dims, std::size_t depth,
             const std::string& where, std::vector<double>& out) {
  if (depth == dims.size()) {
    if (!node.is_number()) throw DomainError(where + ": expected a number");
    out.push_back(node.get<double>());
    return;
  }
  if (!node.is_array() || node.size() != dims[depth]) {
    throw DomainError(where + ": expected an array of length " + std::to_string(dims[depth]));
  }
  for (std::size_t i = 0; i < node.size(); ++i) {
    flatten(node[i], dims, depth + 1, where + "[" + std::to_string(i) + "]", out);
  }
}

std::vector<double> read_factor(const json& doc, const char* name,
                                const std::vector<std::size_t>& dims) {
  if (!doc.contains(name)) throw DomainError(std::string("missing factor '") + name + "'");
  std::vector<double> out;
  flatten(doc.at(name), dims, 0, name, out);
  return out;
}

json nest(const std::vector<double>& flat, const std::vector<std::size_t>& dims,
          std::size_t depth, std::size_t& pos) {
  if (depth == dims.size()) return flat[pos++];
  json arr = json::array();
  for (std::size_t i = 0; i < dims[depth]; ++i) arr.push_back(nest(flat, dims, depth + 1, pos));
  return arr;
}

json nest(const std::vector<double>& flat, const std::vector<std::size_t>& dims) {
  std::size_t pos = 0;
  return nest(flat, dims, 0, pos);
}

}  // namespace

FactoredPmf factored_pmf_from_json(const json& doc) {
  if (!doc.is_object()) throw DomainError("FactoredPmf document must be a JSON object");
  if (!doc.contains("alphabets") || !doc.at("alphabets").is_object()) {
    throw DomainError("missing object 'alphabets'");
  }
  const json& al = doc.at("alphabets");
  auto size_of = [&](const char* key) -> std::size_t {
    if (!al.contains(key) || !al.at(key).is_number_integer() || al.at(key).get<long long>() < 1) {
      throw DomainError(std::string("alphabets.") + key + " must be a positive integer");
    }
    return al.at(key).get<std::size_t>();
  };

  FactoredPmf f;
  auto& a = f.alphabets;
  a.v1f = size_of("v1f");
  a.v2f = size_of("v2f");
  a.x1 = size_of("x1");
  a.x2 = size_of("x2");
  a.y1 = size_of("y1");
  a.y2 = size_of("y2");
  a.v1b = size_of("v1b");
  a.v2b = size_of("v2b");

  f.p_v1f = read_factor(doc, "p_v1f", {a.v1f});
  f.p_v2f = read_factor(doc, "p_v2f", {a.v2f});
  f.p_x1_given_v1f = read_factor(doc, "p_x1_given_v1f", {a.v1f, a.x1});
  f.p_x2_given_v2f = read_factor(doc, "p_x2_given_v2f", {a.v2f, a.x2});
  f.p_y_given_x = read_factor(doc, "p_y_given_x", {a.x1, a.x2, a.y1, a.y2});
  f.p_v1b_given_y1 = read_factor(doc, "p_v1b_given_y1", {a.y1, a.v1b});
  f.p_v2b_given_y2 = read_factor(doc, "p_v2b_given_y2", {a.y2, a.v2b});
  f.validate();
  return f;
}

json factored_pmf_to_json(const FactoredPmf& f) {
  const auto& a = f.alphabets;
  json doc;
  doc["alphabets"] = {{"v1f", a.v1f}, {"v2f", a.v2f}, {"x1", a.x1},   {"x2", a.x2},
                      {"y1", a.y1},   {"y2", a.y2},   {"v1b", a.v1b}, {"v2b", a.v2b}};
  doc["p_v1f"] = nest(f.p_v1f, {a.v1f});
  doc["p_v2f"] = nest(f.p_v2f, {a.v2f});
  doc["p_x1_given_v1f"] = nest(f.p_x1_given_v1f, {a.v1f, a.x1});
  doc["p_x2_given_v2f"] = nest(f.p_x2_given_v2f, {a.v2f, a.x2});
  doc["p_y_given_x"] = nest(f.p_y_given_x, {a.x1, a.x2, a.y1, a.y2});
  doc["p_v1b_given_y1"] = nest(f.p_v1b_given_y1, {a.y1, a.v1b});
  doc["p_v2b_given_y2"] = nest(f.p_v2b_given_y2, {a.y2, a.v2b});
  return doc;
}

FactoredPmf load_factored_pmf(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw DomainError("malformed JSON in '" + path.string() + "': " + e.what());
  }
  return factored_pmf_from_json(doc);
}

}  // namespace keyrate
