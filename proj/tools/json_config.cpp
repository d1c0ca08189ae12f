#include "json_config.hpp"

#include <json.hpp>

#include "dipolewave/table.hpp"

namespace dipolewave::cli {

namespace {

using nlohmann::json;

std::string scalar_to_string(const json& value, const std::string& key) {
  if (value.is_boolean()) return value.get<bool>() ? "true" : "false";
  if (value.is_number_integer()) return std::to_string(value.get<long long>());
  if (value.is_number()) return figures::format_number(value.get<double>());
  if (value.is_string()) return value.get<std::string>();
  throw CLI::ConversionError("config: unsupported value for '" + key + "'");
}

void flatten(const json& node, const std::string& name, const std::vector<std::string>& parents,
             std::vector<CLI::ConfigItem>& out) {
  if (node.is_object()) {
    std::vector<std::string> next = parents;
    if (!name.empty()) next.push_back(name);
    for (auto it = node.begin(); it != node.end(); ++it) flatten(*it, it.key(), next, out);
    return;
  }
  if (name.empty()) throw CLI::ConversionError("config: top level must be a JSON object");
  CLI::ConfigItem item;
  item.name = name;
  item.parents = parents;
  if (node.is_array()) {
    for (const auto& v : node) item.inputs.push_back(scalar_to_string(v, name));
  } else {
    item.inputs = {scalar_to_string(node, name)};
  }
  out.push_back(std::move(item));
}

void dump_app(const CLI::App* app, bool default_also, json& node) {
  for (const CLI::Option* opt : app->get_options()) {
    if (opt->get_lnames().empty() || !opt->get_configurable()) continue;
    const std::string& key = opt->get_lnames().front();
    if (opt->count() > 0) {
      const auto& results = opt->results();
      if (results.size() == 1) {
        node[key] = results.front();
      } else {
        node[key] = results;
      }
    } else if (default_also && !opt->get_default_str().empty()) {
      node[key] = opt->get_default_str();
    }
  }
  for (const CLI::App* sub : app->get_subcommands({})) {
    if (sub->count() == 0 && !default_also) continue;
    json child = json::object();
    dump_app(sub, default_also, child);
    node[sub->get_name()] = child;
  }
}

}  // namespace

std::string JsonConfig::to_config(const CLI::App* app, bool default_also, bool, std::string) const {
  json doc = json::object();
  dump_app(app, default_also, doc);
  return doc.dump(2);
}

std::vector<CLI::ConfigItem> JsonConfig::from_config(std::istream& input) const {
  json doc;
  try {
    input >> doc;
  } catch (const json::exception& e) {
    throw CLI::ConversionError(std::string("config: invalid JSON: ") + e.what());
  }
  std::vector<CLI::ConfigItem> items;
  flatten(doc, "", {}, items);
  return items;
}

}  // namespace dipolewave::cli
