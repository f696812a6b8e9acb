#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string_view>

#include "json.hpp"
#include "json_util.hpp"
#include "ridematch/network.hpp"

namespace ridematch {

using nlohmann::json;

RoadNetwork load_network(const std::string& document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("network: ") + e.what());
  }
  detail::require_object(doc, "network");
  detail::reject_unknown(doc, "network", {"nodes", "links"});

  std::vector<NodeId> nodes;
  for (const auto& node : detail::require_array(doc, "nodes", "network")) {
    detail::require_object(node, "network node");
    detail::reject_unknown(node, "network node", {"id"});
    nodes.emplace_back(detail::require_int(node, "id", "network node"));
  }

  std::vector<Link> links;
  if (doc.contains("links")) {
    for (const auto& item : detail::require_array(doc, "links", "network")) {
      detail::require_object(item, "network link");
      detail::reject_unknown(item, "network link",
                             {"from", "to", "length_m", "travel_time_s"});
      Link link;
      link.from = NodeId{detail::require_int(item, "from", "network link")};
      link.to = NodeId{detail::require_int(item, "to", "network link")};
      link.length_m = detail::require_number(item, "length_m", "network link");
      link.travel_time = detail::require_int(item, "travel_time_s", "network link");
      links.push_back(link);
    }
  }
  return RoadNetwork(std::move(nodes), std::move(links));
}

RoadNetwork load_network_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open network file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return load_network(buffer.str());
}

std::string dump_network(const RoadNetwork& net) {
  json doc;
  doc["nodes"] = json::array();
  for (NodeId id : net.nodes()) doc["nodes"].push_back({{"id", id.value}});
  doc["links"] = json::array();
  for (const Link& link : net.links()) {
    doc["links"].push_back({{"from", link.from.value},
                            {"to", link.to.value},
                            {"length_m", link.length_m},
                            {"travel_time_s", link.travel_time}});
  }
  return doc.dump(1);
}

}  // namespace ridematch
