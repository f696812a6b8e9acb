#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "ridematch/types.hpp"

namespace ridematch {

struct Link {
  NodeId from;
  NodeId to;
  double length_m = 0.0;
  Seconds travel_time = 0;
};

class UnknownNodeError : public Error {
 public:
  explicit UnknownNodeError(NodeId id);
};

/// Directed road graph with static link travel times.
///
/// Immutable after construction. Shortest-path rows are computed lazily per
/// source (and per target, for path extraction) and cached; concurrent
/// queries from several threads are safe.
class RoadNetwork {
 public:
  /// Validates and indexes the graph. Node ids must be unique, every link
  /// endpoint must be a listed node, travel times and lengths must be
  /// positive and links may not be self-loops. Throws ValidationError.
  RoadNetwork(std::vector<NodeId> nodes, std::vector<Link> links);

  /// Node ids in ascending order.
  std::span<const NodeId> nodes() const { return nodes_; }
  std::span<const Link> links() const { return links_; }
  std::size_t node_count() const { return nodes_.size(); }
  bool contains(NodeId id) const { return index_.contains(id); }

  /// Indices into links() of the links leaving `id`.
  std::span<const std::size_t> out_links(NodeId id) const;

  /// Minimal travel time over any directed path, nullopt if unreachable.
  std::optional<Seconds> shortest_travel_time(NodeId from, NodeId to) const;

  /// Node sequence of a shortest path, both endpoints included. Among
  /// equal-cost continuations the one with the smallest next node id wins.
  std::optional<std::vector<NodeId>> shortest_path(NodeId from,
                                                   NodeId to) const;

  /// First link of the canonical shortest path from `from` towards `to`;
  /// nullopt when from == to or `to` is unreachable.
  std::optional<std::size_t> next_link(NodeId from, NodeId to) const;

  /// Sum of link lengths along the canonical shortest path.
  std::optional<double> path_length_m(NodeId from, NodeId to) const;

 private:
  struct Cache;

  std::size_t index_of(NodeId id) const;
  const std::vector<Seconds>& from_row(std::size_t source) const;
  const std::vector<Seconds>& to_row(std::size_t target) const;

  std::vector<NodeId> nodes_;
  std::vector<Link> links_;
  std::unordered_map<NodeId, std::size_t> index_;
  std::vector<std::vector<std::size_t>> out_;
  std::vector<std::vector<std::size_t>> in_;
  std::shared_ptr<Cache> cache_;
};

/// Parses the JSON network document:
///
///   {"nodes": [{"id": 1}, ...],
///    "links": [{"from": 1, "to": 2, "length_m": 400, "travel_time_s": 60}]}
///
/// Unknown fields are rejected. Throws ParseError or ValidationError.
RoadNetwork load_network(const std::string& document);
RoadNetwork load_network_file(const std::string& path);

std::string dump_network(const RoadNetwork& net);

/// Bidirectional rows x cols grid; node id = row * cols + col.
RoadNetwork make_grid_network(int rows, int cols, double link_length_m,
                              Seconds link_travel_time);

}  // namespace ridematch
