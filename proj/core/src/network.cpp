#include "ridematch/network.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <mutex>
#include <queue>
#include <utility>

namespace ridematch {

namespace {

constexpr Seconds kUnreachable = std::numeric_limits<Seconds>::max();

using AdjacencyList = std::vector<std::vector<std::size_t>>;

// Single-source Dijkstra. `forward` walks out-links from the source; the
// reverse variant walks in-links, giving distances *to* the source.
std::vector<Seconds> dijkstra(std::size_t source, const AdjacencyList& adj,
                              const std::vector<Link>& links,
                              const std::unordered_map<NodeId, std::size_t>& index,
                              bool forward) {
  std::vector<Seconds> dist(adj.size(), kUnreachable);
  using Entry = std::pair<Seconds, std::size_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[source] = 0;
  heap.emplace(0, source);
  while (!heap.empty()) {
    auto [d, u] = heap.top();
    heap.pop();
    if (d != dist[u]) continue;
    for (std::size_t li : adj[u]) {
      const Link& link = links[li];
      std::size_t v = index.at(forward ? link.to : link.from);
      Seconds nd = d + link.travel_time;
      if (nd < dist[v]) {
        dist[v] = nd;
        heap.emplace(nd, v);
      }
    }
  }
  return dist;
}

}  // namespace

UnknownNodeError::UnknownNodeError(NodeId id)
    : Error("unknown node id " + std::to_string(id.value)) {}

struct RoadNetwork::Cache {
  explicit Cache(std::size_t n)
      : from(n), to(n), from_once(n), to_once(n) {}

  std::vector<std::vector<Seconds>> from;
  std::vector<std::vector<Seconds>> to;
  std::vector<std::once_flag> from_once;
  std::vector<std::once_flag> to_once;
};

RoadNetwork::RoadNetwork(std::vector<NodeId> nodes, std::vector<Link> links)
    : nodes_(std::move(nodes)), links_(std::move(links)) {
  std::sort(nodes_.begin(), nodes_.end());
  if (std::adjacent_find(nodes_.begin(), nodes_.end()) != nodes_.end()) {
    throw ValidationError("duplicate node id in network");
  }
  index_.reserve(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) index_.emplace(nodes_[i], i);

  out_.resize(nodes_.size());
  in_.resize(nodes_.size());
  for (std::size_t li = 0; li < links_.size(); ++li) {
    const Link& link = links_[li];
    auto from = index_.find(link.from);
    auto to = index_.find(link.to);
    if (from == index_.end() || to == index_.end()) {
      NodeId missing = from == index_.end() ? link.from : link.to;
      throw ValidationError("link " + std::to_string(link.from.value) + "->" +
                            std::to_string(link.to.value) +
                            " references unknown node " +
                            std::to_string(missing.value));
    }
    if (link.from == link.to) {
      throw ValidationError("self-loop link at node " +
                            std::to_string(link.from.value));
    }
    if (link.travel_time <= 0) {
      throw ValidationError("non-positive travel time on link " +
                            std::to_string(link.from.value) + "->" +
                            std::to_string(link.to.value));
    }
    if (!(link.length_m > 0.0)) {
      throw ValidationError("non-positive length on link " +
                            std::to_string(link.from.value) + "->" +
                            std::to_string(link.to.value));
    }
    out_[from->second].push_back(li);
    in_[to->second].push_back(li);
  }
  cache_ = std::make_shared<Cache>(nodes_.size());
}

std::size_t RoadNetwork::index_of(NodeId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw UnknownNodeError(id);
  return it->second;
}

std::span<const std::size_t> RoadNetwork::out_links(NodeId id) const {
  return out_[index_of(id)];
}

const std::vector<Seconds>& RoadNetwork::from_row(std::size_t source) const {
  std::call_once(cache_->from_once[source], [&] {
    cache_->from[source] = dijkstra(source, out_, links_, index_, true);
  });
  return cache_->from[source];
}

const std::vector<Seconds>& RoadNetwork::to_row(std::size_t target) const {
  std::call_once(cache_->to_once[target], [&] {
    cache_->to[target] = dijkstra(target, in_, links_, index_, false);
  });
  return cache_->to[target];
}

std::optional<Seconds> RoadNetwork::shortest_travel_time(NodeId from,
                                                         NodeId to) const {
  std::size_t s = index_of(from);
  std::size_t t = index_of(to);
  Seconds d = from_row(s)[t];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

std::optional<std::size_t> RoadNetwork::next_link(NodeId from,
                                                  NodeId to) const {
  std::size_t s = index_of(from);
  std::size_t t = index_of(to);
  if (s == t) return std::nullopt;
  const auto& dist_to = to_row(t);
  if (dist_to[s] == kUnreachable) return std::nullopt;

  std::optional<std::size_t> best;
  for (std::size_t li : out_[s]) {
    const Link& link = links_[li];
    Seconds rest = dist_to[index_.at(link.to)];
    if (rest == kUnreachable || link.travel_time + rest != dist_to[s]) continue;
    if (!best) {
      best = li;
      continue;
    }
    const Link& cur = links_[*best];
    if (std::tie(link.to, link.length_m) < std::tie(cur.to, cur.length_m)) {
      best = li;
    }
  }
  return best;
}

std::optional<std::vector<NodeId>> RoadNetwork::shortest_path(NodeId from,
                                                              NodeId to) const {
  if (!shortest_travel_time(from, to)) return std::nullopt;
  std::vector<NodeId> path{from};
  NodeId at = from;
  while (at != to) {
    at = links_[*next_link(at, to)].to;
    path.push_back(at);
  }
  return path;
}

std::optional<double> RoadNetwork::path_length_m(NodeId from, NodeId to) const {
  if (!shortest_travel_time(from, to)) return std::nullopt;
  double total = 0.0;
  NodeId at = from;
  while (at != to) {
    const Link& link = links_[*next_link(at, to)];
    total += link.length_m;
    at = link.to;
  }
  return total;
}

RoadNetwork make_grid_network(int rows, int cols, double link_length_m,
                              Seconds link_travel_time) {
  if (rows < 1 || cols < 1) throw ValidationError("grid needs rows, cols >= 1");
  std::vector<NodeId> nodes;
  std::vector<Link> links;
  auto id = [cols](int r, int c) { return NodeId{r * cols + c}; };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      nodes.push_back(id(r, c));
      if (c + 1 < cols) {
        links.push_back({id(r, c), id(r, c + 1), link_length_m, link_travel_time});
        links.push_back({id(r, c + 1), id(r, c), link_length_m, link_travel_time});
      }
      if (r + 1 < rows) {
        links.push_back({id(r, c), id(r + 1, c), link_length_m, link_travel_time});
        links.push_back({id(r + 1, c), id(r, c), link_length_m, link_travel_time});
      }
    }
  }
  return RoadNetwork(std::move(nodes), std::move(links));
}

}  // namespace ridematch
