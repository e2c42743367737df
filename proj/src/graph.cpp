#include "evograph/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace evograph {

namespace {

constexpr std::uint32_t kNoPos = 0xFFFFFFFFu;

void list_insert(std::vector<EdgeId>& list, std::vector<std::uint32_t>& pos, EdgeId e) {
  if (pos.size() <= e) pos.resize(e + 1, kNoPos);
  pos[e] = static_cast<std::uint32_t>(list.size());
  list.push_back(e);
}

void list_remove(std::vector<EdgeId>& list, std::vector<std::uint32_t>& pos, EdgeId e) {
  std::uint32_t p = pos.at(e);
  if (p == kNoPos) throw std::logic_error("edge not in live list");
  EdgeId last = list.back();
  list[p] = last;
  pos[last] = p;
  list.pop_back();
  pos[e] = kNoPos;
}

void arc_remove(std::vector<Arc>& arcs, EdgeId e) {
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].edge == e) {
      arcs[i] = arcs.back();
      arcs.pop_back();
      return;
    }
  }
  throw std::logic_error("arc for retired edge not found");
}

}  // namespace

GrowingGraph::GrowingGraph(GraphMode mode) : mode_(mode) {}

void GrowingGraph::set_root(VertexId r) {
  check_vertex(r);
  root_ = r;
}

void GrowingGraph::check_vertex(VertexId v) const {
  if (v >= vertex_birth_.size()) throw std::out_of_range("vertex id out of range");
}

VertexId GrowingGraph::add_vertex(std::uint32_t birth) {
  auto id = static_cast<VertexId>(vertex_birth_.size());
  vertex_birth_.push_back(birth);
  if (mode_ == GraphMode::Undirected) {
    deg_.push_back(0);
    adj_.emplace_back();
  } else {
    outdeg_.push_back(0);
    indeg_.push_back(0);
    out_adj_.emplace_back();
    in_adj_.emplace_back();
  }
  return id;
}

void GrowingGraph::bump_counts(const EdgeRecord& rec, int sign) {
  auto s = static_cast<std::int64_t>(sign);
  switch (rec.kind) {
    case EdgeKind::Proper:
      live_proper_ += sign;
      if (mode_ == GraphMode::Undirected) {
        deg_[rec.tail] += s;
        deg_[rec.head] += s;
      } else {
        outdeg_[rec.tail] += s;
        indeg_[rec.head] += s;
      }
      total_degree_ += 2 * s;
      break;
    case EdgeKind::Loop:
      live_loop_ += sign;
      deg_[rec.tail] += 2 * s;
      total_degree_ += 2 * s;
      break;
    case EdgeKind::Headless:
      live_headless_ += sign;
      outdeg_[rec.tail] += s;
      total_degree_ += s;
      break;
    case EdgeKind::Tailless:
      live_tailless_ += sign;
      indeg_[rec.head] += s;
      total_degree_ += s;
      break;
  }
}

EdgeId GrowingGraph::add_edge(EdgeKind kind, VertexId tail, VertexId head,
                              std::uint32_t birth) {
  switch (mode_) {
    case GraphMode::Undirected:
      if (kind == EdgeKind::Headless || kind == EdgeKind::Tailless)
        throw std::invalid_argument("dummy edges need GeneralizedDirected mode");
      if (kind == EdgeKind::Proper && tail == head)
        throw std::invalid_argument("undirected self-edge must use EdgeKind::Loop");
      if (kind == EdgeKind::Loop && tail != head)
        throw std::invalid_argument("loop endpoints must coincide");
      break;
    case GraphMode::Directed:
      if (kind != EdgeKind::Proper)
        throw std::invalid_argument("directed mode has proper edges only");
      break;
    case GraphMode::GeneralizedDirected:
      if (kind == EdgeKind::Loop)
        throw std::invalid_argument("loop kind is undirected-only");
      break;
  }

  EdgeRecord rec;
  rec.kind = kind;
  rec.birth = birth;
  if (kind == EdgeKind::Headless) {
    check_vertex(tail);
    if (head != kNoVertex) throw std::invalid_argument("headless edge cannot carry a head");
    rec.tail = tail;
  } else if (kind == EdgeKind::Tailless) {
    check_vertex(head);
    if (tail != kNoVertex) throw std::invalid_argument("tailless edge cannot carry a tail");
    rec.head = head;
  } else {
    check_vertex(tail);
    check_vertex(head);
    if (mode_ == GraphMode::Undirected && tail > head) std::swap(tail, head);
    rec.tail = tail;
    rec.head = head;
  }

  auto id = static_cast<EdgeId>(edges_.size());
  edges_.push_back(rec);
  list_insert(live_, live_pos_, id);
  if (mode_ != GraphMode::Undirected) {
    if (rec.head != kNoVertex) list_insert(headed_, headed_pos_, id);
    if (rec.tail != kNoVertex) list_insert(tailed_, tailed_pos_, id);
  }
  bump_counts(rec, +1);

  if (kind == EdgeKind::Proper) {
    if (mode_ == GraphMode::Undirected) {
      adj_[rec.tail].push_back({rec.head, id});
      adj_[rec.head].push_back({rec.tail, id});
    } else {
      out_adj_[rec.tail].push_back({rec.head, id});
      in_adj_[rec.head].push_back({rec.tail, id});
    }
  } else if (kind == EdgeKind::Loop) {
    adj_[rec.tail].push_back({rec.tail, id});
  }
  return id;
}

EdgeId GrowingGraph::replace_edge(EdgeId retired, EdgeKind kind, VertexId tail,
                                  VertexId head, std::uint32_t birth) {
  EdgeRecord& old = edges_.at(retired);
  if (old.retired) throw std::invalid_argument("edge already retired");
  old.retired = true;
  list_remove(live_, live_pos_, retired);
  if (mode_ != GraphMode::Undirected) {
    if (old.head != kNoVertex) list_remove(headed_, headed_pos_, retired);
    if (old.tail != kNoVertex) list_remove(tailed_, tailed_pos_, retired);
  }
  bump_counts(old, -1);
  if (old.kind == EdgeKind::Proper) {
    if (mode_ == GraphMode::Undirected) {
      arc_remove(adj_[old.tail], retired);
      arc_remove(adj_[old.head], retired);
    } else {
      arc_remove(out_adj_[old.tail], retired);
      arc_remove(in_adj_[old.head], retired);
    }
  } else if (old.kind == EdgeKind::Loop) {
    arc_remove(adj_[old.tail], retired);
  }
  return add_edge(kind, tail, head, birth);
}

std::uint64_t GrowingGraph::degree(VertexId v) const {
  check_vertex(v);
  if (mode_ == GraphMode::Undirected) return deg_[v];
  return outdeg_[v] + indeg_[v];
}

std::uint64_t GrowingGraph::out_degree(VertexId v) const {
  check_vertex(v);
  if (mode_ == GraphMode::Undirected)
    throw std::invalid_argument("out_degree needs a directed mode");
  return outdeg_[v];
}

std::uint64_t GrowingGraph::in_degree(VertexId v) const {
  check_vertex(v);
  if (mode_ == GraphMode::Undirected)
    throw std::invalid_argument("in_degree needs a directed mode");
  return indeg_[v];
}

const std::vector<EdgeId>& GrowingGraph::headed_edges() const {
  if (mode_ == GraphMode::Undirected)
    throw std::invalid_argument("headed_edges needs a directed mode");
  return headed_;
}

const std::vector<EdgeId>& GrowingGraph::tailed_edges() const {
  if (mode_ == GraphMode::Undirected)
    throw std::invalid_argument("tailed_edges needs a directed mode");
  return tailed_;
}

const std::vector<Arc>& GrowingGraph::arcs(VertexId v) const {
  check_vertex(v);
  if (mode_ != GraphMode::Undirected)
    throw std::invalid_argument("arcs() is undirected-only; use out_arcs/in_arcs");
  return adj_[v];
}

const std::vector<Arc>& GrowingGraph::out_arcs(VertexId v) const {
  check_vertex(v);
  if (mode_ == GraphMode::Undirected)
    throw std::invalid_argument("out_arcs needs a directed mode");
  return out_adj_[v];
}

const std::vector<Arc>& GrowingGraph::in_arcs(VertexId v) const {
  check_vertex(v);
  if (mode_ == GraphMode::Undirected)
    throw std::invalid_argument("in_arcs needs a directed mode");
  return in_adj_[v];
}

bool GrowingGraph::is_connected() const {
  std::size_t n = num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue;
  queue.reserve(n);
  seen[root_] = 1;
  queue.push_back(root_);
  std::size_t reached = 1;
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    VertexId v = queue[qi];
    auto visit = [&](const std::vector<Arc>& as) {
      for (const Arc& a : as) {
        if (!seen[a.to]) {
          seen[a.to] = 1;
          ++reached;
          queue.push_back(a.to);
        }
      }
    };
    if (mode_ == GraphMode::Undirected) {
      visit(adj_[v]);
    } else {
      visit(out_adj_[v]);
      visit(in_adj_[v]);
    }
  }
  return reached == n;
}

char edge_kind_letter(EdgeKind k) {
  switch (k) {
    case EdgeKind::Proper: return 'P';
    case EdgeKind::Headless: return 'H';
    case EdgeKind::Tailless: return 'T';
    case EdgeKind::Loop: return 'L';
  }
  throw std::logic_error("bad edge kind");
}

EdgeKind edge_kind_from_letter(char c) {
  switch (c) {
    case 'P': return EdgeKind::Proper;
    case 'H': return EdgeKind::Headless;
    case 'T': return EdgeKind::Tailless;
    case 'L': return EdgeKind::Loop;
  }
  throw std::invalid_argument(std::string("bad edge kind letter: ") + c);
}

void GrowingGraph::write_tsv(std::ostream& out) const {
  char m = mode_ == GraphMode::Undirected ? 'U'
           : mode_ == GraphMode::Directed ? 'D'
                                          : 'G';
  out << "# evograph v1 mode=" << m << " n=" << num_vertices() << " m=" << num_edges()
      << " root=" << root_ << "\n";
  std::vector<EdgeId> ordered = live_;
  std::sort(ordered.begin(), ordered.end());
  for (EdgeId e : ordered) {
    const EdgeRecord& rec = edges_[e];
    if (rec.tail == kNoVertex)
      out << '-';
    else
      out << rec.tail;
    out << '\t';
    if (rec.head == kNoVertex)
      out << '-';
    else
      out << rec.head;
    out << '\t' << edge_kind_letter(rec.kind) << '\t' << rec.birth << "\n";
  }
}

GrowingGraph GrowingGraph::read_tsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("empty edge list");
  std::istringstream hdr(line);
  std::string hash, tag, field;
  hdr >> hash >> tag;
  if (hash != "#" || tag != "evograph") throw std::runtime_error("missing evograph header");
  char mode_char = 0;
  std::size_t n = 0, m = 0;
  VertexId root = 0;
  while (hdr >> field) {
    auto eq = field.find('=');
    if (eq == std::string::npos) continue;
    std::string key = field.substr(0, eq), val = field.substr(eq + 1);
    if (key == "mode")
      mode_char = val.empty() ? 0 : val[0];
    else if (key == "n")
      n = std::stoull(val);
    else if (key == "m")
      m = std::stoull(val);
    else if (key == "root")
      root = static_cast<VertexId>(std::stoul(val));
  }
  GraphMode mode;
  switch (mode_char) {
    case 'U': mode = GraphMode::Undirected; break;
    case 'D': mode = GraphMode::Directed; break;
    case 'G': mode = GraphMode::GeneralizedDirected; break;
    default: throw std::runtime_error("bad mode in header");
  }
  GrowingGraph g(mode);
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(0);
  if (n > 0) g.set_root(root);
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream row(line);
    std::string tail_s, head_s, kind_s, birth_s;
    if (!(row >> tail_s >> head_s >> kind_s >> birth_s))
      throw std::runtime_error("bad edge row: " + line);
    VertexId tail = tail_s == "-" ? kNoVertex : static_cast<VertexId>(std::stoul(tail_s));
    VertexId head = head_s == "-" ? kNoVertex : static_cast<VertexId>(std::stoul(head_s));
    g.add_edge(edge_kind_from_letter(kind_s.at(0)), tail, head,
               static_cast<std::uint32_t>(std::stoul(birth_s)));
    ++rows;
  }
  if (rows != m) throw std::runtime_error("edge count does not match header");
  return g;
}

void GrowingGraph::write_dot(std::ostream& out) const {
  if (num_edges() > 10000)
    throw std::invalid_argument("dot export capped at 10000 edges; use tsv");
  bool undirected = mode_ == GraphMode::Undirected;
  out << (undirected ? "graph g {\n" : "digraph g {\n");
  std::vector<EdgeId> ordered = live_;
  std::sort(ordered.begin(), ordered.end());
  std::size_t dummies = 0;
  for (EdgeId e : ordered) {
    const EdgeRecord& rec = edges_[e];
    if (rec.kind == EdgeKind::Headless || rec.kind == EdgeKind::Tailless) {
      ++dummies;
      continue;
    }
    out << "  " << rec.tail << (undirected ? " -- " : " -> ") << rec.head << ";\n";
  }
  if (dummies > 0) out << "  // " << dummies << " dummy edges omitted\n";
  out << "}\n";
}

}  // namespace evograph
