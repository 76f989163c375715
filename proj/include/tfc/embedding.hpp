#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tfc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation is called outside the hypotheses it is defined for.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& reason)
      : Error("line " + std::to_string(line) + ": " + reason), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

enum class Surface { Disk, Cylinder };

/// Closed walk given by its vertex sequence; the last vertex is adjacent to
/// the first. The order of the sequence is the orientation of the walk.
using Walk = std::vector<int>;

/// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

/// Graph drawn in the disk or the cylinder. Every edge is traversed exactly
/// once in each direction by the union of `faces` and `cuffs`, which makes the
/// stored walk orientations a consistent orientation of the embedding.
/// Walk index i < faces.size() refers to a face, otherwise to cuff
/// i - faces.size().
struct EmbeddedGraph {
  Surface surface = Surface::Disk;
  int vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Walk> faces;
  std::vector<Walk> cuffs;

  int walk_count() const { return static_cast<int>(faces.size() + cuffs.size()); }
  const Walk& walk(int index) const;
};

/// Structural equality of canonical forms.
bool operator==(const EmbeddedGraph& a, const EmbeddedGraph& b);

struct Violation {
  std::string what;
  std::string locus;
};

std::vector<Violation> validate(const EmbeddedGraph& g);
bool is_valid(const EmbeddedGraph& g);
/// Throws PreconditionError listing the first violation.
void require_valid(const EmbeddedGraph& g, std::string_view context);

bool is_quadrangulation(const EmbeddedGraph& g);

/// Rotation of a directed closed walk so that it starts at its smallest vertex
/// (ties broken by the smaller successor). Orientation is kept.
Walk canonical_walk(const Walk& w);
/// Canonical form of a walk viewed as an undirected cycle: like
/// canonical_walk, additionally choosing the direction with the smaller
/// second vertex.
Walk canonical_cycle(const Walk& w);
bool same_cycle(const Walk& a, const Walk& b);
Walk reversed(const Walk& w);
/// Edges of a closed walk, normalized and in walk order.
std::vector<Edge> walk_edges(const Walk& w);

/// Sorted edges, canonical walk rotations, faces sorted. Cuffs keep their order.
EmbeddedGraph canonicalize(const EmbeddedGraph& g);

/// Builds an embedded graph whose edge set is read off the walks.
EmbeddedGraph from_walks(Surface surface, int vertex_count, std::vector<Walk> faces,
                         std::vector<Walk> cuffs);

/// Result of renumbering vertices densely. old_to_new[v] is -1 for removed
/// vertices.
struct Relabeled {
  EmbeddedGraph graph;
  std::vector<int> old_to_new;
  std::vector<int> new_to_old;
};

/// Drops vertices not incident to any edge (except when the graph has no
/// edges at all) and renumbers the rest in increasing order.
Relabeled compact(const EmbeddedGraph& g);

/// Flips walks so that every edge is traversed once in each direction. The
/// walk at `anchor` keeps its orientation. Throws if no consistent
/// orientation exists.
void orient_consistently(std::vector<Walk>& walks, int anchor = 0);

EmbeddedGraph parse_emg(std::string_view text);
std::string serialize_emg(const EmbeddedGraph& g);

/// Occurrence of a vertex inside a walk, with its walk neighbours.
struct Corner {
  int walk = 0;
  int position = 0;
  int prev = 0;
  int next = 0;
};

/// Corners at v in rotation order: the corner after c is the one whose
/// prev equals c.next. Requires a valid embedding.
std::vector<Corner> corners_around(const EmbeddedGraph& g, int v);

// ---------------------------------------------------------------------------
// Colorings and plain graphs

using Color = std::uint8_t;  // 0 = unassigned, otherwise 1..3

class Coloring {
 public:
  Coloring() = default;
  explicit Coloring(int vertex_count) : colors_(static_cast<std::size_t>(vertex_count), 0) {}
  explicit Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {}

  int size() const { return static_cast<int>(colors_.size()); }
  Color operator[](int v) const { return colors_[static_cast<std::size_t>(v)]; }
  bool assigned(int v) const { return colors_[static_cast<std::size_t>(v)] != 0; }
  void set(int v, Color c) { colors_[static_cast<std::size_t>(v)] = c; }
  void clear(int v) { colors_[static_cast<std::size_t>(v)] = 0; }
  const std::vector<Color>& values() const { return colors_; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

struct Graph {
  int vertex_count = 0;
  std::vector<std::vector<int>> adjacency;

  static Graph from_edges(int vertex_count, const std::vector<Edge>& edges);
  std::vector<Edge> edges() const;
  bool has_edge(int u, int v) const;
  Graph without_edge(Edge e) const;
  int degree(int v) const { return static_cast<int>(adjacency[static_cast<std::size_t>(v)].size()); }
};

Graph underlying_graph(const EmbeddedGraph& g);

/// True iff every edge with both ends assigned has distinct colors.
bool is_proper(const Graph& g, const Coloring& c);

/// Two-colors the graph by BFS; false if some edge joins equal sides.
bool is_bipartite(const Graph& g);

// ---------------------------------------------------------------------------
// Slicing (implemented on top of the homotopy module)

struct Piece {
  EmbeddedGraph graph;
  std::vector<int> to_parent;  // piece vertex -> vertex of the sliced graph
};

/// Subgraph of a cylinder graph drawn between non-contractible cycles a and b,
/// with a on the side of cuff 1. a and b become the cuffs of the piece.
Piece subgraph_between(const EmbeddedGraph& g, const Walk& a, const Walk& b);

}  // namespace tfc
