#ifndef PLATEWAVE_MESH_HPP
#define PLATEWAVE_MESH_HPP

#include "platewave/types.hpp"

#include <array>
#include <utility>
#include <vector>

namespace platewave {

struct Rect {
  double x_min = 0.0;
  double x_max = 1.0;
  double y_min = 0.0;
  double y_max = 1.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
};

/// Uniform tensor-product mesh of a rectangle. Nodes are numbered row-major
/// (x fastest), cells likewise. Immutable after construction.
class TensorMesh {
public:
  TensorMesh(Rect domain, int nx, int ny);

  const Rect& domain() const { return domain_; }
  int nx() const { return nx_; }
  int ny() const { return ny_; }
  double hx() const { return hx_; }
  double hy() const { return hy_; }

  /// Mesh size h = length of the cell diagonal.
  double mesh_size() const;

  int node_count() const { return (nx_ + 1) * (ny_ + 1); }
  int cell_count() const { return nx_ * ny_; }

  double node_x(int node) const { return domain_.x_min + (node % (nx_ + 1)) * hx_; }
  double node_y(int node) const { return domain_.y_min + (node / (nx_ + 1)) * hy_; }

  bool node_on_boundary(int node) const;

  /// Corner nodes of a cell, counterclockwise from the lower-left corner.
  std::array<int, 4> cell_nodes(int cell) const;

  /// Physical coordinates of a cell's lower-left corner.
  std::pair<double, double> cell_origin(int cell) const;

  /// Cell containing (x, y); points on shared edges go to the lower/left cell
  /// except at the domain's upper/right boundary. Returns (cell, xhat, yhat).
  struct CellPoint {
    int cell;
    double xhat;
    double yhat;
  };
  CellPoint locate(double x, double y) const;

private:
  Rect domain_;
  int nx_, ny_;
  double hx_, hy_;
};

TensorMesh build_mesh(Rect domain, int nx, int ny);

/// Hermite degrees of freedom carried by every node.
enum class DofKind : int { value = 0, dx = 1, dy = 2, dxy = 3 };

inline constexpr int kDofsPerNode = 4;

/// Per-DOF clamped-boundary mask: all four kinds of every boundary node are
/// constrained (u = 0 and the normal derivative vanish on the whole edge, so
/// tangential and mixed derivatives vanish there too).
std::vector<bool> classify_boundary(const TensorMesh& mesh);

/// Global DOF numbering (node-major, kind-minor) plus the renumbering of the
/// unconstrained DOFs to dense indices. Immutable after construction.
class DofMap {
public:
  explicit DofMap(const TensorMesh& mesh);

  /// Total J = 4 (nx+1)(ny+1), constraints not eliminated.
  int total() const { return static_cast<int>(boundary_.size()); }
  int free_count() const { return free_count_; }

  static int global_index(int node, DofKind kind) {
    return kDofsPerNode * node + static_cast<int>(kind);
  }
  static int node_of(int gdof) { return gdof / kDofsPerNode; }
  static DofKind kind_of(int gdof) { return static_cast<DofKind>(gdof % kDofsPerNode); }

  bool is_constrained(int gdof) const { return boundary_[gdof]; }

  /// Dense index of a free DOF, or -1 when constrained.
  int free_index(int gdof) const { return free_index_[gdof]; }
  int global_of_free(int fdof) const { return free_to_global_[fdof]; }

  /// Drop constrained entries of a full-length vector.
  Vector restrict_free(const Vector& full) const;
  /// Zero-extend a free vector back to full length.
  Vector expand_full(const Vector& free) const;

private:
  std::vector<bool> boundary_;
  std::vector<int> free_index_;
  std::vector<int> free_to_global_;
  int free_count_ = 0;
};

}  // namespace platewave

#endif
