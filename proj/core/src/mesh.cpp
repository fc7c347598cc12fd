#include "platewave/mesh.hpp"

#include <algorithm>
#include <cmath>

namespace platewave {

TensorMesh::TensorMesh(Rect domain, int nx, int ny) : domain_(domain), nx_(nx), ny_(ny) {
  if (nx < 1 || ny < 1)
    throw ConfigError("mesh: cell counts must be positive, got nx=" + std::to_string(nx) +
                      " ny=" + std::to_string(ny));
  if (!(domain.x_max > domain.x_min) || !(domain.y_max > domain.y_min))
    throw ConfigError("mesh: degenerate or inverted domain rectangle");
  hx_ = domain.width() / nx;
  hy_ = domain.height() / ny;
}

double TensorMesh::mesh_size() const { return std::sqrt(hx_ * hx_ + hy_ * hy_); }

bool TensorMesh::node_on_boundary(int node) const {
  const int ix = node % (nx_ + 1);
  const int iy = node / (nx_ + 1);
  return ix == 0 || ix == nx_ || iy == 0 || iy == ny_;
}

std::array<int, 4> TensorMesh::cell_nodes(int cell) const {
  if (cell < 0 || cell >= cell_count())
    throw ConfigError("mesh: cell index " + std::to_string(cell) + " out of range");
  const int cx = cell % nx_;
  const int cy = cell / nx_;
  const int ll = cy * (nx_ + 1) + cx;
  return {ll, ll + 1, ll + nx_ + 2, ll + nx_ + 1};
}

std::pair<double, double> TensorMesh::cell_origin(int cell) const {
  const int cx = cell % nx_;
  const int cy = cell / nx_;
  return {domain_.x_min + cx * hx_, domain_.y_min + cy * hy_};
}

TensorMesh::CellPoint TensorMesh::locate(double x, double y) const {
  int cx = static_cast<int>(std::floor((x - domain_.x_min) / hx_));
  int cy = static_cast<int>(std::floor((y - domain_.y_min) / hy_));
  cx = std::clamp(cx, 0, nx_ - 1);
  cy = std::clamp(cy, 0, ny_ - 1);
  const double xhat = (x - (domain_.x_min + cx * hx_)) / hx_;
  const double yhat = (y - (domain_.y_min + cy * hy_)) / hy_;
  return {cy * nx_ + cx, std::clamp(xhat, 0.0, 1.0), std::clamp(yhat, 0.0, 1.0)};
}

TensorMesh build_mesh(Rect domain, int nx, int ny) { return TensorMesh(domain, nx, ny); }

std::vector<bool> classify_boundary(const TensorMesh& mesh) {
  std::vector<bool> mask(static_cast<std::size_t>(kDofsPerNode) * mesh.node_count(), false);
  for (int node = 0; node < mesh.node_count(); ++node) {
    if (!mesh.node_on_boundary(node)) continue;
    for (int k = 0; k < kDofsPerNode; ++k) mask[kDofsPerNode * node + k] = true;
  }
  return mask;
}

DofMap::DofMap(const TensorMesh& mesh) : boundary_(classify_boundary(mesh)) {
  free_index_.assign(boundary_.size(), -1);
  for (std::size_t g = 0; g < boundary_.size(); ++g) {
    if (!boundary_[g]) {
      free_index_[g] = free_count_++;
      free_to_global_.push_back(static_cast<int>(g));
    }
  }
}

Vector DofMap::restrict_free(const Vector& full) const {
  Vector out(free_count_);
  for (int f = 0; f < free_count_; ++f) out[f] = full[free_to_global_[f]];
  return out;
}

Vector DofMap::expand_full(const Vector& free) const {
  Vector out = Vector::Zero(total());
  for (int f = 0; f < free_count_; ++f) out[free_to_global_[f]] = free[f];
  return out;
}

}  // namespace platewave
