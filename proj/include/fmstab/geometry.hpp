/**
 * @file geometry.hpp
 * @brief The two ambient product geometries: the threefold C x S over a
 *        Picard-rank-one K3 surface with H_S^2 = 2d, and the surface C x T
 *        over a base curve T of genus g.
 */

#pragma once

#include "number.hpp"

#include <cstdint>
#include <string>
#include <variant>

namespace fmstab {

struct Threefold {
  std::int64_t d = 1;
  friend bool operator==(const Threefold&, const Threefold&) = default;
};

struct Surface {
  std::int64_t genus = 1;
  friend bool operator==(const Surface&, const Surface&) = default;
};

class Geometry {
 public:
  static Geometry threefold(std::int64_t d) {
    if (d < 1) throw PreconditionError("threefold requires d >= 1, got " + std::to_string(d));
    return Geometry(Threefold{d});
  }

  static Geometry surface(std::int64_t genus = 1) {
    if (genus < 0) {
      throw PreconditionError("surface requires genus >= 0, got " + std::to_string(genus));
    }
    return Geometry(Surface{genus});
  }

  bool is_threefold() const { return std::holds_alternative<Threefold>(kind_); }
  bool is_surface() const { return std::holds_alternative<Surface>(kind_); }

  /// Half the self-intersection of the K3 generator. Threefold only.
  std::int64_t d() const {
    if (!is_threefold()) throw GeometryMismatch("d is defined only for the threefold");
    return std::get<Threefold>(kind_).d;
  }

  /// Genus of the base curve. Surface only.
  std::int64_t genus() const {
    if (!is_surface()) throw GeometryMismatch("genus is defined only for the surface");
    return std::get<Surface>(kind_).genus;
  }

  /// Complex dimension of X.
  int dimension() const { return is_threefold() ? 3 : 2; }

  /// Number of basis classes f_j on the second factor (3 for S, 2 for T).
  int base_rank() const { return is_threefold() ? 3 : 2; }

  /// Index j of the point class on the second factor.
  int base_top() const { return base_rank() - 1; }

  std::string describe() const {
    if (is_threefold()) return "threefold(d=" + std::to_string(d()) + ")";
    return "surface(g=" + std::to_string(genus()) + ")";
  }

  friend bool operator==(const Geometry&, const Geometry&) = default;

 private:
  explicit Geometry(std::variant<Threefold, Surface> kind) : kind_(kind) {}

  std::variant<Threefold, Surface> kind_;
};

inline void require_same_geometry(const Geometry& a, const Geometry& b) {
  if (!(a == b)) {
    throw GeometryMismatch("geometry mismatch: " + a.describe() + " vs " + b.describe());
  }
}

inline void require_threefold(const Geometry& g, const char* what) {
  if (!g.is_threefold()) {
    throw GeometryMismatch(std::string(what) + " requires the threefold geometry");
  }
}

inline void require_surface(const Geometry& g, const char* what) {
  if (!g.is_surface()) {
    throw GeometryMismatch(std::string(what) + " requires the surface geometry");
  }
}

}  // namespace fmstab
