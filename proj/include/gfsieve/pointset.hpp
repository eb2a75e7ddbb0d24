#ifndef GFSIEVE_POINTSET_HPP
#define GFSIEVE_POINTSET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "gfsieve/field.hpp"
#include "gfsieve/heights.hpp"

namespace gfsieve {

using Point = std::vector<RingElement>;

/// Per-prime residue data for a point set, built once and cached.
struct ResidueTable {
  /// Full residue tuple of each point, indices in [0, N(p)).
  std::vector<std::vector<uint64_t>> point_residue;
  /// Full-tuple class -> sorted member indices. Map order makes the
  /// lexicographically smallest class the deterministic tie-break winner.
  std::map<std::vector<uint64_t>, std::vector<uint32_t>> classes;
  /// First-coordinate residue -> sorted member indices.
  std::map<uint64_t, std::vector<uint32_t>> first_classes;

  size_t occupancy() const { return classes.size(); }
};

/// A finite set of distinct affine points over O_K with every coordinate of
/// height <= N. Points are kept in canonical sorted order so member indices
/// are stable and reports are reproducible. Residue tables are built lazily
/// per prime under a lock; all other state is immutable.
class PointSet {
 public:
  PointSet(GlobalFieldDesc field, int dim, Rat N, std::vector<Point> pts);

  const GlobalFieldDesc& field() const { return field_; }
  int dim() const { return dim_; }
  const Rat& bound() const { return N_; }
  size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const Point& operator[](size_t i) const { return pts_[i]; }
  const std::vector<Point>& points() const { return pts_; }

  const ResidueTable& residues(const PrimeOfK& p) const;

  /// FNV-1a over the canonical serialization; embedded in witnesses and
  /// reports so they can be matched to their input set.
  uint64_t content_hash() const;

  /// Subset by member indices (indices must be sorted, distinct).
  PointSet subset(const std::vector<uint32_t>& indices) const;

  /// The section S_x: indices of points with first coordinate x.
  std::vector<uint32_t> section_indices(const RingElement& x) const;

 private:
  GlobalFieldDesc field_;
  int dim_;
  Rat N_;
  std::vector<Point> pts_;
  mutable std::mutex mu_;
  mutable std::map<PrimeOfK, std::unique_ptr<ResidueTable>> cache_;
};

/// Lexicographic comparison on canonical coordinates.
bool point_less(const Point& a, const Point& b);

}  // namespace gfsieve

#endif
