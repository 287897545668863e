#include "tfag/groups/presentation.hpp"

#include "tfag/exact/charpoly.hpp"

namespace tfag {

StationaryPresentation::StationaryPresentation(IntMatrix a) : a_(std::move(a)) {
  if (!a_.is_square() || a_.rows() == 0) throw DimensionError("presentation matrix must be square and nonempty");
  chi_ = tfag::charpoly(a_);
  det_ = det_exact(a_);
  if (det_ == 0) throw DomainError("presentation matrix is singular");
}

InductivePrefix::InductivePrefix(std::vector<IntMatrix> mats) : mats_(std::move(mats)) {
  if (mats_.empty()) throw ArgumentError("inductive prefix needs at least one matrix");
  rank_ = mats_.front().rows();
  for (const auto& m : mats_) {
    if (!m.is_square() || m.rows() != rank_) throw DimensionError("prefix matrices must be square of one size");
    if (det_exact(m) == 0) throw DomainError("prefix matrices must be nonsingular");
  }
}

} // namespace tfag
