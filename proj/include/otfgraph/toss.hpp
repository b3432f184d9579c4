#pragma once

#include <cstdint>

#include "otfgraph/bit_source.hpp"
#include "otfgraph/types.hpp"

namespace otfgraph {

/// Candidate-rank sampler used by next_child.
///
/// With xi = phi(a), coins of probability 1/xi, 1/(xi+1), ... are tossed in
/// turn and the rank of the first success is reported (rank t-1 when all
/// t-1 coins fail). Its CDF is
///   P'_y = y / (xi + y - 1)   for 0 <= y <= t-1,    P'_t = 1.
/// A lattice point M in [0, alpha) is drawn first; if [M, M+1)/alpha lies
/// inside one CDF cell the rank is known, otherwise the cell is bisected with
/// further bits until it does. The result is exact.
class Toss {
 public:
  explicit Toss(std::uint64_t alpha);

  /// alpha = n^exponent, clamped to [2, 2^62].
  static Toss for_graph(Node n, double exponent);

  std::uint64_t operator()(BitSource& source, std::uint64_t xi, std::uint64_t t);

  std::uint64_t alpha() const { return alpha_; }
  std::uint64_t calls() const { return calls_; }
  /// Calls whose first lattice cell straddled a CDF boundary.
  std::uint64_t refinements() const { return refinements_; }

 private:
  std::uint64_t alpha_;
  std::uint64_t calls_ = 0;
  std::uint64_t refinements_ = 0;
};

}  // namespace otfgraph
