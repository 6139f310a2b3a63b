#include "hn/oracle.hpp"

#include <optional>

namespace hn {

namespace {

class ChainSearch {
 public:
  explicit ChainSearch(const SubobjectLattice& L)
      : L_(L), semistable_(L.size(), std::vector<std::optional<bool>>(L.size())) {}

  std::vector<std::vector<NodeId>> run() {
    const NodeId zero = L_.zero();
    if (zero == L_.whole()) return {};
    chain_.assign(1, zero);
    extend(std::nullopt);
    return std::move(found_);
  }

 private:
  // a/r(a) > b/r(b) in the eventual order.
  static bool steeper(const NumPoly& a, const NumPoly& b) {
    return Rational(b.rank()) * a.poly() > Rational(a.rank()) * b.poly();
  }

  bool piece_semistable(NodeId lo, NodeId hi) {
    auto& memo = semistable_[lo][hi];
    if (memo) return *memo;
    const NumPoly piece = L_.label(hi) - L_.label(lo);
    bool ok = piece.rank() > 0;
    for (NodeId g = 0; ok && g < L_.size(); ++g) {
      if (L_.less(lo, g) && L_.less(g, hi)) {
        const NumPoly sub = L_.label(g) - L_.label(lo);
        ok = sub.rank() > 0 && !steeper(sub, piece);
      }
    }
    memo = ok;
    return ok;
  }

  void extend(const std::optional<NumPoly>& last_piece) {
    const NodeId at = chain_.back();
    if (at == L_.whole()) {
      found_.push_back(chain_);
      return;
    }
    for (NodeId next = 0; next < L_.size(); ++next) {
      if (!L_.less(at, next)) continue;
      const NumPoly piece = L_.label(next) - L_.label(at);
      if (piece.rank() <= 0) continue;
      if (last_piece && !steeper(*last_piece, piece)) continue;
      if (!piece_semistable(at, next)) continue;
      chain_.push_back(next);
      extend(piece);
      chain_.pop_back();
    }
  }

  const SubobjectLattice& L_;
  std::vector<std::vector<std::optional<bool>>> semistable_;
  std::vector<NodeId> chain_;
  std::vector<std::vector<NodeId>> found_;
};

}  // namespace

std::vector<std::vector<NodeId>> enumerate_hn_chains(const SubobjectLattice& lattice) {
  return ChainSearch(lattice).run();
}

}  // namespace hn
