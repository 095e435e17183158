#ifndef WHA_HL_HPP
#define WHA_HL_HPP

#include "wha/weak_hopf.hpp"

namespace wha {

/// The split of the target projection: H_L is the image of Pi^L, with
/// i_L . p_L = Pi^L and p_L . i_L = id. For a cocommutative H the image
/// carries a coalgebra structure, which is what degree-0 cochains live on.
struct HLData {
  int dim;    // dim H_L = rank Pi^L
  Mor i_L;    // H_L -> H
  Mor p_L;    // H -> H_L
  Mor delta;  // H_L -> H_L (x) H_L
  Mor eps;    // H_L -> K
};

/// Throws NotCocommutative; the induced coproduct needs delta . Pi^L =
/// (Pi^L (x) Pi^L) . delta, which holds in the cocommutative case.
HLData hl_split(const WeakHopf& h);

} // namespace wha

#endif
