#include "wha/hl.hpp"

namespace wha {

HLData hl_split(const WeakHopf& h) {
  if (!h.cocommutative())
    throw Error(ErrorKind::not_cocommutative, "H_L coalgebra needs a cocommutative coproduct");

  auto [i, p] = split_idempotent(h.piL().mat());
  const int r = i.cols();
  Mor i_L(r, h.dim(), std::move(i));
  Mor p_L(h.dim(), r, std::move(p));

  Mor delta_hl = compose(tensor(p_L, p_L), h.delta(), i_L);
  Mor eps_hl = compose(h.eps(), i_L);

  const Mor id_hl = Mor::identity(r, h.field());
  bool ok = compose(p_L, i_L) == id_hl && compose(i_L, p_L) == h.piL() &&
            compose(delta_hl, p_L) == compose(tensor(p_L, p_L), h.delta()) &&
            compose(eps_hl, p_L) == h.eps() &&
            compose(tensor(eps_hl, id_hl), delta_hl) == id_hl &&
            compose(tensor(id_hl, eps_hl), delta_hl) == id_hl &&
            compose(tensor(delta_hl, id_hl), delta_hl) ==
                compose(tensor(id_hl, delta_hl), delta_hl);
  if (!ok)
    throw Error(ErrorKind::internal, "H_L split failed its coalgebra laws");

  return HLData{r, std::move(i_L), std::move(p_L), std::move(delta_hl), std::move(eps_hl)};
}

} // namespace wha
