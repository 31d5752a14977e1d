#include "fpl/frame_props.hpp"

namespace fpl {

FrameClassification classify(const FiniteFrame& f) {
  FrameClassification c;
  const int n = f.size();
  const WorldSet none = WorldSet::empty(n);
  const WorldSet all = WorldSet::full(n);
  const WorldSet dead_ends = box(f, none);
  const WorldSet live = ~dead_ends;
  const WorldSet has_pred = pre(f, all);

  c.reflexive = true;
  for (int w = 0; w < n; ++w) {
    if (!f.related(w, w)) {
      c.reflexive = false;
      c.witnesses["reflexive"] = {w, -1};
      break;
    }
  }

  // every successor is not a dead end; worlds without predecessors are exempt
  c.successor_serial = has_pred.subset_of(live);
  if (!c.successor_serial) {
    for (int w = 0; w < n; ++w)
      if (has_pred.contains(w) && dead_ends.contains(w)) {
        c.witnesses["successor_serial"] = {w, -1};
        break;
      }
  }

  c.pseudo_reflexive = true;
  c.strongly_pseudo_reflexive = true;
  c.pseudo_symmetric = true;
  c.weakly_pseudo_symmetric = true;
  for (int w = 0; w < n; ++w) {
    WorldSet bp = box(f, pre(f, WorldSet::singleton(n, w)));
    WorldSet pr = dead_ends | diamond(f, bp);
    WorldSet spr = dead_ends | diamond(f, live & bp);
    if (c.pseudo_reflexive && !pr.contains(w)) {
      c.pseudo_reflexive = false;
      c.witnesses["pseudo_reflexive"] = {w, -1};
    }
    if (c.strongly_pseudo_reflexive && !spr.contains(w)) {
      c.strongly_pseudo_reflexive = false;
      c.witnesses["strongly_pseudo_reflexive"] = {w, -1};
    }
    if (c.pseudo_symmetric && !box(f, diamond(f, bp)).contains(w)) {
      c.pseudo_symmetric = false;
      int v = (f.successors(w) & ~diamond(f, bp)).worlds().front();
      c.witnesses["pseudo_symmetric"] = {w, v};
    }
    if (c.weakly_pseudo_symmetric && !box(f, spr).contains(w)) {
      c.weakly_pseudo_symmetric = false;
      int v = (f.successors(w) & ~spr).worlds().front();
      c.witnesses["weakly_pseudo_symmetric"] = {w, v};
    }
  }
  return c;
}

Model correspondence_countermodel(const FiniteFrame& f, int w0) {
  if (w0 < 0 || w0 >= f.size())
    throw std::invalid_argument("correspondence_countermodel: world out of range");
  Model m{f, {}};
  m.valuation.emplace(0u, box(f, pre(f, WorldSet::singleton(f.size(), w0))));
  return m;
}

}  // namespace fpl
