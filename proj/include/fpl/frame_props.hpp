#ifndef FPL_FRAME_PROPS_HPP
#define FPL_FRAME_PROPS_HPP

#include <map>
#include <string>

#include "fpl/model.hpp"

namespace fpl {

// A witness for a failed frame property: the offending world, and for the
// boxed properties also the successor that breaks the inner condition.
struct PropertyWitness {
  int world = -1;
  int successor = -1;  // -1 when not applicable
};

struct FrameClassification {
  bool reflexive = false;
  bool successor_serial = false;
  bool pseudo_reflexive = false;
  bool strongly_pseudo_reflexive = false;
  bool pseudo_symmetric = false;
  bool weakly_pseudo_symmetric = false;
  // keyed by property name, first failing world in index order
  std::map<std::string, PropertyWitness> witnesses;
};

FrameClassification classify(const FiniteFrame& f);

// The refutation model of the correspondence lemma: p0 gets box(pre({w0})),
// every other letter defaults to box(empty). Always a valid box-pre model.
Model correspondence_countermodel(const FiniteFrame& f, int w0);

}  // namespace fpl

#endif
