#ifndef FPL_FRAME_HPP
#define FPL_FRAME_HPP

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace fpl {

// Dense subset of the worlds 0..size-1 of a specific frame.
class WorldSet {
public:
  WorldSet() = default;
  WorldSet(int size, uint64_t bits) : size_(size), bits_(bits & mask(size)) {}
  static WorldSet empty(int size) { return WorldSet(size, 0); }
  static WorldSet full(int size) { return WorldSet(size, mask(size)); }
  static WorldSet singleton(int size, int w) { return WorldSet(size, uint64_t{1} << w); }

  int size() const { return size_; }
  uint64_t bits() const { return bits_; }
  bool contains(int w) const { return (bits_ >> w) & 1; }
  bool empty_set() const { return bits_ == 0; }
  int count() const { return __builtin_popcountll(bits_); }

  WorldSet operator&(const WorldSet& o) const { return checked(o), WorldSet(size_, bits_ & o.bits_); }
  WorldSet operator|(const WorldSet& o) const { return checked(o), WorldSet(size_, bits_ | o.bits_); }
  WorldSet operator~() const { return WorldSet(size_, ~bits_); }
  bool subset_of(const WorldSet& o) const { return checked(o), (bits_ & ~o.bits_) == 0; }

  bool operator==(const WorldSet&) const = default;
  auto operator<=>(const WorldSet&) const = default;

  std::vector<int> worlds() const;

private:
  static uint64_t mask(int size) { return size >= 64 ? ~uint64_t{0} : (uint64_t{1} << size) - 1; }
  void checked(const WorldSet& o) const {
    if (size_ != o.size_) throw std::invalid_argument("WorldSet size mismatch");
  }
  int size_ = 0;
  uint64_t bits_ = 0;
};

// Kripke frame on worlds 0..size-1, relation stored as successor masks.
class FiniteFrame {
public:
  explicit FiniteFrame(int size) : size_(size), succ_(size, 0) {
    if (size < 0 || size > 62) throw std::invalid_argument("frame size out of range");
  }
  FiniteFrame(int size, const std::vector<std::pair<int, int>>& relation);

  // n*n relation bits, row-major: bit i*n+j set iff i R j.
  static FiniteFrame from_bits(int size, uint64_t relation_bits);
  uint64_t to_bits() const;

  int size() const { return size_; }
  bool related(int i, int j) const { return (succ_[i] >> j) & 1; }
  void add_edge(int i, int j);
  WorldSet successors(int w) const { return WorldSet(size_, succ_[w]); }
  std::vector<std::pair<int, int>> relation() const;

  bool operator==(const FiniteFrame&) const = default;

private:
  int size_;
  std::vector<uint64_t> succ_;
};

// {w | some x in X has x R w}
WorldSet pre(const FiniteFrame& f, const WorldSet& x);
// {w | every successor of w is in X}
WorldSet box(const FiniteFrame& f, const WorldSet& x);
// dual of box
WorldSet diamond(const FiniteFrame& f, const WorldSet& x);

// box(pre(x)), the closure operator whose fixpoints carry the semantics
WorldSet closure(const FiniteFrame& f, const WorldSet& x);
bool is_fixpoint(const FiniteFrame& f, const WorldSet& x);

// All closure fixpoints, in increasing bit order. Scans 2^n subsets.
std::vector<WorldSet> enumerate_fixpoints(const FiniteFrame& f, int exhaustive_bound = 12);

// Lattice operations on fixpoints; arguments must be fixpoints.
WorldSet fp_meet(const FiniteFrame& f, const WorldSet& x, const WorldSet& y);
WorldSet fp_join(const FiniteFrame& f, const WorldSet& x, const WorldSet& y);

}  // namespace fpl

#endif
