// Weighted power-conjugate presentations of finite p-groups, and the
// collection rewriting process that brings arbitrary generator words to
// the normal form x_1^{a_1} ... x_n^{a_n} with 0 <= a_i < p.
//
// A presentation is immutable once constructed; all group operations are
// pure functions of (presentation, operands) and safe to run concurrently
// against a shared presentation.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pcgroup {

using Exp = std::uint8_t;  // one exponent digit, always in [0, p)

// Canonical element representation: one exponent per pc-generator.
struct NormalWord {
  std::vector<Exp> exps;

  NormalWord() = default;
  explicit NormalWord(std::size_t n) : exps(n, 0) {}

  bool operator==(const NormalWord&) const = default;
  auto operator<=>(const NormalWord&) const = default;

  bool is_identity() const {
    for (Exp e : exps)
      if (e) return false;
    return true;
  }
  std::size_t size() const { return exps.size(); }
};

// Uncollected word: a sequence of (generator index, exponent) pairs.
// Exponents may be negative; generator indices are 0-based.
struct GenWord {
  std::vector<std::pair<int, long>> syls;

  GenWord() = default;

  static GenWord gen(int g, long e = 1) {
    GenWord w;
    w.syls.push_back({g, e});
    return w;
  }
  GenWord& append(int g, long e = 1) {
    syls.push_back({g, e});
    return *this;
  }
  GenWord& append(const NormalWord& nw) {
    for (int i = 0; i < static_cast<int>(nw.size()); ++i)
      if (nw.exps[i]) syls.push_back({i, nw.exps[i]});
    return *this;
  }
};

// Map given by images of the d minimal generators (candidate endomorphism).
struct GenMap {
  std::vector<NormalWord> images;
};

struct CollectStats {
  long steps = 0;
};

// Thrown when an enumeration or search would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything needed to build a presentation; validated by the constructor.
struct PcData {
  int prime = 2;
  int min_gens = 0;
  std::vector<int> weights;                 // one per generator, size = ngens
  std::vector<std::string> names;           // optional; defaults to g1..gn
  // power_rhs[i] = right-hand side of x_i^p; empty word means x_i^p = 1
  std::vector<NormalWord> powers;
  // tail of x_j^{x_i} = x_j * tail for i < j; absent pair means commute
  std::vector<std::pair<std::pair<int, int>, NormalWord>> conjugates;
  // definition of a non-minimal generator as a word in earlier generators;
  // needed to lift generator maps to homomorphisms
  std::vector<std::pair<int, GenWord>> definitions;
};

class PcPresentation {
 public:
  explicit PcPresentation(PcData data);

  int prime() const { return prime_; }
  int ngens() const { return ngens_; }
  int min_gens() const { return min_gens_; }
  const std::vector<int>& weights() const { return weights_; }
  int weight(int i) const { return weights_[i]; }
  const std::string& name(int i) const { return names_[i]; }

  NormalWord identity() const { return NormalWord(ngens_); }
  NormalWord generator(int i) const;

  // x_i^p as a normal word; all-zero means the power relation is trivial.
  const NormalWord& power_rhs(int i) const { return powers_[i]; }
  // Tail of x_j^{x_i} (i < j); nullptr means the generators commute.
  const NormalWord* conj_tail(int i, int j) const;
  // Definition word of a non-minimal generator, if the presentation has one.
  const GenWord* definition(int k) const;
  bool has_all_definitions() const;

  // Collection from the left: repeatedly move the leftmost out-of-order
  // generator into the collected prefix. Terminates because every relation
  // tail is supported on strictly later generators.
  NormalWord collect(const GenWord& w, CollectStats* stats = nullptr) const;

  NormalWord multiply(const NormalWord& a, const NormalWord& b) const;
  NormalWord inverse(const NormalWord& a) const;
  NormalWord power(const NormalWord& a, long k) const;
  NormalWord conjugate(const NormalWord& a, const NormalWord& g) const;  // g^-1 a g
  NormalWord commutator(const NormalWord& a, const NormalWord& b) const; // a^-1 a^b
  // Smallest k >= 1 with a^k = 1; a power of p for consistent presentations.
  long element_order(const NormalWord& a) const;

  // Group order p^ngens, refusing to exceed `cap`.
  std::uint64_t order_checked(std::uint64_t cap) const;

 private:
  struct Syl {
    int g;
    long e;
  };

  void check_operand(const NormalWord& a) const;
  void emit_power(std::vector<Syl>& out, int g, long e) const;
  NormalWord collect_onto(std::vector<Exp> acc, std::vector<Syl> input,
                          CollectStats* stats) const;

  int prime_ = 2;
  int ngens_ = 0;
  int min_gens_ = 0;
  std::vector<int> weights_;
  std::vector<std::string> names_;
  std::vector<NormalWord> powers_;
  std::vector<NormalWord> conj_;   // dense i*ngens+j; empty word = commute
  std::vector<char> has_conj_;
  std::vector<std::optional<GenWord>> defs_;
};

// Canonical rendering, e.g. "x1*x3*z" (unit exponents omitted, identity "1").
std::string format_element(const PcPresentation& pres, const NormalWord& a);

constexpr std::uint64_t kDefaultElementCap = 1ull << 20;

}  // namespace pcgroup
