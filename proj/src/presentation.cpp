#include "pcgroup/presentation.hpp"

#include <algorithm>
#include <deque>

namespace pcgroup {

namespace {

// Generous hard ceilings; desk-scale collections take at most a few
// thousand steps and queue entries, so hitting either means the
// triangularity invariant was violated or the input word is absurd.
constexpr long kCollectStepCap = 200'000'000;
constexpr std::size_t kCollectQueueCap = 1u << 22;

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PcPresentation::PcPresentation(PcData data)
    : prime_(data.prime),
      ngens_(static_cast<int>(data.weights.size())),
      min_gens_(data.min_gens),
      weights_(std::move(data.weights)) {
  if (prime_ < 2 || prime_ > 255 || !is_prime(prime_))
    throw std::invalid_argument("prime must be a prime in [2,255]");
  if (min_gens_ < 0 || min_gens_ > ngens_ || (ngens_ > 0 && min_gens_ == 0))
    throw std::invalid_argument("min_gens out of range");
  for (int i = 0; i < ngens_; ++i) {
    if (weights_[i] < 1)
      throw std::invalid_argument("weights must be positive");
    if (i > 0 && weights_[i] < weights_[i - 1])
      throw std::invalid_argument("weights must be non-decreasing");
    if (i < min_gens_ && weights_[i] != 1)
      throw std::invalid_argument("minimal generators must have weight 1");
  }

  names_ = std::move(data.names);
  if (names_.empty()) {
    for (int i = 0; i < ngens_; ++i) names_.push_back("g" + std::to_string(i + 1));
  }
  if (static_cast<int>(names_.size()) != ngens_)
    throw std::invalid_argument("names length mismatch");

  auto check_word = [&](const NormalWord& w, int above, const char* what) {
    if (static_cast<int>(w.size()) != ngens_)
      throw std::invalid_argument(std::string(what) + ": word length mismatch");
    for (int k = 0; k < ngens_; ++k) {
      if (w.exps[k] >= prime_)
        throw std::invalid_argument(std::string(what) + ": exponent out of range");
      if (w.exps[k] && k <= above)
        throw std::invalid_argument(std::string(what) +
                                    ": support violates triangularity");
    }
  };

  powers_.assign(ngens_, NormalWord(ngens_));
  if (!data.powers.empty()) {
    if (static_cast<int>(data.powers.size()) != ngens_)
      throw std::invalid_argument("powers table length mismatch");
    for (int i = 0; i < ngens_; ++i) {
      check_word(data.powers[i], i, "power relation");
      powers_[i] = std::move(data.powers[i]);
    }
  }

  conj_.assign(static_cast<std::size_t>(ngens_) * ngens_, NormalWord());
  has_conj_.assign(static_cast<std::size_t>(ngens_) * ngens_, 0);
  for (auto& [pair, tail] : data.conjugates) {
    auto [i, j] = pair;
    if (i < 0 || j < 0 || i >= ngens_ || j >= ngens_ || i >= j)
      throw std::invalid_argument("conjugate relation requires i < j");
    check_word(tail, j, "conjugate relation");
    for (int k = 0; k < ngens_; ++k)
      if (tail.exps[k] && weights_[k] < weights_[i] + weights_[j])
        throw std::invalid_argument("conjugate tail violates weight condition");
    if (tail.is_identity()) continue;  // same as an omitted relation
    conj_[static_cast<std::size_t>(i) * ngens_ + j] = std::move(tail);
    has_conj_[static_cast<std::size_t>(i) * ngens_ + j] = 1;
  }

  defs_.assign(ngens_, std::nullopt);
  for (auto& [k, word] : data.definitions) {
    if (k < min_gens_ || k >= ngens_)
      throw std::invalid_argument("definition index must name a non-minimal generator");
    for (auto& [g, e] : word.syls)
      if (g < 0 || g >= k)
        throw std::invalid_argument("definition may use earlier generators only");
    defs_[k] = std::move(word);
  }
}

NormalWord PcPresentation::generator(int i) const {
  NormalWord w(ngens_);
  w.exps[i] = 1;
  return w;
}

const NormalWord* PcPresentation::conj_tail(int i, int j) const {
  std::size_t at = static_cast<std::size_t>(i) * ngens_ + j;
  return has_conj_[at] ? &conj_[at] : nullptr;
}

const GenWord* PcPresentation::definition(int k) const {
  return defs_[k] ? &*defs_[k] : nullptr;
}

bool PcPresentation::has_all_definitions() const {
  for (int k = min_gens_; k < ngens_; ++k)
    if (!defs_[k]) return false;
  return true;
}

void PcPresentation::check_operand(const NormalWord& a) const {
  if (static_cast<int>(a.size()) != ngens_)
    throw std::invalid_argument("operand belongs to a different presentation");
}

// Emit a positive-exponent syllable sequence equal to x_g^e. Negative powers
// expand through x^-1 = x^{p-1} * (x^p)^-1; the recursion is well-founded
// because power relation support strictly increases.
void PcPresentation::emit_power(std::vector<Syl>& out, int g, long e) const {
  if (e == 0) return;
  if (e > 0) {
    out.push_back({g, e});
    return;
  }
  const NormalWord& u = powers_[g];
  for (long r = 0; r < -e; ++r) {
    if (out.size() > kCollectQueueCap)
      throw std::invalid_argument("input word expands beyond the collection queue cap");
    out.push_back({g, prime_ - 1});
    for (int k = ngens_ - 1; k > g; --k)
      if (u.exps[k]) emit_power(out, k, -static_cast<long>(u.exps[k]));
  }
}

NormalWord PcPresentation::collect(const GenWord& w, CollectStats* stats) const {
  std::vector<Syl> input;
  for (auto& [g, e] : w.syls) {
    if (g < 0 || g >= ngens_)
      throw std::invalid_argument("word uses a generator index out of range");
    emit_power(input, g, e);
  }
  return collect_onto(std::vector<Exp>(ngens_, 0), std::move(input), stats);
}

NormalWord PcPresentation::collect_onto(std::vector<Exp> acc,
                                        std::vector<Syl> input,
                                        CollectStats* stats) const {
  std::deque<Syl> work(input.begin(), input.end());
  long steps = 0;

  // Push the syllables of `w` so they are processed before everything
  // currently on the queue, preserving their internal order.
  auto push_front_word = [&](const NormalWord& w) {
    for (int k = ngens_ - 1; k >= 0; --k)
      if (w.exps[k]) work.push_front({k, w.exps[k]});
  };

  while (!work.empty()) {
    if (++steps > kCollectStepCap)
      throw std::logic_error("collection exceeded step cap; presentation invalid");
    if (work.size() > kCollectQueueCap)
      throw std::logic_error("collection queue exceeded its cap; presentation invalid");
    Syl s = work.front();
    work.pop_front();
    int g = s.g;

    int m = -1;  // highest occupied index above g in the collected prefix
    for (int k = ngens_ - 1; k > g; --k)
      if (acc[k]) {
        m = k;
        break;
      }

    if (m < 0) {
      // acc * x_g^e : exponents merge directly; each overflow of p applies
      // the power relation (powers of x_g commute with x_g).
      long total = acc[g] + s.e;
      acc[g] = static_cast<Exp>(total % prime_);
      long carries = total / prime_;
      const NormalWord& u = powers_[g];
      if (!u.is_identity())
        for (long c = 0; c < carries; ++c) push_front_word(u);
      continue;
    }

    // A single x_g must move left past the occupied suffix S above g:
    //   S * x_g = x_g * S^{x_g},  with S^{x_g} expanded relation by relation.
    if (s.e > 1) work.push_front({g, s.e - 1});

    bool all_commute = true;
    for (int k = g + 1; k <= m && all_commute; ++k)
      if (acc[k] && conj_tail(g, k)) all_commute = false;

    if (all_commute && acc[g] + 1 < prime_) {
      acc[g] += 1;
      continue;
    }

    std::vector<Syl> conj;
    for (int k = g + 1; k <= m; ++k) {
      if (!acc[k]) continue;
      const NormalWord* tail = conj_tail(g, k);
      for (int r = 0; r < acc[k]; ++r) {
        conj.push_back({k, 1});
        if (tail)
          for (int t = 0; t < ngens_; ++t)
            if (tail->exps[t]) conj.push_back({t, tail->exps[t]});
      }
      acc[k] = 0;
    }
    for (auto it = conj.rbegin(); it != conj.rend(); ++it) work.push_front(*it);

    long total = acc[g] + 1;
    acc[g] = static_cast<Exp>(total % prime_);
    if (total == prime_) push_front_word(powers_[g]);
  }

  if (stats) stats->steps += steps;
  NormalWord out;
  out.exps = std::move(acc);
  return out;
}

NormalWord PcPresentation::multiply(const NormalWord& a, const NormalWord& b) const {
  check_operand(a);
  check_operand(b);
  std::vector<Syl> input;
  for (int k = 0; k < ngens_; ++k)
    if (b.exps[k]) input.push_back({k, b.exps[k]});
  return collect_onto(a.exps, std::move(input), nullptr);
}

NormalWord PcPresentation::inverse(const NormalWord& a) const {
  check_operand(a);
  GenWord w;
  for (int k = ngens_ - 1; k >= 0; --k)
    if (a.exps[k]) w.append(k, -static_cast<long>(a.exps[k]));
  return collect(w);
}

NormalWord PcPresentation::power(const NormalWord& a, long k) const {
  check_operand(a);
  if (k == 0) return identity();
  NormalWord base = k < 0 ? inverse(a) : a;
  unsigned long e = k < 0 ? -static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  NormalWord acc = identity();
  while (e) {
    if (e & 1) acc = multiply(acc, base);
    e >>= 1;
    if (e) base = multiply(base, base);
  }
  return acc;
}

NormalWord PcPresentation::conjugate(const NormalWord& a, const NormalWord& g) const {
  check_operand(a);
  check_operand(g);
  GenWord w;
  for (int k = ngens_ - 1; k >= 0; --k)
    if (g.exps[k]) w.append(k, -static_cast<long>(g.exps[k]));
  w.append(a);
  w.append(g);
  return collect(w);
}

NormalWord PcPresentation::commutator(const NormalWord& a, const NormalWord& b) const {
  check_operand(a);
  check_operand(b);
  GenWord w;
  for (int k = ngens_ - 1; k >= 0; --k)
    if (a.exps[k]) w.append(k, -static_cast<long>(a.exps[k]));
  for (int k = ngens_ - 1; k >= 0; --k)
    if (b.exps[k]) w.append(k, -static_cast<long>(b.exps[k]));
  w.append(a);
  w.append(b);
  return collect(w);
}

long PcPresentation::element_order(const NormalWord& a) const {
  check_operand(a);
  NormalWord b = a;
  long order = 1;
  int rounds = 0;
  while (!b.is_identity()) {
    if (++rounds > ngens_)
      throw std::logic_error("element order exceeds group exponent bound");
    b = power(b, prime_);
    order *= prime_;
  }
  return order;
}

std::uint64_t PcPresentation::order_checked(std::uint64_t cap) const {
  std::uint64_t total = 1;
  for (int i = 0; i < ngens_; ++i) {
    total *= static_cast<std::uint64_t>(prime_);
    if (total > cap)
      throw CapExceeded("group order " + std::to_string(prime_) + "^" +
                        std::to_string(ngens_) + " exceeds cap " + std::to_string(cap));
  }
  return total;
}

std::string format_element(const PcPresentation& pres, const NormalWord& a) {
  std::string out;
  for (int i = 0; i < pres.ngens(); ++i) {
    if (!a.exps[i]) continue;
    if (!out.empty()) out += "*";
    out += pres.name(i);
    if (a.exps[i] > 1) out += "^" + std::to_string(a.exps[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace pcgroup
