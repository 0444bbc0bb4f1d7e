#include "wpcas/order.hpp"

#include <sstream>

namespace wpcas {

MonomialOrder MonomialOrder::degrevlex(const Ring& ring) {
  MonomialOrder o;
  o.arity_ = ring.arity();
  for (std::size_t i = 0; i < ring.arity(); ++i) o.weights_[i] = ring.weight(i);
  return o;
}

MonomialOrder MonomialOrder::elimination(const Ring& ring, const std::vector<std::size_t>& block) {
  MonomialOrder o = degrevlex(ring);
  for (auto v : block) {
    if (v >= ring.arity()) throw std::invalid_argument("elimination block: variable out of range");
    o.block_mask_ |= (1u << v);
  }
  return o;
}

int MonomialOrder::degree(const Monomial& m) const {
  int d = 0;
  for (std::size_t i = 0; i < arity_; ++i) d += weights_[i] * m[i];
  return d;
}

std::strong_ordering MonomialOrder::compare_shifted(const Monomial& a, int shift_a, const Monomial& b,
                                                    int shift_b) const {
  if (block_mask_) {
    int da = 0, db = 0;
    for (std::size_t i = 0; i < arity_; ++i)
      if (in_block(i)) {
        da += weights_[i] * a[i];
        db += weights_[i] * b[i];
      }
    if (da != db) return da <=> db;
    for (std::size_t i = arity_; i-- > 0;)
      if (in_block(i) && a[i] != b[i]) return b[i] <=> a[i];
  }
  int da = shift_a, db = shift_b;
  for (std::size_t i = 0; i < arity_; ++i)
    if (!in_block(i)) {
      da += weights_[i] * a[i];
      db += weights_[i] * b[i];
    }
  if (da != db) return da <=> db;
  for (std::size_t i = arity_; i-- > 0;)
    if (!in_block(i) && a[i] != b[i]) return b[i] <=> a[i];
  return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const {
  std::ostringstream os;
  os << "wdegrevlex(";
  for (std::size_t i = 0; i < arity_; ++i) os << (i ? "," : "") << weights_[i];
  os << ")";
  if (block_mask_) os << "block" << block_mask_;
  return os.str();
}

ModuleOrder::ModuleOrder(MonomialOrder base, std::vector<int> shifts, std::size_t top_rank)
    : base_(base), shifts_(std::move(shifts)), top_rank_(top_rank) {
  if (shifts_.empty()) throw std::invalid_argument("module order needs rank >= 1");
  if (top_rank_ > shifts_.size()) throw std::invalid_argument("module order: top rank exceeds rank");
}

std::strong_ordering ModuleOrder::compare(const Monomial& a, std::uint32_t ca, const Monomial& b,
                                          std::uint32_t cb) const {
  if (top_rank_) {
    const bool ta = ca < top_rank_, tb = cb < top_rank_;
    if (ta != tb) return ta ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  const auto c = base_.compare_shifted(a, shifts_[ca], b, shifts_[cb]);
  if (c != 0) return c;
  return cb <=> ca;
}

std::string ModuleOrder::key() const {
  std::ostringstream os;
  os << base_.key() << "|";
  for (std::size_t i = 0; i < shifts_.size(); ++i) os << (i ? "," : "") << shifts_[i];
  os << "|top" << top_rank_;
  return os.str();
}

std::strong_ordering compare_monomials(std::span<const int> a, std::span<const int> b, const MonomialOrder& order) {
  if (a.size() != order.arity() || b.size() != order.arity())
    throw std::invalid_argument("compare_monomials: arity mismatch");
  return order.compare(Monomial(a), Monomial(b));
}

}  // namespace wpcas
