#include "czorb/orbifold_topology.hpp"

#include "czorb/error.hpp"

namespace czorb {

namespace {

void require_table_args(std::int64_t m, std::int64_t q) {
  if (m < 2) {
    throw DomainError("teardrop tables need m >= 2 (m = 1 is the smooth sphere), got " +
                      std::to_string(m));
  }
  if (q < 0) throw DomainError("degree must be nonnegative, got " + std::to_string(q));
}

void require_order(std::int64_t m) {
  if (m < 1) throw DomainError("cone order must be >= 1, got " + std::to_string(m));
}

}  // namespace

AbelianGroup AbelianGroup::free(std::int64_t rank) {
  if (rank < 1) throw DomainError("free group rank must be >= 1");
  return AbelianGroup(Kind::Free, rank);
}

AbelianGroup AbelianGroup::cyclic(std::int64_t order) {
  if (order < 2) throw DomainError("cyclic group order must be >= 2");
  return AbelianGroup(Kind::Cyclic, order);
}

std::string AbelianGroup::to_string() const {
  switch (kind_) {
    case Kind::Trivial: return "0";
    case Kind::Free: return parameter_ == 1 ? "Z" : "Z^" + std::to_string(parameter_);
    case Kind::Cyclic: return "Z_" + std::to_string(parameter_);
  }
  return "?";
}

AbelianGroup teardrop_homology(std::int64_t m, std::int64_t q) {
  require_table_args(m, q);
  if (q == 0 || q == 2) return AbelianGroup::free(1);
  if (q % 2 == 1 && q > 1) return AbelianGroup::cyclic(m);
  return AbelianGroup::trivial();
}

AbelianGroup teardrop_cohomology(std::int64_t m, std::int64_t q) {
  require_table_args(m, q);
  if (q == 0 || q == 2) return AbelianGroup::free(1);
  if (q % 2 == 0 && q > 2) return AbelianGroup::cyclic(m);
  return AbelianGroup::trivial();
}

Rational teardrop_orbifold_chern(std::int64_t m) {
  require_order(m);
  return Rational(2) - (Rational(1) - Rational(1, m));
}

Rational p_star_factor(std::int64_t m) {
  require_order(m);
  return Rational(1, m);
}

}  // namespace czorb
