#include "richflow/group.hpp"

#include "richflow/errors.hpp"

namespace richflow {

Group Group::zk(std::int64_t k) {
  if (k < 2) throw PreconditionError("Zk needs k >= 2");
  return Group(GroupKind::zk, k);
}

Group Group::zkxz2(std::int64_t k) {
  if (k < 2) throw PreconditionError("Zk x Z2 needs k >= 2");
  return Group(GroupKind::zkxz2, k);
}

Group Group::integer(std::int64_t bound) {
  if (bound < 1) throw PreconditionError("integer flow bound must be positive");
  return Group(GroupKind::integer, bound);
}

Element Group::normalize(Element x) const {
  switch (kind_) {
    case GroupKind::integer:
      return {x.first, 0};
    case GroupKind::zkxz2:
      return {mod_floor(x.first, modulus_), mod_floor(x.second, 2)};
    default:
      return {mod_floor(x.first, modulus_), 0};
  }
}

Element Group::add(Element a, Element b) const {
  return normalize({a.first + b.first, a.second + b.second});
}

Element Group::negate(Element a) const { return normalize({-a.first, -a.second}); }

Element Group::scale(std::int64_t c, Element a) const {
  if (kind_ == GroupKind::integer) return {c * a.first, 0};
  const Element n = normalize(a);
  return normalize({mod_floor(c, modulus_) * n.first, mod_floor(c, 2) * n.second});
}

std::string Group::tag() const {
  switch (kind_) {
    case GroupKind::zk:
      return "zk";
    case GroupKind::z2:
      return "z2";
    case GroupKind::z6:
      return "z6";
    case GroupKind::zkxz2:
      return "zkxz2";
    case GroupKind::integer:
      return "int";
  }
  return "?";
}

std::string Group::describe() const {
  switch (kind_) {
    case GroupKind::zk:
      return "Z" + std::to_string(modulus_);
    case GroupKind::z2:
      return "Z2";
    case GroupKind::z6:
      return "Z6";
    case GroupKind::zkxz2:
      return "Z" + std::to_string(modulus_) + "xZ2";
    case GroupKind::integer:
      return "Int(<" + std::to_string(modulus_) + ")";
  }
  return "?";
}

bool Group::compatible_with(const Group& other) const {
  if (is_integer() || other.is_integer()) return is_integer() && other.is_integer();
  // Z2 and Z6 are the same arithmetic as Zk with k = 2 or 6.
  const bool product = is_product();
  return product == other.is_product() && modulus_ == other.modulus_;
}

}  // namespace richflow
