#pragma once

#include <cstdint>
#include <string>

namespace richflow {

enum class GroupKind { zk, z2, z6, zkxz2, integer };

/// A group element. Single-coordinate groups use `first` only; the second
/// coordinate is the Z2 factor of Zk x Z2.
struct Element {
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend bool operator==(const Element&, const Element&) = default;
};

/// One of the five value groups flows live in. For `integer`, the modulus
/// slot holds the flow bound B (values must satisfy |x| < B); arithmetic is
/// plain integer arithmetic.
class Group {
 public:
  static Group zk(std::int64_t k);
  static Group z2() { return Group(GroupKind::z2, 2); }
  static Group z6() { return Group(GroupKind::z6, 6); }
  static Group zkxz2(std::int64_t k);
  static Group integer(std::int64_t bound);

  [[nodiscard]] GroupKind kind() const { return kind_; }
  /// k for Zk and Zk x Z2, 2 for Z2, 6 for Z6, the bound for integer flows.
  [[nodiscard]] std::int64_t modulus() const { return modulus_; }
  [[nodiscard]] bool is_integer() const { return kind_ == GroupKind::integer; }
  [[nodiscard]] bool is_product() const { return kind_ == GroupKind::zkxz2; }

  [[nodiscard]] Element normalize(Element x) const;
  [[nodiscard]] Element add(Element a, Element b) const;
  [[nodiscard]] Element negate(Element a) const;
  [[nodiscard]] Element scale(std::int64_t c, Element a) const;
  [[nodiscard]] bool is_zero(Element a) const { return normalize(a) == Element{}; }
  /// Equality in the group (after reduction).
  [[nodiscard]] bool equal(Element a, Element b) const { return normalize(a) == normalize(b); }

  /// Tag used in certificate files: "zk", "z2", "z6", "zkxz2", "int".
  [[nodiscard]] std::string tag() const;
  [[nodiscard]] std::string describe() const;

  /// Same arithmetic: identical modular group, or both integer.
  [[nodiscard]] bool compatible_with(const Group& other) const;

  friend bool operator==(const Group&, const Group&) = default;

 private:
  Group(GroupKind kind, std::int64_t modulus) : kind_(kind), modulus_(modulus) {}

  GroupKind kind_ = GroupKind::integer;
  std::int64_t modulus_ = 2;
};

/// Least nonnegative residue.
inline std::int64_t mod_floor(std::int64_t x, std::int64_t m) {
  const std::int64_t r = x % m;
  return r < 0 ? r + m : r;
}

}  // namespace richflow
