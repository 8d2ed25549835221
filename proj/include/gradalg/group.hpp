#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gradalg {

enum class GroupKind { trivial, cyclic, table, free, product };

/// Canonical encoding of a group element; meaning depends on the owning Group.
///   trivial: empty
///   cyclic:  {residue}
///   table:   {index}
///   free:    reduced word, letter +i for a_i and -i for a_i^{-1}
///   product: for each factor, {length, code...}
/// Equal elements have identical codes, so the code is directly hashable.
class GroupElem {
 public:
  GroupElem() = default;
  explicit GroupElem(std::vector<std::int32_t> code) : code_(std::move(code)) {}

  const std::vector<std::int32_t>& code() const { return code_; }

  friend bool operator==(const GroupElem&, const GroupElem&) = default;
  friend auto operator<=>(const GroupElem& a, const GroupElem& b) { return a.code_ <=> b.code_; }

 private:
  std::vector<std::int32_t> code_;
};

struct GroupElemHash {
  std::size_t operator()(const GroupElem& g) const noexcept;
};

/// Immutable grading group. Copies share the description.
class Group {
 public:
  static Group trivial();
  static Group cyclic(std::int32_t n);
  /// mult[i][j] = index of i*j. Group axioms are verified; the inverse table,
  /// when given, must agree with the one derived from mult.
  static Group table(std::vector<std::vector<std::int32_t>> mult,
                     std::optional<std::vector<std::int32_t>> inverse = std::nullopt);
  static Group free(std::int32_t rank);
  static Group product(std::vector<Group> factors);

  GroupKind kind() const;
  /// nullopt for infinite groups.
  std::optional<std::size_t> order() const;
  std::int32_t cyclic_order() const;
  std::int32_t free_rank() const;
  const std::vector<std::vector<std::int32_t>>& table_mult() const;
  const std::vector<Group>& factors() const;

  GroupElem identity() const;
  GroupElem mul(const GroupElem& a, const GroupElem& b) const;
  GroupElem inv(const GroupElem& a) const;
  bool is_identity(const GroupElem& a) const { return a == identity(); }

  /// Throws std::invalid_argument if the code is not a canonical element of this group.
  void validate(const GroupElem& a) const;
  bool is_element(const GroupElem& a) const;

  GroupElem cyclic_elem(std::int64_t residue) const;
  GroupElem table_elem(std::int32_t index) const;
  /// Reduces the word. Letters are +i / -i, 1 <= i <= rank.
  GroupElem free_word(const std::vector<std::int32_t>& letters) const;
  GroupElem product_elem(const std::vector<GroupElem>& parts) const;
  std::vector<GroupElem> components(const GroupElem& a) const;

  /// All elements of a finite group, in canonical order. Throws for infinite groups.
  std::vector<GroupElem> elements() const;

  /// Human-readable rendering ("e", "1", "a1.a2'", "(1,0)").
  std::string to_string(const GroupElem& a) const;

  friend bool operator==(const Group& a, const Group& b);

 private:
  struct Impl;
  explicit Group(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

} // namespace gradalg
