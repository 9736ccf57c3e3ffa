#pragma once

#include "qsing/integer.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace qsing {

/// The 1/p(1,q) action (z1, z2) -> (w z1, w^q z2), w a primitive p-th root.
struct Cyclic {
  Integer p;
  Integer q;
  bool operator==(const Cyclic&) const = default;
};

enum class Polyhedral { Dihedral, Tetrahedral, Octahedral, Icosahedral };

/// phi(L(1,2l) x G) with G one of the binary polyhedral groups.
/// `n` is only meaningful for the dihedral factor D*_{4n}; it is 0 otherwise.
struct PhiProduct {
  Polyhedral factor;
  Integer l;
  Integer n;
  bool operator==(const PhiProduct&) const = default;
};

/// Index-2 diagonal subgroup of phi(L(1,4l) x D*_{4n}).
struct Index2Dihedral {
  Integer l;
  Integer n;
  bool operator==(const Index2Dihedral&) const = default;
};

/// Index-3 diagonal subgroup of phi(L(1,6l) x T*).
struct Index3Tetrahedral {
  Integer l;
  bool operator==(const Index3Tetrahedral&) const = default;
};

using GroupKind = std::variant<Cyclic, PhiProduct, Index2Dihedral, Index3Tetrahedral>;

struct GroupDescriptor {
  GroupKind kind;
  bool operator==(const GroupDescriptor&) const = default;

  bool is_cyclic() const { return std::holds_alternative<Cyclic>(kind); }
};

GroupDescriptor make_cyclic(Integer p, Integer q);
GroupDescriptor make_dihedral(Integer l, Integer n);
GroupDescriptor make_tetrahedral(Integer l);
GroupDescriptor make_octahedral(Integer l);
GroupDescriptor make_icosahedral(Integer l);
GroupDescriptor make_index2_dihedral(Integer l, Integer n);
GroupDescriptor make_index3_tetrahedral(Integer l);

/// A descriptor whose Table-2 / coprimality conditions have been checked.
/// Only `validate` can produce one.
class ValidatedGroup {
 public:
  const GroupDescriptor& descriptor() const { return descriptor_; }
  const GroupKind& kind() const { return descriptor_.kind; }

 private:
  explicit ValidatedGroup(GroupDescriptor d) : descriptor_(std::move(d)) {}
  friend ValidatedGroup validate(const GroupDescriptor& desc);

  GroupDescriptor descriptor_;
};

/// Throws Error{NotCoprime | QOutOfRange | TableTwoConditionViolated}.
ValidatedGroup validate(const GroupDescriptor& desc);

Integer order(const ValidatedGroup& group);

/// The l parameter of a non-cyclic descriptor; nullopt for cyclic groups.
std::optional<Integer> l_parameter(const GroupDescriptor& desc);

/// Families whose moduli dimension comes from the closed forms for l > 1.
enum class ToiFamily { Tetrahedral, Index3Tetrahedral, Octahedral, Icosahedral };

std::string_view toi_family_name(ToiFamily family);
std::optional<ToiFamily> parse_toi_family(std::string_view name);

/// Modulus of the congruence classes used for the family's l-parameter.
Integer toi_modulus(ToiFamily family);

enum class DispatchKind {
  HyperkahlerA1,
  HyperkahlerADE,
  CyclicQ1P3,
  CyclicQ1,
  CyclicGeneric,
  DihedralFamily,
  TOIFamily,
};

struct DispatchClass {
  DispatchKind kind;
  /// Number of exceptional curves for the A_k case; D/E values need divisor data.
  std::optional<Integer> k;
  std::optional<ToiFamily> family;
  /// l mod toi_modulus(family), for TOIFamily.
  std::optional<Integer> residue;
};

std::string_view dispatch_name(DispatchKind kind);

DispatchClass classify(const ValidatedGroup& group);

/// `cyclic:7/3`, `dihedral:l,n`, `tetra:l`, `octa:l`, `icosa:l`,
/// `idx2dihedral:l,n`, `idx3tetra:l`. Non-canonical integers are rejected so
/// that format_descriptor(parse_descriptor(s)) == s. Throws Error{ParseError}.
GroupDescriptor parse_descriptor(std::string_view text);
std::string format_descriptor(const GroupDescriptor& desc);

}  // namespace qsing
