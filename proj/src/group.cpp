#include "qsing/group.hpp"

#include "qsing/errors.hpp"

#include <vector>

namespace qsing {
namespace {

[[noreturn]] void condition_violated(const std::string& which) {
  throw Error(Errc::TableTwoConditionViolated, "condition violated: " + which);
}

void require_positive_l(const Integer& l) {
  if (l < 1) condition_violated("l >= 1");
}

void require_dihedral_n(const Integer& n) {
  // D*_{4n} with n = 1 is cyclic of order 4.
  if (n < 2) condition_violated("n >= 2");
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = text.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(text.substr(start));
      return parts;
    }
    parts.push_back(text.substr(start, pos - start));
    start = pos + 1;
  }
}

[[noreturn]] void parse_failure(std::string_view text, const std::string& why) {
  throw Error(Errc::ParseError,
              "cannot parse descriptor '" + std::string(text) + "': " + why);
}

std::vector<Integer> parse_args(std::string_view whole, std::string_view args,
                                char sep, std::size_t count) {
  const auto parts = split(args, sep);
  if (parts.size() != count) {
    parse_failure(whole, "expected " + std::to_string(count) + " parameter(s)");
  }
  std::vector<Integer> values;
  for (auto part : parts) {
    auto value = parse_canonical_integer(part);
    if (!value || *value < 0) {
      parse_failure(whole, "'" + std::string(part) + "' is not a canonical nonnegative integer");
    }
    values.push_back(*value);
  }
  return values;
}

}  // namespace

GroupDescriptor make_cyclic(Integer p, Integer q) {
  return {Cyclic{std::move(p), std::move(q)}};
}
GroupDescriptor make_dihedral(Integer l, Integer n) {
  return {PhiProduct{Polyhedral::Dihedral, std::move(l), std::move(n)}};
}
GroupDescriptor make_tetrahedral(Integer l) {
  return {PhiProduct{Polyhedral::Tetrahedral, std::move(l), 0}};
}
GroupDescriptor make_octahedral(Integer l) {
  return {PhiProduct{Polyhedral::Octahedral, std::move(l), 0}};
}
GroupDescriptor make_icosahedral(Integer l) {
  return {PhiProduct{Polyhedral::Icosahedral, std::move(l), 0}};
}
GroupDescriptor make_index2_dihedral(Integer l, Integer n) {
  return {Index2Dihedral{std::move(l), std::move(n)}};
}
GroupDescriptor make_index3_tetrahedral(Integer l) {
  return {Index3Tetrahedral{std::move(l)}};
}

ValidatedGroup validate(const GroupDescriptor& desc) {
  std::visit(
      [](const auto& g) {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          if (g.p < 2 || g.q < 1 || g.q >= g.p) {
            throw Error(Errc::QOutOfRange, "cyclic action requires 1 <= q < p, got p=" +
                                               to_string(g.p) + " q=" + to_string(g.q));
          }
          if (gcd(g.p, g.q) != 1) {
            throw Error(Errc::NotCoprime, "gcd(" + to_string(g.p) + ", " + to_string(g.q) +
                                              ") = " + to_string(gcd(g.p, g.q)));
          }
        } else if constexpr (std::is_same_v<T, PhiProduct>) {
          require_positive_l(g.l);
          switch (g.factor) {
            case Polyhedral::Dihedral:
              require_dihedral_n(g.n);
              if (gcd(g.l, 2 * g.n) != 1) condition_violated("(l,2n) = 1");
              break;
            case Polyhedral::Tetrahedral:
            case Polyhedral::Octahedral:
              if (gcd(g.l, Integer(6)) != 1) condition_violated("(l,6) = 1");
              break;
            case Polyhedral::Icosahedral:
              if (gcd(g.l, Integer(30)) != 1) condition_violated("(l,30) = 1");
              break;
          }
        } else if constexpr (std::is_same_v<T, Index2Dihedral>) {
          require_positive_l(g.l);
          require_dihedral_n(g.n);
          if (gcd(g.l, Integer(2)) != 2) condition_violated("(l,2) = 2");
          if (gcd(g.l, g.n) != 1) condition_violated("(l,n) = 1");
        } else {
          require_positive_l(g.l);
          if (gcd(g.l, Integer(6)) != 3) condition_violated("(l,6) = 3");
        }
      },
      desc.kind);
  return ValidatedGroup(desc);
}

Integer order(const ValidatedGroup& group) {
  return std::visit(
      [](const auto& g) -> Integer {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return g.p;
        } else if constexpr (std::is_same_v<T, PhiProduct>) {
          switch (g.factor) {
            case Polyhedral::Dihedral: return 4 * g.l * g.n;
            case Polyhedral::Tetrahedral: return 24 * g.l;
            case Polyhedral::Octahedral: return 48 * g.l;
            case Polyhedral::Icosahedral: return 120 * g.l;
          }
          return 0;
        } else if constexpr (std::is_same_v<T, Index2Dihedral>) {
          return 4 * g.l * g.n;
        } else {
          return 24 * g.l;
        }
      },
      group.kind());
}

std::optional<Integer> l_parameter(const GroupDescriptor& desc) {
  return std::visit(
      [](const auto& g) -> std::optional<Integer> {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return std::nullopt;
        } else {
          return g.l;
        }
      },
      desc.kind);
}

std::string_view toi_family_name(ToiFamily family) {
  switch (family) {
    case ToiFamily::Tetrahedral: return "tetra";
    case ToiFamily::Index3Tetrahedral: return "idx3tetra";
    case ToiFamily::Octahedral: return "octa";
    case ToiFamily::Icosahedral: return "icosa";
  }
  return "";
}

std::optional<ToiFamily> parse_toi_family(std::string_view name) {
  for (auto f : {ToiFamily::Tetrahedral, ToiFamily::Index3Tetrahedral, ToiFamily::Octahedral,
                 ToiFamily::Icosahedral}) {
    if (toi_family_name(f) == name) return f;
  }
  return std::nullopt;
}

Integer toi_modulus(ToiFamily family) {
  switch (family) {
    case ToiFamily::Tetrahedral:
    case ToiFamily::Index3Tetrahedral: return 6;
    case ToiFamily::Octahedral: return 12;
    case ToiFamily::Icosahedral: return 30;
  }
  return 1;
}

std::string_view dispatch_name(DispatchKind kind) {
  switch (kind) {
    case DispatchKind::HyperkahlerA1: return "HyperkahlerA1";
    case DispatchKind::HyperkahlerADE: return "HyperkahlerADE";
    case DispatchKind::CyclicQ1P3: return "CyclicQ1P3";
    case DispatchKind::CyclicQ1: return "CyclicQ1";
    case DispatchKind::CyclicGeneric: return "CyclicGeneric";
    case DispatchKind::DihedralFamily: return "DihedralFamily";
    case DispatchKind::TOIFamily: return "TOIFamily";
  }
  return "";
}

DispatchClass classify(const ValidatedGroup& group) {
  return std::visit(
      [](const auto& g) -> DispatchClass {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          // SU(2) check comes first: 1/3(1,2) is A_2, not the q = 1 row.
          if (g.q == g.p - 1) {
            if (g.p == 2) return {DispatchKind::HyperkahlerA1, Integer(1), {}, {}};
            return {DispatchKind::HyperkahlerADE, g.p - 1, {}, {}};
          }
          if (g.q == 1) {
            if (g.p == 3) return {DispatchKind::CyclicQ1P3, {}, {}, {}};
            return {DispatchKind::CyclicQ1, {}, {}, {}};
          }
          return {DispatchKind::CyclicGeneric, {}, {}, {}};
        } else {
          if (g.l == 1) return {DispatchKind::HyperkahlerADE, {}, {}, {}};
          ToiFamily family{};
          if constexpr (std::is_same_v<T, Index2Dihedral>) {
            return {DispatchKind::DihedralFamily, {}, {}, {}};
          } else if constexpr (std::is_same_v<T, Index3Tetrahedral>) {
            family = ToiFamily::Index3Tetrahedral;
          } else {
            switch (g.factor) {
              case Polyhedral::Dihedral: return {DispatchKind::DihedralFamily, {}, {}, {}};
              case Polyhedral::Tetrahedral: family = ToiFamily::Tetrahedral; break;
              case Polyhedral::Octahedral: family = ToiFamily::Octahedral; break;
              case Polyhedral::Icosahedral: family = ToiFamily::Icosahedral; break;
            }
          }
          return {DispatchKind::TOIFamily, {}, family, mod_floor(g.l, toi_modulus(family))};
        }
      },
      group.kind());
}

GroupDescriptor parse_descriptor(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) parse_failure(text, "missing ':'");
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = text.substr(colon + 1);

  if (head == "cyclic") {
    auto v = parse_args(text, args, '/', 2);
    return make_cyclic(v[0], v[1]);
  }
  if (head == "dihedral") {
    auto v = parse_args(text, args, ',', 2);
    return make_dihedral(v[0], v[1]);
  }
  if (head == "idx2dihedral") {
    auto v = parse_args(text, args, ',', 2);
    return make_index2_dihedral(v[0], v[1]);
  }
  if (head == "tetra") return make_tetrahedral(parse_args(text, args, ',', 1)[0]);
  if (head == "octa") return make_octahedral(parse_args(text, args, ',', 1)[0]);
  if (head == "icosa") return make_icosahedral(parse_args(text, args, ',', 1)[0]);
  if (head == "idx3tetra") return make_index3_tetrahedral(parse_args(text, args, ',', 1)[0]);
  parse_failure(text, "unknown family '" + std::string(head) + "'");
}

std::string format_descriptor(const GroupDescriptor& desc) {
  return std::visit(
      [](const auto& g) -> std::string {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Cyclic>) {
          return "cyclic:" + to_string(g.p) + "/" + to_string(g.q);
        } else if constexpr (std::is_same_v<T, PhiProduct>) {
          switch (g.factor) {
            case Polyhedral::Dihedral:
              return "dihedral:" + to_string(g.l) + "," + to_string(g.n);
            case Polyhedral::Tetrahedral: return "tetra:" + to_string(g.l);
            case Polyhedral::Octahedral: return "octa:" + to_string(g.l);
            case Polyhedral::Icosahedral: return "icosa:" + to_string(g.l);
          }
          return "";
        } else if constexpr (std::is_same_v<T, Index2Dihedral>) {
          return "idx2dihedral:" + to_string(g.l) + "," + to_string(g.n);
        } else {
          return "idx3tetra:" + to_string(g.l);
        }
      },
      desc.kind);
}

}  // namespace qsing
